#pragma once

#include <Eigen/Dense>
#include <cstddef>

// Thin SVD of the input matrix with a deterministic sign convention, plus
// singular-value filtering and the per-topic sentence thresholds P_k.
namespace lsasumm {

struct SvdResult {
  Eigen::MatrixXd u;                // term x concept
  Eigen::VectorXd singular_values;  // nonincreasing, >= 0
  Eigen::MatrixXd vt;               // concept x sentence

  Eigen::Index concepts() const { return singular_values.size(); }
};

struct FilteredSigma {
  Eigen::VectorXd values;  // singular values with sub-threshold entries zeroed
  double alpha = 0.5;
  double trace = 0.0;      // sum of surviving values

  Eigen::Index surviving() const;
};

// Thin SVD, r = min(m, n). Sign convention: the largest-magnitude entry of
// each vt row is made nonnegative, with the matching u column flipped in
// tandem. Throws NumericalFailureError when the decomposition fails or the
// input is not finite.
SvdResult decompose(const Eigen::MatrixXd& matrix);

// Zeroes singular values strictly below alpha * max; boundary values
// survive. alpha must lie in [0, 1].
FilteredSigma filter_sigma(const Eigen::VectorXd& singular_values, double alpha = 0.5);

// Sentence-topic threshold P_k = (sigma_k / trace) * sentence_count, zero for
// filtered concepts. Throws DegenerateSpectrumError when the trace is zero.
double topic_threshold(const FilteredSigma& sigma, Eigen::Index concept_index,
                       std::size_t sentence_count);

}  // namespace lsasumm
