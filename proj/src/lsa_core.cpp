#include "lsasumm/lsa_core.hpp"

#include <Eigen/SVD>
#include <stdexcept>

#include "lsasumm/errors.hpp"

namespace lsasumm {

Eigen::Index FilteredSigma::surviving() const {
  Eigen::Index count = 0;
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    if (values(k) > 0.0) ++count;
  }
  return count;
}

SvdResult decompose(const Eigen::MatrixXd& matrix) {
  if (matrix.rows() < 1 || matrix.cols() < 1) {
    throw std::invalid_argument("decompose requires a nonempty matrix");
  }
  if (!matrix.allFinite()) {
    throw NumericalFailureError("input matrix contains non-finite entries");
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(matrix, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success) {
    throw NumericalFailureError("SVD did not converge");
  }

  SvdResult result;
  result.u = svd.matrixU();
  result.singular_values = svd.singularValues();
  result.vt = svd.matrixV().transpose();
  if (!result.u.allFinite() || !result.singular_values.allFinite() || !result.vt.allFinite()) {
    throw NumericalFailureError("SVD produced non-finite values");
  }

  // Fix the sign ambiguity: make the largest-magnitude entry of each vt row
  // (first occurrence on ties) nonnegative.
  for (Eigen::Index k = 0; k < result.vt.rows(); ++k) {
    Eigen::Index pivot = 0;
    double best = -1.0;
    for (Eigen::Index j = 0; j < result.vt.cols(); ++j) {
      const double magnitude = std::abs(result.vt(k, j));
      if (magnitude > best) {
        best = magnitude;
        pivot = j;
      }
    }
    if (result.vt(k, pivot) < 0.0) {
      result.vt.row(k) = -result.vt.row(k);
      result.u.col(k) = -result.u.col(k);
    }
  }
  return result;
}

FilteredSigma filter_sigma(const Eigen::VectorXd& singular_values, double alpha) {
  if (alpha < 0.0 || alpha > 1.0) {
    throw std::invalid_argument("alpha must lie in [0, 1]");
  }
  FilteredSigma out;
  out.alpha = alpha;
  out.values = singular_values;
  if (singular_values.size() == 0) return out;
  const double threshold = alpha * singular_values.maxCoeff();
  double trace = 0.0;
  for (Eigen::Index k = 0; k < out.values.size(); ++k) {
    if (out.values(k) < threshold) {
      out.values(k) = 0.0;
    } else {
      trace += out.values(k);
    }
  }
  out.trace = trace;
  return out;
}

double topic_threshold(const FilteredSigma& sigma, Eigen::Index concept_index,
                       std::size_t sentence_count) {
  if (sigma.trace <= 0.0) {
    throw DegenerateSpectrumError("all singular values filtered to zero");
  }
  if (concept_index < 0 || concept_index >= sigma.values.size()) {
    throw std::invalid_argument("concept index out of range");
  }
  return sigma.values(concept_index) / sigma.trace * static_cast<double>(sentence_count);
}

}  // namespace lsasumm
