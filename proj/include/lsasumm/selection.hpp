#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lsasumm/lsa_core.hpp"
#include "lsasumm/text_pipeline.hpp"

// Sentence selection from SVD output: the enhanced per-topic selector that
// combines term and sentence descriptions, plus lead, one-per-concept and
// sigma-weighted-norm baselines.
namespace lsasumm {

struct Summary {
  std::vector<std::size_t> sentence_indices;  // ascending document order
  std::string rendered;                       // selected surfaces joined by spaces

  std::size_t size() const { return sentence_indices.size(); }
};

struct SelectionOptions {
  std::size_t representative_terms = 3;  // size of the per-topic term set T
};

// Optional instrumentation: which concept picked each sentence and whether
// the pick came from the threshold-gated inner loop.
struct SelectionTrace {
  struct Pick {
    Eigen::Index concept_index;
    std::size_t sentence;
    double threshold;  // P_k at the time of the pick
    bool gated;        // true for inner-loop picks
  };
  std::vector<Pick> picks;
};

// Per-topic selection: take the strongest sentence of the current concept,
// then keep taking next-strongest sentences while the concept's
// representative terms remain uncovered and the count stays within the
// sentence-topic threshold. Budgets larger than the document are clamped.
// Ties break to the smallest sentence index; wrapped concepts continue over
// the remaining sentences.
Summary ess_lsa_select(const SvdResult& svd, const FilteredSigma& sigma, const Document& doc,
                       std::size_t budget, const SelectionOptions& options = {},
                       SelectionTrace* trace = nullptr);

// First min(budget, n) sentences.
Summary lead_select(const Document& doc, std::size_t budget);

// One sentence per concept row, wrapping past the spectrum when the budget
// exceeds it.
Summary gong_liu_select(const SvdResult& svd, const Document& doc, std::size_t budget);

// Ranks sentences by sqrt(sum_k (vt_kj * sigma_k)^2) over surviving
// concepts.
Summary steinberger_select(const SvdResult& svd, const FilteredSigma& sigma, const Document& doc,
                           std::size_t budget);

}  // namespace lsasumm
