#include "lsasumm/selection.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <unordered_set>

#include "lsasumm/errors.hpp"

namespace lsasumm {

namespace {

Summary finish(const Document& doc, std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  Summary summary;
  summary.sentence_indices = std::move(indices);
  for (std::size_t idx : summary.sentence_indices) {
    if (!summary.rendered.empty()) summary.rendered += ' ';
    summary.rendered += doc.sentences[idx].surface;
  }
  return summary;
}

// Signed argmax over live columns; ties go to the smallest index.
std::optional<Eigen::Index> argmax_live(const Eigen::MatrixXd& vt, Eigen::Index row,
                                        const std::vector<char>& live) {
  std::optional<Eigen::Index> best;
  for (Eigen::Index j = 0; j < vt.cols(); ++j) {
    if (!live[static_cast<std::size_t>(j)]) continue;
    if (!best || vt(row, j) > vt(row, *best)) best = j;
  }
  return best;
}

void check_dimensions(const SvdResult& svd, const Document& doc) {
  if (static_cast<std::size_t>(svd.vt.cols()) != doc.sentence_count()) {
    throw std::invalid_argument("SVD sentence dimension does not match document");
  }
  if (svd.u.cols() != svd.concepts() || svd.vt.rows() != svd.concepts()) {
    throw std::invalid_argument("inconsistent SVD dimensions");
  }
}

// Term ids of the strongest `count` entries of u column `concept`, signed
// comparison, ties to the smaller term id.
std::vector<std::size_t> top_terms(const Eigen::MatrixXd& u, Eigen::Index concept_col,
                                   std::size_t count) {
  std::vector<std::size_t> ids(static_cast<std::size_t>(u.rows()));
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  const std::size_t take = std::min(count, ids.size());
  std::partial_sort(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(take), ids.end(),
                    [&](std::size_t a, std::size_t b) {
                      const double va = u(static_cast<Eigen::Index>(a), concept_col);
                      const double vb = u(static_cast<Eigen::Index>(b), concept_col);
                      if (va != vb) return va > vb;
                      return a < b;
                    });
  ids.resize(take);
  return ids;
}

}  // namespace

Summary ess_lsa_select(const SvdResult& svd, const FilteredSigma& sigma, const Document& doc,
                       std::size_t budget, const SelectionOptions& options,
                       SelectionTrace* trace) {
  check_dimensions(svd, doc);
  if (static_cast<std::size_t>(svd.u.rows()) != doc.term_count()) {
    throw std::invalid_argument("SVD term dimension does not match document vocabulary");
  }
  const std::size_t n = doc.sentence_count();
  budget = std::min(budget, n);
  if (budget == 0) return finish(doc, {});
  if (sigma.trace <= 0.0) {
    throw DegenerateSpectrumError("cannot select sentences from an all-zero spectrum");
  }

  // Surviving singular values form a prefix of the nonincreasing spectrum.
  const Eigen::Index concept_count = sigma.surviving();

  // Per-sentence sets of term ids, for covering the representative terms.
  std::vector<std::unordered_set<std::size_t>> sentence_terms(n);
  for (const Sentence& sentence : doc.sentences) {
    for (const std::string& term : sentence.terms) {
      const auto it = doc.term_ids.find(term);
      if (it != doc.term_ids.end()) sentence_terms[sentence.index].insert(it->second);
    }
  }

  std::vector<char> live(n, 1);
  std::vector<std::size_t> taken_for_concept(static_cast<std::size_t>(svd.concepts()), 0);
  std::vector<std::size_t> selected;
  selected.reserve(budget);

  const auto record = [&](Eigen::Index concept_row, std::size_t sentence, double threshold,
                          bool gated) {
    if (trace) trace->picks.push_back({concept_row, sentence, threshold, gated});
  };

  Eigen::Index k = 0;
  while (selected.size() < budget) {
    if (k >= concept_count) k = 0;  // budget outlives the spectrum: wrap

    const auto pick = argmax_live(svd.vt, k, live);
    if (!pick) break;  // no live sentence left
    const auto c = static_cast<std::size_t>(*pick);
    const double threshold = topic_threshold(sigma, k, n);

    live[c] = 0;
    ++taken_for_concept[static_cast<std::size_t>(k)];
    selected.push_back(c);
    record(k, c, threshold, false);

    std::vector<std::size_t> uncovered = top_terms(svd.u, k, options.representative_terms);
    std::erase_if(uncovered,
                  [&](std::size_t t) { return sentence_terms[c].contains(t); });

    while (!uncovered.empty()) {
      if (taken_for_concept[static_cast<std::size_t>(k)] > threshold ||
          selected.size() >= budget) {
        break;
      }
      const auto next = argmax_live(svd.vt, k, live);
      if (!next) break;
      const auto c2 = static_cast<std::size_t>(*next);
      live[c2] = 0;
      ++taken_for_concept[static_cast<std::size_t>(k)];
      selected.push_back(c2);
      record(k, c2, threshold, true);
      std::erase_if(uncovered,
                    [&](std::size_t t) { return sentence_terms[c2].contains(t); });
    }
    ++k;
  }
  return finish(doc, std::move(selected));
}

Summary lead_select(const Document& doc, std::size_t budget) {
  std::vector<std::size_t> indices;
  const std::size_t take = std::min(budget, doc.sentence_count());
  indices.reserve(take);
  for (std::size_t j = 0; j < take; ++j) indices.push_back(j);
  return finish(doc, std::move(indices));
}

Summary gong_liu_select(const SvdResult& svd, const Document& doc, std::size_t budget) {
  check_dimensions(svd, doc);
  const std::size_t n = doc.sentence_count();
  budget = std::min(budget, n);
  std::vector<char> live(n, 1);
  std::vector<std::size_t> selected;
  selected.reserve(budget);
  Eigen::Index k = 0;
  while (selected.size() < budget) {
    const auto pick = argmax_live(svd.vt, k, live);
    if (!pick) break;
    live[static_cast<std::size_t>(*pick)] = 0;
    selected.push_back(static_cast<std::size_t>(*pick));
    k = (k + 1) % svd.concepts();
  }
  return finish(doc, std::move(selected));
}

Summary steinberger_select(const SvdResult& svd, const FilteredSigma& sigma, const Document& doc,
                           std::size_t budget) {
  check_dimensions(svd, doc);
  const std::size_t n = doc.sentence_count();
  budget = std::min(budget, n);
  if (budget == 0) return finish(doc, {});
  if (sigma.trace <= 0.0) {
    throw DegenerateSpectrumError("cannot select sentences from an all-zero spectrum");
  }

  std::vector<double> scores(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double sum = 0.0;
    for (Eigen::Index k = 0; k < svd.concepts(); ++k) {
      if (sigma.values(k) <= 0.0) continue;
      const double weighted = svd.vt(k, static_cast<Eigen::Index>(j)) * sigma.values(k);
      sum += weighted * weighted;
    }
    scores[j] = std::sqrt(sum);
  }

  std::vector<std::size_t> order(n);
  for (std::size_t j = 0; j < n; ++j) order[j] = j;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return a < b;
  });
  order.resize(budget);
  return finish(doc, std::move(order));
}

}  // namespace lsasumm
