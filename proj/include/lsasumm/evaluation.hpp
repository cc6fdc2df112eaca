#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

// ROUGE-N: clipped n-gram recall/precision of a candidate summary against
// one or more references, with optional word truncation of the candidate.
namespace lsasumm {

struct RougeScore {
  int order = 1;
  double recall = 0.0;
  double precision = 0.0;
  double f1 = 0.0;
  std::vector<double> per_reference;  // recall against each reference
};

struct EvalConfig {
  std::vector<int> orders = {1, 2};             // subset of 1..4
  std::optional<std::size_t> truncate_words;    // applied to the candidate only
  std::function<std::string(const std::string&)> normalize;  // per-token hook, both sides
  bool case_fold = true;
};

// Whitespace split with edge punctuation stripped, Arabic combining
// sequences composed, optional case folding and per-token normalization.
std::vector<std::string> rouge_tokenize(std::string_view text, const EvalConfig& config);

// Contiguous n-token windows with multiplicity. Keys join tokens with an
// unlikely separator byte.
std::unordered_map<std::string, int> ngram_counts(std::span<const std::string> tokens, int order);

// Mean-over-references recall and precision with clipped overlap counts.
// Throws NoReferencesError when no non-empty reference is supplied; an empty
// reference among non-empty ones contributes zero recall with a warning.
std::vector<RougeScore> rouge_n(const std::string& candidate,
                                const std::vector<std::string>& references,
                                const EvalConfig& config = {});

}  // namespace lsasumm
