#include "lsasumm/evaluation.hpp"

#include <algorithm>
#include <iostream>
#include <stdexcept>

#include "lsasumm/errors.hpp"
#include "lsasumm/text_pipeline.hpp"
#include "lsasumm/utf8.hpp"

namespace lsasumm {

namespace {

constexpr char kGramSeparator = '\x1e';

void validate(const EvalConfig& config) {
  if (config.orders.empty()) throw std::invalid_argument("at least one n-gram order required");
  for (int n : config.orders) {
    if (n < 1 || n > 4) throw std::invalid_argument("n-gram orders must lie in 1..4");
  }
  if (config.truncate_words && *config.truncate_words == 0) {
    throw std::invalid_argument("truncate_words must be positive");
  }
}

int total_count(const std::unordered_map<std::string, int>& counts) {
  int total = 0;
  for (const auto& [gram, count] : counts) total += count;
  return total;
}

}  // namespace

std::vector<std::string> rouge_tokenize(std::string_view text, const EvalConfig& config) {
  std::vector<std::string> tokens = tokenize(utf8::compose_arabic(text));
  if (config.case_fold) {
    for (std::string& token : tokens) token = utf8::fold_case(token);
  }
  if (config.normalize) {
    for (std::string& token : tokens) token = config.normalize(token);
    std::erase_if(tokens, [](const std::string& t) { return t.empty(); });
  }
  return tokens;
}

std::unordered_map<std::string, int> ngram_counts(std::span<const std::string> tokens,
                                                  int order) {
  std::unordered_map<std::string, int> counts;
  if (order < 1 || tokens.size() < static_cast<std::size_t>(order)) return counts;
  for (std::size_t i = 0; i + order <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (int k = 1; k < order; ++k) {
      key += kGramSeparator;
      key += tokens[i + k];
    }
    ++counts[key];
  }
  return counts;
}

std::vector<RougeScore> rouge_n(const std::string& candidate,
                                const std::vector<std::string>& references,
                                const EvalConfig& config) {
  validate(config);
  if (references.empty()) throw NoReferencesError("no reference summaries supplied");

  std::vector<std::string> cand_tokens = rouge_tokenize(candidate, config);
  if (config.truncate_words && cand_tokens.size() > *config.truncate_words) {
    cand_tokens.resize(*config.truncate_words);
  }

  std::vector<std::vector<std::string>> ref_tokens;
  ref_tokens.reserve(references.size());
  bool any_nonempty = false;
  for (std::size_t r = 0; r < references.size(); ++r) {
    ref_tokens.push_back(rouge_tokenize(references[r], config));
    if (!ref_tokens.back().empty()) {
      any_nonempty = true;
    } else {
      std::cerr << "warning: reference " << r + 1 << " is empty; it contributes zero recall\n";
    }
  }
  if (!any_nonempty) throw NoReferencesError("every reference summary is empty");

  std::vector<RougeScore> scores;
  scores.reserve(config.orders.size());
  for (int order : config.orders) {
    const auto cand_counts = ngram_counts(cand_tokens, order);
    const int cand_total = total_count(cand_counts);

    RougeScore score;
    score.order = order;
    double recall_sum = 0.0;
    double precision_sum = 0.0;
    for (const auto& tokens : ref_tokens) {
      const auto ref_counts = ngram_counts(tokens, order);
      const int ref_total = total_count(ref_counts);
      int overlap = 0;
      for (const auto& [gram, count] : ref_counts) {
        const auto it = cand_counts.find(gram);
        if (it != cand_counts.end()) overlap += std::min(count, it->second);
      }
      const double recall = ref_total > 0 ? static_cast<double>(overlap) / ref_total : 0.0;
      const double precision = cand_total > 0 ? static_cast<double>(overlap) / cand_total : 0.0;
      score.per_reference.push_back(recall);
      recall_sum += recall;
      precision_sum += precision;
    }
    const auto count = static_cast<double>(ref_tokens.size());
    score.recall = recall_sum / count;
    score.precision = precision_sum / count;
    score.f1 = (score.recall + score.precision) > 0.0
                   ? 2.0 * score.recall * score.precision / (score.recall + score.precision)
                   : 0.0;
    scores.push_back(std::move(score));
  }
  return scores;
}

}  // namespace lsasumm
