#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include "lsasumm/text_pipeline.hpp"
#include "lsasumm/weighting.hpp"

// Experiment codes name a full weighting recipe in one string:
//   [R|S|W] [BR|TF|AW|LW] [NG|ISF|EF] [POS]? [NOADJ|2ADJ|4ADJ]
// e.g. "RAWEFPOS4ADJ" = root morphology, augmented x entropy weighting,
// POS filtering, four-adjacent window.
namespace lsasumm {

struct ExperimentCode {
  Morphology morphology = Morphology::Word;
  LocalScheme local = LocalScheme::Augmented;
  GlobalScheme global = GlobalScheme::Entropy;
  bool pos = false;
  Adjacency adjacency = Adjacency::None;

  bool operator==(const ExperimentCode&) const = default;
};

// Case-insensitive parse. Throws InvalidCodeError naming the first
// unparsable segment.
ExperimentCode parse_experiment_code(std::string_view code);

// Canonical rendering; parse(to_string(c)) == c for every valid code.
std::string to_string(const ExperimentCode& code);

// Summary budget: either a compression ratio in (0, 1] or an absolute
// sentence count.
class Budget {
 public:
  static Budget from_ratio(double ratio);
  static Budget from_sentences(std::size_t count);

  bool is_ratio() const { return std::holds_alternative<double>(value_); }
  double ratio() const { return std::get<double>(value_); }
  std::size_t sentences() const { return std::get<std::size_t>(value_); }

  // Ratio mode: max(1, ceil(ratio * n)). Absolute mode: clamped to n.
  std::size_t resolve(std::size_t sentence_count) const;

 private:
  std::variant<double, std::size_t> value_ = 0.3;
};

std::size_t budget_for(std::size_t sentence_count, const Budget& budget);

}  // namespace lsasumm
