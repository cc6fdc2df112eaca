#include "lsasumm/experiment.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "lsasumm/errors.hpp"

namespace lsasumm {

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

struct Cursor {
  std::string text;
  std::size_t pos = 0;

  bool eat(std::string_view token) {
    if (text.compare(pos, token.size(), token) == 0) {
      pos += token.size();
      return true;
    }
    return false;
  }
  std::string rest() const { return text.substr(pos); }
};

[[noreturn]] void fail(const Cursor& cursor, const std::string& expected) {
  throw InvalidCodeError("invalid experiment code '" + cursor.text + "': expected " + expected +
                         " at '" + cursor.rest() + "'");
}

}  // namespace

ExperimentCode parse_experiment_code(std::string_view code) {
  Cursor cursor{upper(code)};
  ExperimentCode out;

  if (cursor.eat("R")) {
    out.morphology = Morphology::Root;
  } else if (cursor.eat("S")) {
    out.morphology = Morphology::Stem;
  } else if (cursor.eat("W")) {
    out.morphology = Morphology::Word;
  } else {
    fail(cursor, "morphology R|S|W");
  }

  if (cursor.eat("BR")) {
    out.local = LocalScheme::Binary;
  } else if (cursor.eat("TF")) {
    out.local = LocalScheme::TermFrequency;
  } else if (cursor.eat("AW")) {
    out.local = LocalScheme::Augmented;
  } else if (cursor.eat("LW")) {
    out.local = LocalScheme::Logarithmic;
  } else {
    fail(cursor, "local scheme BR|TF|AW|LW");
  }

  if (cursor.eat("ISF")) {
    out.global = GlobalScheme::InverseSentenceFrequency;
  } else if (cursor.eat("NG")) {
    out.global = GlobalScheme::None;
  } else if (cursor.eat("EF")) {
    out.global = GlobalScheme::Entropy;
  } else {
    fail(cursor, "global scheme NG|ISF|EF");
  }

  out.pos = cursor.eat("POS");

  if (cursor.eat("NOADJ")) {
    out.adjacency = Adjacency::None;
  } else if (cursor.eat("2ADJ")) {
    out.adjacency = Adjacency::Two;
  } else if (cursor.eat("4ADJ")) {
    out.adjacency = Adjacency::Four;
  } else {
    fail(cursor, "adjacency NOADJ|2ADJ|4ADJ");
  }

  if (cursor.pos != cursor.text.size()) fail(cursor, "end of code");
  return out;
}

std::string to_string(const ExperimentCode& code) {
  std::string out;
  switch (code.morphology) {
    case Morphology::Root: out += 'R'; break;
    case Morphology::Stem: out += 'S'; break;
    case Morphology::Word: out += 'W'; break;
  }
  switch (code.local) {
    case LocalScheme::Binary: out += "BR"; break;
    case LocalScheme::TermFrequency: out += "TF"; break;
    case LocalScheme::Augmented: out += "AW"; break;
    case LocalScheme::Logarithmic: out += "LW"; break;
  }
  switch (code.global) {
    case GlobalScheme::None: out += "NG"; break;
    case GlobalScheme::InverseSentenceFrequency: out += "ISF"; break;
    case GlobalScheme::Entropy: out += "EF"; break;
  }
  if (code.pos) out += "POS";
  switch (code.adjacency) {
    case Adjacency::None: out += "NOADJ"; break;
    case Adjacency::Two: out += "2ADJ"; break;
    case Adjacency::Four: out += "4ADJ"; break;
  }
  return out;
}

Budget Budget::from_ratio(double ratio) {
  if (!(ratio > 0.0) || ratio > 1.0) {
    throw std::invalid_argument("compression ratio must lie in (0, 1]");
  }
  Budget b;
  b.value_ = ratio;
  return b;
}

Budget Budget::from_sentences(std::size_t count) {
  Budget b;
  b.value_ = count;
  return b;
}

std::size_t Budget::resolve(std::size_t sentence_count) const {
  if (is_ratio()) {
    const auto wanted =
        static_cast<std::size_t>(std::ceil(ratio() * static_cast<double>(sentence_count)));
    return std::min(std::max<std::size_t>(wanted, 1), sentence_count);
  }
  return std::min(sentences(), sentence_count);
}

std::size_t budget_for(std::size_t sentence_count, const Budget& budget) {
  return budget.resolve(sentence_count);
}

}  // namespace lsasumm
