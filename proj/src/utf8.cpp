#include "lsasumm/utf8.hpp"

#include <array>

namespace lsasumm::utf8 {

namespace {
constexpr char32_t kReplacement = 0xFFFD;
}  // namespace

std::u32string decode(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(text[k]); };
  while (i < text.size()) {
    unsigned char b0 = byte(i);
    if (b0 < 0x80) {
      out.push_back(b0);
      ++i;
      continue;
    }
    int len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    if (i + len > text.size()) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    bool valid = true;
    for (int k = 1; k < len; ++k) {
      unsigned char bk = byte(i + k);
      if ((bk & 0xC0) != 0x80) {
        valid = false;
        break;
      }
      cp = (cp << 6) | (bk & 0x3F);
    }
    // Reject overlong encodings and surrogate range.
    if (valid) {
      if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
          (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) {
        valid = false;
      }
    }
    if (valid) {
      out.push_back(cp);
      i += len;
    } else {
      out.push_back(kReplacement);
      ++i;
    }
  }
  return out;
}

std::string encode(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

std::string encode(std::u32string_view codepoints) {
  std::string out;
  out.reserve(codepoints.size() * 2);
  for (char32_t cp : codepoints) out += encode(cp);
  return out;
}

bool is_space(char32_t cp) {
  switch (cp) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case U'\f':
    case U'\v':
    case 0x0085:  // next line
    case 0x00A0:  // no-break space
    case 0x2028:  // line separator
    case 0x2029:  // paragraph separator
    case 0x202F:  // narrow no-break space
    case 0x3000:  // ideographic space
      return true;
    default:
      return (cp >= 0x2000 && cp <= 0x200B);
  }
}

bool is_strippable_punct(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= U'!' && cp <= U'/') || (cp >= U':' && cp <= U'@') ||
           (cp >= U'[' && cp <= U'`') || (cp >= U'{' && cp <= U'~');
  }
  switch (cp) {
    case 0x060C:  // ، arabic comma
    case 0x061B:  // ؛ arabic semicolon
    case 0x061F:  // ؟ arabic question mark
    case 0x066D:  // ٭ arabic five pointed star
    case 0x00AB:  // «
    case 0x00BB:  // »
    case 0x2018:
    case 0x2019:
    case 0x201C:
    case 0x201D:
    case 0x2013:  // en dash
    case 0x2014:  // em dash
    case 0x2026:  // …
      return true;
    default:
      return false;
  }
}

char32_t fold_case(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + (U'a' - U'A');
  return cp;
}

std::string fold_case(std::string_view token) {
  std::u32string cps = decode(token);
  for (char32_t& cp : cps) cp = fold_case(cp);
  return encode(cps);
}

std::u32string compose_arabic(std::u32string_view codepoints) {
  std::u32string out;
  out.reserve(codepoints.size());
  for (char32_t cp : codepoints) {
    if (!out.empty()) {
      char32_t prev = out.back();
      char32_t composed = 0;
      if (cp == 0x0653 && prev == 0x0627) composed = 0x0622;  // alef + madda
      if (cp == 0x0654) {
        if (prev == 0x0627) composed = 0x0623;  // alef + hamza above
        if (prev == 0x0648) composed = 0x0624;  // waw + hamza above
        if (prev == 0x064A) composed = 0x0626;  // yeh + hamza above
      }
      if (cp == 0x0655 && prev == 0x0627) composed = 0x0625;  // alef + hamza below
      if (composed != 0) {
        out.back() = composed;
        continue;
      }
    }
    out.push_back(cp);
  }
  return out;
}

std::string compose_arabic(std::string_view text) {
  return encode(compose_arabic(decode(text)));
}

}  // namespace lsasumm::utf8
