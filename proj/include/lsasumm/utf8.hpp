#pragma once

#include <string>
#include <string_view>

// Minimal UTF-8 codepoint layer. All text enters the library as UTF-8;
// splitting, affix matching and pattern matching operate on codepoints.
namespace lsasumm::utf8 {

// Decodes UTF-8 to codepoints. Invalid byte sequences become U+FFFD.
std::u32string decode(std::string_view text);

std::string encode(std::u32string_view codepoints);
std::string encode(char32_t codepoint);

bool is_space(char32_t cp);

// Punctuation stripped from token edges: ASCII punctuation plus the common
// Arabic marks (، ؛ ؟), guillemets, directional quotes and the ellipsis.
bool is_strippable_punct(char32_t cp);

// ASCII case folding; non-ASCII codepoints pass through unchanged.
char32_t fold_case(char32_t cp);
std::string fold_case(std::string_view token);

// Composes the five canonical Arabic combining sequences (alef/waw/yeh +
// madda or hamza marks) into their precomposed forms so that term identity
// does not depend on how the input file encoded them.
std::u32string compose_arabic(std::u32string_view codepoints);
std::string compose_arabic(std::string_view text);

}  // namespace lsasumm::utf8
