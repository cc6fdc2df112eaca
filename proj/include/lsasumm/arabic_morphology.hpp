#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

// Arabic morphology providers: a light stemmer driven by affix tables and a
// staged root extractor in the style of the ISRI stemmer (no root
// dictionary). Tokens that contain no Arabic letters pass through both
// unchanged, so mixed-language input is safe.
namespace lsasumm {

// Affix tables for the light stemmer. Defaults cover the most frequent
// Arabic prefixes/suffixes; copies of the same lists ship under data/ and
// can be loaded from file to customize.
struct StemTables {
  std::vector<std::u32string> prefixes;
  std::vector<std::u32string> suffixes;

  static const StemTables& defaults();
  // One affix per line, UTF-8, '#' starts a comment.
  static StemTables load(const std::filesystem::path& prefix_file,
                         const std::filesystem::path& suffix_file);
};

// Removes at most one prefix and one suffix (longest match first), never
// shortening the token below two letters.
std::string light_stem(const std::string& token, const StemTables& tables = StemTables::defaults());

// Interface for root extraction so alternative analyzers can be plugged in.
class RootExtractor {
 public:
  virtual ~RootExtractor() = default;
  virtual std::string extract(const std::string& token) const = 0;
};

// Staged affix stripping and pattern matching reducing a word towards its
// tri-literal (occasionally quad-literal) root: strip diacritics, remove
// length-ordered prefixes/suffixes, normalize initial hamza, then match
// length-specific derivational patterns.
class IsriRootExtractor final : public RootExtractor {
 public:
  std::string extract(const std::string& token) const override;
};

const RootExtractor& default_root_extractor();

}  // namespace lsasumm
