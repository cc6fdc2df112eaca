#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lsasumm/arabic_morphology.hpp"

// Turns raw UTF-8 text into ordered sentences of normalized, filtered terms.
// Pipeline order: split -> tokenize -> POS filter (optional) -> stop-word
// removal -> morphology normalization. All functions here are pure.
namespace lsasumm {

enum class Morphology { Word, Stem, Root };

struct RawDocument {
  std::string id;
  std::string text;
};

struct TaggedToken {
  std::string surface;
  std::string tag;  // empty when the token carries no annotation
};

struct Sentence {
  std::size_t index = 0;
  std::string surface;
  std::vector<std::string> terms;  // may be empty; the sentence survives as a unit
};

struct Document {
  std::string id;
  std::vector<Sentence> sentences;
  std::vector<std::string> vocabulary;                     // row id -> term
  std::unordered_map<std::string, std::size_t> term_ids;   // term -> row id
  bool tagged = false;

  std::size_t sentence_count() const { return sentences.size(); }
  std::size_t term_count() const { return vocabulary.size(); }
};

struct PipelineConfig {
  // Sentence-final marks; both the Latin forms and the Arabic comma,
  // semicolon and question mark are included by default.
  std::string sentence_delimiters = ".?!;:,،؛؟";
  std::unordered_set<std::string> stopwords;
  Morphology morphology = Morphology::Word;
  bool pos_filter = false;
  std::vector<std::string> allowed_tag_prefixes = {"NN", "VB"};
  bool fold_case = true;
  StemTables stem_tables = StemTables::defaults();
  std::shared_ptr<const RootExtractor> root_extractor;  // defaults to the ISRI-style extractor
};

// Splits on delimiter codepoints; segments are trimmed and empty ones
// dropped. A trailing segment without a terminal delimiter is kept.
std::vector<std::string> split_sentences(std::string_view text, std::string_view delimiters);

// Whitespace tokenization with leading/trailing punctuation stripped.
std::vector<std::string> tokenize(std::string_view surface);

std::vector<std::string> remove_stopwords(std::vector<std::string> tokens,
                                          const std::unordered_set<std::string>& stoplist);

std::string normalize_term(const std::string& token, Morphology mode,
                           const StemTables& tables = StemTables::defaults(),
                           const RootExtractor& root = default_root_extractor());

// Keeps tokens whose tag starts with one of the allowed prefixes; untagged
// tokens are dropped.
std::vector<TaggedToken> pos_filter(std::vector<TaggedToken> tokens,
                                    const std::vector<std::string>& allowed_prefixes);

// Splits a whitespace token of the form surface/TAG. Returns false when the
// token does not match the convention.
bool parse_tagged_token(std::string_view raw, TaggedToken& out);

// Runs the full pipeline. Throws EmptyDocumentError when no sentence
// survives splitting, MissingTagsError when POS filtering is requested on
// untagged input.
Document build_document(const RawDocument& raw, const PipelineConfig& config);

// Stop-word file: UTF-8, one word per line, '#' comments allowed. Entries
// are case-folded to match pipeline tokens.
std::unordered_set<std::string> load_stopwords(const std::filesystem::path& path);

}  // namespace lsasumm
