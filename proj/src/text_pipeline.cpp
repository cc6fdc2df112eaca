#include "lsasumm/text_pipeline.hpp"

#include <algorithm>
#include <fstream>

#include "lsasumm/errors.hpp"
#include "lsasumm/utf8.hpp"

namespace lsasumm {

namespace {

std::u32string trim(std::u32string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && utf8::is_space(s[b])) ++b;
  while (e > b && utf8::is_space(s[e - 1])) --e;
  return std::u32string(s.substr(b, e - b));
}

std::string strip_edge_punct(std::u32string_view token) {
  std::size_t b = 0, e = token.size();
  while (b < e && utf8::is_strippable_punct(token[b])) ++b;
  while (e > b && utf8::is_strippable_punct(token[e - 1])) --e;
  return utf8::encode(token.substr(b, e - b));
}

std::vector<std::u32string> whitespace_split(std::u32string_view text) {
  std::vector<std::u32string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && utf8::is_space(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !utf8::is_space(text[i])) ++i;
    if (i > start) out.emplace_back(text.substr(start, i - start));
  }
  return out;
}

bool tag_matches(const std::string& tag, const std::vector<std::string>& allowed_prefixes) {
  return std::any_of(allowed_prefixes.begin(), allowed_prefixes.end(),
                     [&](const std::string& p) { return tag.rfind(p, 0) == 0; });
}

}  // namespace

std::vector<std::string> split_sentences(std::string_view text, std::string_view delimiters) {
  const std::u32string cps = utf8::compose_arabic(utf8::decode(text));
  const std::u32string delims = utf8::decode(delimiters);
  std::vector<std::string> sentences;
  std::u32string current;
  const auto flush = [&] {
    std::u32string t = trim(current);
    if (!t.empty()) sentences.push_back(utf8::encode(t));
    current.clear();
  };
  for (char32_t cp : cps) {
    if (delims.find(cp) != std::u32string::npos) {
      flush();
    } else {
      current.push_back(cp);
    }
  }
  flush();  // trailing segment without a terminal delimiter
  return sentences;
}

std::vector<std::string> tokenize(std::string_view surface) {
  std::vector<std::string> tokens;
  for (const std::u32string& run : whitespace_split(utf8::decode(surface))) {
    std::string token = strip_edge_punct(run);
    if (!token.empty()) tokens.push_back(std::move(token));
  }
  return tokens;
}

std::vector<std::string> remove_stopwords(std::vector<std::string> tokens,
                                          const std::unordered_set<std::string>& stoplist) {
  if (stoplist.empty()) return tokens;
  std::erase_if(tokens, [&](const std::string& t) { return stoplist.contains(t); });
  return tokens;
}

std::string normalize_term(const std::string& token, Morphology mode, const StemTables& tables,
                           const RootExtractor& root) {
  switch (mode) {
    case Morphology::Word:
      return token;
    case Morphology::Stem:
      return light_stem(token, tables);
    case Morphology::Root:
      return root.extract(token);
  }
  return token;
}

std::vector<TaggedToken> pos_filter(std::vector<TaggedToken> tokens,
                                    const std::vector<std::string>& allowed_prefixes) {
  std::erase_if(tokens, [&](const TaggedToken& t) {
    return t.tag.empty() || !tag_matches(t.tag, allowed_prefixes);
  });
  return tokens;
}

bool parse_tagged_token(std::string_view raw, TaggedToken& out) {
  const std::size_t slash = raw.rfind('/');
  if (slash == std::string_view::npos || slash == 0 || slash + 1 == raw.size()) return false;
  const std::string_view tag = raw.substr(slash + 1);
  const bool alpha = std::all_of(tag.begin(), tag.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
  });
  if (!alpha) return false;
  out.surface = std::string(raw.substr(0, slash));
  out.tag = std::string(tag);
  return true;
}

Document build_document(const RawDocument& raw, const PipelineConfig& config) {
  const std::vector<std::string> surfaces =
      split_sentences(raw.text, config.sentence_delimiters);
  if (surfaces.empty()) {
    throw EmptyDocumentError("document '" + raw.id + "' has no sentences");
  }

  // A document is tagged iff every whitespace token matches surface/TAG.
  std::vector<std::vector<std::string>> raw_tokens(surfaces.size());
  bool tagged = true;
  bool any_token = false;
  for (std::size_t j = 0; j < surfaces.size(); ++j) {
    for (const std::u32string& run : whitespace_split(utf8::decode(surfaces[j]))) {
      raw_tokens[j].push_back(utf8::encode(run));
      TaggedToken probe;
      any_token = true;
      if (!parse_tagged_token(raw_tokens[j].back(), probe)) tagged = false;
    }
  }
  tagged = tagged && any_token;
  if (config.pos_filter && !tagged) {
    throw MissingTagsError("POS filtering requested but document '" + raw.id +
                           "' is not in surface/TAG form");
  }

  const RootExtractor& root =
      config.root_extractor ? *config.root_extractor : default_root_extractor();

  Document doc;
  doc.id = raw.id;
  doc.tagged = tagged;
  doc.sentences.reserve(surfaces.size());
  for (std::size_t j = 0; j < surfaces.size(); ++j) {
    Sentence sentence;
    sentence.index = j;

    std::vector<TaggedToken> tokens;
    std::string prose;
    for (const std::string& run : raw_tokens[j]) {
      TaggedToken token;
      if (tagged) {
        parse_tagged_token(run, token);
      } else {
        token.surface = run;
      }
      if (!prose.empty()) prose += ' ';
      prose += token.surface;
      token.surface = strip_edge_punct(utf8::decode(token.surface));
      if (config.fold_case) token.surface = utf8::fold_case(token.surface);
      if (!token.surface.empty()) tokens.push_back(std::move(token));
    }
    sentence.surface = tagged ? prose : surfaces[j];

    if (config.pos_filter) tokens = pos_filter(std::move(tokens), config.allowed_tag_prefixes);

    for (TaggedToken& token : tokens) {
      if (config.stopwords.contains(token.surface)) continue;
      sentence.terms.push_back(
          normalize_term(token.surface, config.morphology, config.stem_tables, root));
    }
    doc.sentences.push_back(std::move(sentence));
  }

  // Vocabulary rows in first-occurrence order.
  for (const Sentence& sentence : doc.sentences) {
    for (const std::string& term : sentence.terms) {
      if (doc.term_ids.emplace(term, doc.vocabulary.size()).second) {
        doc.vocabulary.push_back(term);
      }
    }
  }
  return doc;
}

std::unordered_set<std::string> load_stopwords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open stop-word file: " + path.string());
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::u32string cps = trim(utf8::compose_arabic(utf8::decode(line)));
    if (cps.empty()) continue;
    for (char32_t& cp : cps) cp = utf8::fold_case(cp);
    words.insert(utf8::encode(cps));
  }
  return words;
}

}  // namespace lsasumm
