#pragma once

#include <random>
#include <string>
#include <vector>

#include "lsasumm/text_pipeline.hpp"

namespace lsasumm::testing {

// Builds a Document directly from per-sentence term lists; vocabulary rows
// follow first-occurrence order like build_document.
inline Document make_doc(const std::vector<std::vector<std::string>>& sentence_terms,
                         const std::string& id = "test") {
  Document doc;
  doc.id = id;
  for (std::size_t j = 0; j < sentence_terms.size(); ++j) {
    Sentence sentence;
    sentence.index = j;
    sentence.surface = "sentence " + std::to_string(j);
    sentence.terms = sentence_terms[j];
    doc.sentences.push_back(std::move(sentence));
  }
  for (const Sentence& sentence : doc.sentences) {
    for (const std::string& term : sentence.terms) {
      if (doc.term_ids.emplace(term, doc.vocabulary.size()).second) {
        doc.vocabulary.push_back(term);
      }
    }
  }
  return doc;
}

// Random document over a small vocabulary t0..t{vocab-1}; every term is
// guaranteed to appear at least once.
inline Document random_doc(std::mt19937& rng, std::size_t sentences, std::size_t vocab,
                           std::size_t max_terms_per_sentence = 6) {
  std::uniform_int_distribution<std::size_t> term_dist(0, vocab - 1);
  std::uniform_int_distribution<std::size_t> len_dist(0, max_terms_per_sentence);
  std::vector<std::vector<std::string>> terms(sentences);
  for (std::size_t j = 0; j < sentences; ++j) {
    const std::size_t len = len_dist(rng);
    for (std::size_t k = 0; k < len; ++k) {
      terms[j].push_back("t" + std::to_string(term_dist(rng)));
    }
  }
  for (std::size_t i = 0; i < vocab; ++i) {
    terms[i % sentences].push_back("t" + std::to_string(i));
  }
  return make_doc(terms);
}

}  // namespace lsasumm::testing
