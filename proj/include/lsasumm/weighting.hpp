#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "lsasumm/text_pipeline.hpp"

// Local/global/adjacent term weighting and assembly of the term-by-sentence
// input matrix: a_ij = L(t_ij) * G(t_ij) + W_adj(t_ij).
namespace lsasumm {

enum class LocalScheme { Binary, TermFrequency, Augmented, Logarithmic };
enum class GlobalScheme { None, InverseSentenceFrequency, Entropy };
enum class Adjacency { None, Two, Four };

struct WeightConfig {
  LocalScheme local = LocalScheme::Augmented;
  GlobalScheme global = GlobalScheme::Entropy;
  Adjacency adjacency = Adjacency::None;
  double gamma = 0.5;  // adjacent-weight scale, in [0, 1]
};

// Raw frequency counts backing every weighting scheme.
struct TermStats {
  Eigen::MatrixXi tf;                    // term x sentence counts
  std::vector<int> tf_max;               // per sentence: count of its most frequent term
  std::vector<int> sentence_frequency;   // per term: number of sentences containing it
  std::vector<int> total_count;          // per term: occurrences in the whole document
  std::size_t term_count_value = 0;
  std::size_t sentence_count_value = 0;

  std::size_t term_count() const { return term_count_value; }
  std::size_t sentence_count() const { return sentence_count_value; }

  static TermStats from_document(const Document& doc);
};

struct TermSentenceMatrix {
  Eigen::MatrixXd values;                 // term x sentence
  std::vector<std::string> terms;         // row -> term
  std::vector<std::size_t> sentences;     // column -> sentence index

  Eigen::Index rows() const { return values.rows(); }
  Eigen::Index cols() const { return values.cols(); }
};

// Degenerate inputs (tf = 0, or tf_max = 0 for the augmented scheme) map to 0
// so that absent terms never receive positive weight.
double local_weight(int tf, int tf_max, LocalScheme scheme);

// Global weight of a term over the whole document. Terms absent from the
// document get 0 regardless of scheme.
double global_weight(const TermStats& stats, std::size_t term, GlobalScheme scheme);

// Weight contributed by neighboring sentences. lg_at(j) must return the
// L*G product for the term in sentence j; out-of-range neighbors contribute 0.
double adjacent_weight(std::size_t sentence, std::size_t sentence_count, Adjacency window,
                       double gamma, const std::function<double(std::size_t)>& lg_at);

// Builds the input matrix. Throws EmptyVocabularyError when the document has
// no terms left after filtering.
TermSentenceMatrix build_matrix(const Document& doc, const WeightConfig& config);

}  // namespace lsasumm
