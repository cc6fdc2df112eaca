#include "lsasumm/weighting.hpp"

#include <cmath>
#include <stdexcept>

#include "lsasumm/errors.hpp"

namespace lsasumm {

TermStats TermStats::from_document(const Document& doc) {
  TermStats stats;
  stats.term_count_value = doc.term_count();
  stats.sentence_count_value = doc.sentence_count();
  const auto m = static_cast<Eigen::Index>(stats.term_count_value);
  const auto n = static_cast<Eigen::Index>(stats.sentence_count_value);
  stats.tf = Eigen::MatrixXi::Zero(m, n);
  for (const Sentence& sentence : doc.sentences) {
    const auto j = static_cast<Eigen::Index>(sentence.index);
    for (const std::string& term : sentence.terms) {
      const auto i = static_cast<Eigen::Index>(doc.term_ids.at(term));
      ++stats.tf(i, j);
    }
  }
  stats.tf_max.assign(n, 0);
  for (Eigen::Index j = 0; j < n; ++j) {
    stats.tf_max[j] = m > 0 ? stats.tf.col(j).maxCoeff() : 0;
  }
  stats.sentence_frequency.assign(m, 0);
  stats.total_count.assign(m, 0);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (stats.tf(i, j) > 0) {
        ++stats.sentence_frequency[i];
        stats.total_count[i] += stats.tf(i, j);
      }
    }
  }
  return stats;
}

double local_weight(int tf, int tf_max, LocalScheme scheme) {
  switch (scheme) {
    case LocalScheme::Binary:
      return tf > 0 ? 1.0 : 0.0;
    case LocalScheme::TermFrequency:
      return static_cast<double>(tf);
    case LocalScheme::Augmented:
      if (tf == 0 || tf_max == 0) return 0.0;
      return 0.5 + 0.5 * (static_cast<double>(tf) / tf_max);
    case LocalScheme::Logarithmic:
      if (tf == 0) return 0.0;
      return 1.0 + std::log(static_cast<double>(tf));
  }
  return 0.0;
}

double global_weight(const TermStats& stats, std::size_t term, GlobalScheme scheme) {
  const int gf = stats.total_count[term];
  if (gf == 0) return 0.0;
  const auto n = static_cast<double>(stats.sentence_count());
  switch (scheme) {
    case GlobalScheme::None:
      return 1.0;
    case GlobalScheme::InverseSentenceFrequency:
      return 1.0 + std::log(n / stats.sentence_frequency[term]);
    case GlobalScheme::Entropy: {
      if (stats.sentence_count() == 1) return 1.0;
      // sum_j P ln P with P = tf/gf, expanded through tf*ln(tf) so that a
      // term spread uniformly over all sentences scores exactly 0.
      double tf_log_tf = 0.0;
      for (Eigen::Index j = 0; j < stats.tf.cols(); ++j) {
        const int tf = stats.tf(static_cast<Eigen::Index>(term), j);
        if (tf > 0) tf_log_tf += tf * std::log(static_cast<double>(tf));
      }
      const double entropy = tf_log_tf / gf - std::log(static_cast<double>(gf));
      return 1.0 + entropy / std::log(n);
    }
  }
  return 0.0;
}

double adjacent_weight(std::size_t sentence, std::size_t sentence_count, Adjacency window,
                       double gamma, const std::function<double(std::size_t)>& lg_at) {
  if (window == Adjacency::None) return 0.0;
  const auto at = [&](std::ptrdiff_t j) -> double {
    if (j < 0 || j >= static_cast<std::ptrdiff_t>(sentence_count)) return 0.0;
    return lg_at(static_cast<std::size_t>(j));
  };
  const auto j = static_cast<std::ptrdiff_t>(sentence);
  double sum = at(j - 1) + at(j + 1);
  if (window == Adjacency::Four) {
    sum += 0.5 * at(j - 2) + 0.5 * at(j + 2);  // far neighbors count half
  }
  return gamma * sum;
}

TermSentenceMatrix build_matrix(const Document& doc, const WeightConfig& config) {
  if (config.gamma < 0.0 || config.gamma > 1.0) {
    throw std::invalid_argument("gamma must lie in [0, 1]");
  }
  if (doc.term_count() == 0) {
    throw EmptyVocabularyError("document '" + doc.id + "' has no terms after filtering");
  }
  const TermStats stats = TermStats::from_document(doc);
  const auto m = static_cast<Eigen::Index>(stats.term_count());
  const auto n = static_cast<Eigen::Index>(stats.sentence_count());

  Eigen::MatrixXd lg(m, n);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double g = global_weight(stats, static_cast<std::size_t>(i), config.global);
    for (Eigen::Index j = 0; j < n; ++j) {
      lg(i, j) = local_weight(stats.tf(i, j), stats.tf_max[j], config.local) * g;
    }
  }

  TermSentenceMatrix matrix;
  matrix.values = lg;
  if (config.adjacency != Adjacency::None) {
    for (Eigen::Index i = 0; i < m; ++i) {
      const auto lg_at = [&](std::size_t j) { return lg(i, static_cast<Eigen::Index>(j)); };
      for (Eigen::Index j = 0; j < n; ++j) {
        matrix.values(i, j) += adjacent_weight(static_cast<std::size_t>(j),
                                               stats.sentence_count(), config.adjacency,
                                               config.gamma, lg_at);
      }
    }
  }
  matrix.terms = doc.vocabulary;
  matrix.sentences.resize(static_cast<std::size_t>(n));
  for (std::size_t j = 0; j < matrix.sentences.size(); ++j) matrix.sentences[j] = j;
  return matrix;
}

}  // namespace lsasumm
