#include <doctest.h>

#include <cstring>
#include <random>

#include "helpers.hpp"
#include "lsasumm/errors.hpp"
#include "lsasumm/weighting.hpp"

using namespace lsasumm;
using lsasumm::testing::make_doc;
using lsasumm::testing::random_doc;

namespace {

const LocalScheme kLocals[] = {LocalScheme::Binary, LocalScheme::TermFrequency,
                               LocalScheme::Augmented, LocalScheme::Logarithmic};
const GlobalScheme kGlobals[] = {GlobalScheme::None, GlobalScheme::InverseSentenceFrequency,
                                 GlobalScheme::Entropy};

}  // namespace

TEST_CASE("local_weight") {
  CHECK(local_weight(3, 5, LocalScheme::Binary) == 1.0);
  CHECK(local_weight(0, 5, LocalScheme::Binary) == 0.0);
  CHECK(local_weight(7, 9, LocalScheme::TermFrequency) == 7.0);
  CHECK(local_weight(2, 4, LocalScheme::Augmented) == 0.75);
  CHECK(local_weight(1, 9, LocalScheme::Logarithmic) == 1.0);
  // degenerate inputs map to zero
  CHECK(local_weight(0, 4, LocalScheme::Augmented) == 0.0);
  CHECK(local_weight(0, 0, LocalScheme::Augmented) == 0.0);
  CHECK(local_weight(0, 9, LocalScheme::Logarithmic) == 0.0);
}

TEST_CASE("global_weight identities") {
  // term in every sentence: ISF = 1 exactly
  const Document everywhere = make_doc({{"t"}, {"t"}, {"t"}});
  const TermStats stats = TermStats::from_document(everywhere);
  CHECK(global_weight(stats, 0, GlobalScheme::InverseSentenceFrequency) == 1.0);
  CHECK(global_weight(stats, 0, GlobalScheme::None) == 1.0);
  // uniform spread: EF = 0 exactly
  CHECK(global_weight(stats, 0, GlobalScheme::Entropy) == 0.0);

  // term occurring exactly once in one sentence: EF = 1
  const Document once = make_doc({{"t"}, {"x"}, {"x"}});
  CHECK(global_weight(TermStats::from_document(once), 0, GlobalScheme::Entropy) == 1.0);

  // single-sentence document: EF defined as 1
  const Document single = make_doc({{"t", "t"}});
  CHECK(global_weight(TermStats::from_document(single), 0, GlobalScheme::Entropy) == 1.0);
}

TEST_CASE("global_weight EF stays within [0, 1]") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Document doc = random_doc(rng, 2 + trial % 9, 6);
    const TermStats stats = TermStats::from_document(doc);
    for (std::size_t i = 0; i < doc.term_count(); ++i) {
      const double ef = global_weight(stats, i, GlobalScheme::Entropy);
      CHECK(ef >= 0.0);
      CHECK(ef <= 1.0 + 1e-15);
      CHECK(global_weight(stats, i, GlobalScheme::InverseSentenceFrequency) >= 1.0);
    }
  }
}

TEST_CASE("adjacent_weight") {
  const auto lg = [](std::size_t j) { return j == 1 ? 2.0 : 1.0; };
  SUBCASE("gamma zero kills the term") {
    CHECK(adjacent_weight(0, 5, Adjacency::Two, 0.0, lg) == 0.0);
    CHECK(adjacent_weight(2, 5, Adjacency::Four, 0.0, lg) == 0.0);
  }
  SUBCASE("missing left neighbor contributes zero") {
    CHECK(adjacent_weight(0, 5, Adjacency::Two, 0.5, lg) == 0.5 * 2.0);
  }
  SUBCASE("four-window weights far neighbors at half") {
    const auto ones = [](std::size_t) { return 1.0; };
    CHECK(adjacent_weight(2, 5, Adjacency::Four, 0.5, ones) == 0.5 * (0.5 + 1 + 1 + 0.5));
  }
  SUBCASE("window none is zero") {
    CHECK(adjacent_weight(2, 5, Adjacency::None, 0.5, lg) == 0.0);
  }
}

TEST_CASE("build_matrix hand-computed row with two-adjacent TFxNG") {
  // term "t" appears 1, 2, 0 times across three sentences
  const Document doc = make_doc({{"t", "a"}, {"t", "t", "b"}, {"c"}});
  WeightConfig config{LocalScheme::TermFrequency, GlobalScheme::None, Adjacency::Two, 0.5};
  const TermSentenceMatrix matrix = build_matrix(doc, config);
  const auto row = static_cast<Eigen::Index>(doc.term_ids.at("t"));
  CHECK(matrix.values(row, 0) == 2.0);
  CHECK(matrix.values(row, 1) == 2.5);
  CHECK(matrix.values(row, 2) == 1.0);
}

TEST_CASE("build_matrix shape follows vocabulary and sentences") {
  const Document doc = make_doc({{"a", "b", "c"}, {"d", "e"}, {"f", "g"}});
  const TermSentenceMatrix matrix = build_matrix(doc, {});
  CHECK(matrix.rows() == 7);
  CHECK(matrix.cols() == 3);
  CHECK(matrix.terms.size() == 7);
}

TEST_CASE("build_matrix single sentence ignores the window") {
  const Document doc = make_doc({{"a", "b", "a"}});
  for (auto adjacency : {Adjacency::None, Adjacency::Two, Adjacency::Four}) {
    WeightConfig config{LocalScheme::TermFrequency, GlobalScheme::None, adjacency, 0.5};
    const TermSentenceMatrix matrix = build_matrix(doc, config);
    CHECK(matrix.values(0, 0) == 2.0);
    CHECK(matrix.values(1, 0) == 1.0);
  }
}

TEST_CASE("gamma zero and window none give the plain LG matrix") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const Document doc = random_doc(rng, 2 + trial % 7, 8);
    for (auto local : kLocals) {
      for (auto global : kGlobals) {
        const TermSentenceMatrix plain =
            build_matrix(doc, {local, global, Adjacency::None, 0.5});
        const TermSentenceMatrix zero_gamma =
            build_matrix(doc, {local, global, Adjacency::Four, 0.0});
        CHECK(plain.values == zero_gamma.values);
      }
    }
  }
}

TEST_CASE("matrix entries are finite and nonnegative for all schemes") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Document doc = random_doc(rng, 2 + trial % 6, 7);
    for (auto local : kLocals) {
      for (auto global : kGlobals) {
        for (auto adjacency : {Adjacency::None, Adjacency::Two, Adjacency::Four}) {
          const TermSentenceMatrix matrix = build_matrix(doc, {local, global, adjacency, 0.5});
          CHECK(matrix.values.allFinite());
          CHECK(matrix.values.minCoeff() >= 0.0);
        }
      }
    }
  }
}

TEST_CASE("permuting vocabulary rows permutes the matrix rows") {
  const Document doc = make_doc({{"a", "b"}, {"b", "c"}, {"c", "a", "a"}});
  Document permuted = doc;
  permuted.vocabulary = {"c", "a", "b"};
  permuted.term_ids = {{"c", 0}, {"a", 1}, {"b", 2}};

  WeightConfig config{LocalScheme::TermFrequency, GlobalScheme::Entropy, Adjacency::Two, 0.5};
  const TermSentenceMatrix original = build_matrix(doc, config);
  const TermSentenceMatrix shuffled = build_matrix(permuted, config);
  for (std::size_t i = 0; i < doc.vocabulary.size(); ++i) {
    const auto& term = doc.vocabulary[i];
    const auto j = static_cast<Eigen::Index>(permuted.term_ids.at(term));
    CHECK(original.values.row(static_cast<Eigen::Index>(i)) == shuffled.values.row(j));
  }
}

TEST_CASE("four-window far coefficient is exactly half the near one") {
  // "t" occurs only in the middle sentence; its LG there is 1 under TFxNG.
  const Document doc = make_doc({{"a"}, {"b"}, {"t"}, {"c"}, {"d"}});
  WeightConfig config{LocalScheme::TermFrequency, GlobalScheme::None, Adjacency::Four, 0.5};
  const TermSentenceMatrix matrix = build_matrix(doc, config);
  const auto row = static_cast<Eigen::Index>(doc.term_ids.at("t"));
  const double near = matrix.values(row, 1);  // j +/- 1 neighbor of sentence 2
  const double far = matrix.values(row, 0);   // j +/- 2 neighbor
  CHECK(near == 0.5);
  CHECK(far == 0.25);
  CHECK(far / near == 0.5);
  CHECK(matrix.values(row, 3) == near);
  CHECK(matrix.values(row, 4) == far);
}

TEST_CASE("build_matrix is bitwise deterministic") {
  std::mt19937 rng(31);
  const Document doc = random_doc(rng, 9, 12);
  WeightConfig config{LocalScheme::Augmented, GlobalScheme::Entropy, Adjacency::Four, 0.5};
  const TermSentenceMatrix a = build_matrix(doc, config);
  const TermSentenceMatrix b = build_matrix(doc, config);
  REQUIRE(a.values.size() == b.values.size());
  CHECK(std::memcmp(a.values.data(), b.values.data(),
                    sizeof(double) * static_cast<std::size_t>(a.values.size())) == 0);
}

TEST_CASE("build_matrix rejects empty vocabularies and bad gamma") {
  const Document empty = make_doc({{}, {}});
  CHECK_THROWS_AS(build_matrix(empty, {}), EmptyVocabularyError);

  const Document doc = make_doc({{"a"}});
  WeightConfig config;
  config.gamma = 1.5;
  CHECK_THROWS_AS(build_matrix(doc, config), std::invalid_argument);
}

TEST_CASE("fully filtered sentences become zero columns") {
  const Document doc = make_doc({{"a", "b"}, {}, {"a"}});
  const TermSentenceMatrix matrix = build_matrix(doc, {});
  CHECK(matrix.values.col(1).isZero(0.0));
}

TEST_CASE("TermStats invariants") {
  std::mt19937 rng(41);
  const Document doc = random_doc(rng, 6, 9);
  const TermStats stats = TermStats::from_document(doc);
  const auto m = static_cast<Eigen::Index>(stats.term_count());
  const auto n = static_cast<Eigen::Index>(stats.sentence_count());
  for (Eigen::Index j = 0; j < n; ++j) {
    CHECK(stats.tf_max[static_cast<std::size_t>(j)] == stats.tf.col(j).maxCoeff());
  }
  for (Eigen::Index i = 0; i < m; ++i) {
    int gf = 0, ni = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
      gf += stats.tf(i, j);
      ni += stats.tf(i, j) > 0 ? 1 : 0;
    }
    CHECK(stats.total_count[static_cast<std::size_t>(i)] == gf);
    CHECK(stats.sentence_frequency[static_cast<std::size_t>(i)] == ni);
    CHECK(gf > 0);  // vocabulary terms occur somewhere
  }
}
