#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "lsasumm/errors.hpp"
#include "lsasumm/selection.hpp"
#include "lsasumm/weighting.hpp"

using namespace lsasumm;
using lsasumm::testing::make_doc;
using lsasumm::testing::random_doc;

namespace {

// The ESS-LSA hand-trace fixture: three sentences, four terms, two concepts.
// Concept 1's representative terms are t1,t2 (in sentence 0) and t3 (in
// sentence 2).
struct TraceFixture {
  Document doc = make_doc({{"t1", "t2"}, {"t4"}, {"t3"}});
  SvdResult svd;
  FilteredSigma sigma;

  TraceFixture() {
    // vocabulary rows follow first occurrence: t1, t2, t4, t3
    svd.u = Eigen::MatrixXd(4, 2);
    svd.u << 0.9, 0.1,
             0.8, 0.2,
             0.1, 0.9,
             0.7, 0.3;
    svd.singular_values = Eigen::VectorXd(2);
    svd.singular_values << 2.0, 1.0;
    svd.vt = Eigen::MatrixXd(2, 3);
    svd.vt << 0.9, 0.1, 0.4,
              0.2, 0.8, 0.3;
    sigma = filter_sigma(svd.singular_values, 0.5);
  }
};

SvdResult svd_of(const Document& doc, const WeightConfig& config = {}) {
  return decompose(build_matrix(doc, config).values);
}

}  // namespace

TEST_CASE("ess_lsa hand-traced example selects sentences 0 and 2") {
  const TraceFixture fx;
  CHECK(fx.sigma.trace == 3.0);  // boundary singular value kept
  SelectionTrace trace;
  const Summary summary = ess_lsa_select(fx.svd, fx.sigma, fx.doc, 2, {}, &trace);
  CHECK(summary.sentence_indices == std::vector<std::size_t>{0, 2});
  REQUIRE(trace.picks.size() == 2);
  CHECK(trace.picks[0].concept_index == 0);
  CHECK(trace.picks[0].sentence == 0);
  CHECK_FALSE(trace.picks[0].gated);
  CHECK(trace.picks[1].concept_index == 0);
  CHECK(trace.picks[1].sentence == 2);
  CHECK(trace.picks[1].gated);  // taken inside the term-coverage loop
}

TEST_CASE("ess_lsa identity matrix with budget 2 selects the first two sentences") {
  const Document doc = make_doc({{"t0"}, {"t1"}, {"t2"}});
  WeightConfig config{LocalScheme::TermFrequency, GlobalScheme::None, Adjacency::None, 0.5};
  const TermSentenceMatrix matrix = build_matrix(doc, config);
  CHECK(matrix.values == Eigen::MatrixXd::Identity(3, 3));
  const SvdResult svd = decompose(matrix.values);
  const Summary summary = ess_lsa_select(svd, filter_sigma(svd.singular_values, 0.5), doc, 2);
  CHECK(summary.sentence_indices == std::vector<std::size_t>{0, 1});
}

TEST_CASE("ess_lsa budget edge cases") {
  const TraceFixture fx;
  CHECK(ess_lsa_select(fx.svd, fx.sigma, fx.doc, 0).sentence_indices.empty());
  // budget beyond the document is clamped
  const Summary all = ess_lsa_select(fx.svd, fx.sigma, fx.doc, 99);
  CHECK(all.sentence_indices == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("ess_lsa rejects a degenerate spectrum") {
  const TraceFixture fx;
  FilteredSigma zero;
  zero.values = Eigen::VectorXd::Zero(2);
  zero.trace = 0.0;
  CHECK_THROWS_AS(ess_lsa_select(fx.svd, zero, fx.doc, 2), DegenerateSpectrumError);
}

TEST_CASE("ess_lsa rejects mismatched dimensions") {
  const TraceFixture fx;
  const Document other = make_doc({{"a"}, {"b"}});
  CHECK_THROWS_AS(ess_lsa_select(fx.svd, fx.sigma, other, 1), std::invalid_argument);
}

TEST_CASE("ess_lsa concentrated spectrum takes top sentences of the first concept") {
  // One dominant concept; the rest are filtered away.
  SvdResult svd;
  const std::size_t n = 6;
  svd.u = Eigen::MatrixXd::Zero(3, 3);
  svd.u << 0.9, 0, 0, 0.8, 0, 0, 0.7, 0, 0;
  svd.singular_values = Eigen::VectorXd(3);
  svd.singular_values << 10.0, 1.0, 0.5;
  svd.vt = Eigen::MatrixXd::Zero(3, n);
  svd.vt.row(0) << 0.1, 0.9, 0.3, 0.8, 0.2, 0.7;
  // terms t0,t1,t2 all live in sentence 0 only, so T is never fully covered
  // by the picked sentences and the threshold gate drives the loop.
  const Document doc = make_doc({{"t0", "t1", "t2"}, {}, {}, {}, {}, {}});
  const FilteredSigma sigma = filter_sigma(svd.singular_values, 0.5);
  CHECK(sigma.surviving() == 1);  // P_1 = n
  const Summary summary = ess_lsa_select(svd, sigma, doc, 3);
  // top-3 sentences of row 0 by value: 1 (0.9), 3 (0.8), 5 (0.7)
  CHECK(summary.sentence_indices == std::vector<std::size_t>{1, 3, 5});
}

TEST_CASE("ess_lsa all-zero vt fills in document order") {
  SvdResult svd;
  svd.u = Eigen::MatrixXd::Zero(2, 2);
  svd.singular_values = Eigen::VectorXd(2);
  svd.singular_values << 1.0, 1.0;
  svd.vt = Eigen::MatrixXd::Zero(2, 4);
  const Document doc = make_doc({{"a"}, {"b"}, {"a"}, {"b"}});
  FilteredSigma sigma = filter_sigma(svd.singular_values, 0.5);
  const Summary summary = ess_lsa_select(svd, sigma, doc, 3);
  CHECK(summary.sentence_indices == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("ess_lsa per-visit pick count stays within ceil(P_k)+1") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + rng() % 10;
    const Document doc = random_doc(rng, n, 6);
    const SvdResult svd = svd_of(doc, {LocalScheme::TermFrequency, GlobalScheme::None,
                                       Adjacency::Two, 0.5});
    const FilteredSigma sigma = filter_sigma(svd.singular_values, 0.5);
    if (sigma.trace <= 0.0) continue;
    SelectionTrace trace;
    ess_lsa_select(svd, sigma, doc, 1 + rng() % n, {}, &trace);

    std::size_t visit_count = 0;
    double visit_threshold = 0.0;
    for (const auto& pick : trace.picks) {
      if (!pick.gated) {
        visit_count = 1;
        visit_threshold = pick.threshold;
      } else {
        ++visit_count;
      }
      CHECK(visit_count <= static_cast<std::size_t>(std::ceil(visit_threshold)) + 1);
    }
  }
}

TEST_CASE("lead_select") {
  const Document doc = make_doc({{"a"}, {"b"}, {"c"}, {"d"}, {"e"}});
  CHECK(lead_select(doc, 3).sentence_indices == std::vector<std::size_t>{0, 1, 2});
  CHECK(lead_select(doc, 0).sentence_indices.empty());
  CHECK(lead_select(doc, 9).sentence_indices == std::vector<std::size_t>{0, 1, 2, 3, 4});
}

TEST_CASE("gong_liu_select") {
  const Document doc = make_doc({{"t0"}, {"t1"}, {"t2"}});
  const SvdResult svd = svd_of(doc, {LocalScheme::TermFrequency, GlobalScheme::None,
                                     Adjacency::None, 0.5});
  SUBCASE("one sentence per concept") {
    CHECK(gong_liu_select(svd, doc, 2).sentence_indices == std::vector<std::size_t>{0, 1});
  }
  SUBCASE("budget one takes the argmax of the first row") {
    CHECK(gong_liu_select(svd, doc, 1).sentence_indices == std::vector<std::size_t>{0});
  }
  SUBCASE("duplicate maxima break to the smallest index") {
    SvdResult tie;
    tie.u = Eigen::MatrixXd::Identity(3, 3);
    tie.singular_values = Eigen::VectorXd::Ones(3);
    tie.vt = Eigen::MatrixXd(3, 3);
    tie.vt << 0.5, 0.5, 0.1,
              0.2, 0.2, 0.2,
              0.1, 0.1, 0.1;
    CHECK(gong_liu_select(tie, doc, 1).sentence_indices == std::vector<std::size_t>{0});
  }
}

TEST_CASE("gong_liu_select follows a permutation vt") {
  const Document doc = make_doc({{"a"}, {"b"}, {"c"}, {"d"}});
  SvdResult svd;
  svd.u = Eigen::MatrixXd::Identity(4, 4);
  svd.singular_values = Eigen::VectorXd::Ones(4);
  svd.vt = Eigen::MatrixXd::Zero(4, 4);
  // concept k points at sentence p(k) = (2, 0, 3, 1)
  svd.vt(0, 2) = 1;
  svd.vt(1, 0) = 1;
  svd.vt(2, 3) = 1;
  svd.vt(3, 1) = 1;
  CHECK(gong_liu_select(svd, doc, 2).sentence_indices == std::vector<std::size_t>{0, 2});
  CHECK(gong_liu_select(svd, doc, 4).sentence_indices ==
        std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("gong_liu_select wraps past the spectrum") {
  const Document doc = make_doc({{"a", "b"}, {"a"}, {"b"}, {"a", "a"}});
  SvdResult svd;
  svd.u = Eigen::MatrixXd::Identity(2, 2);
  svd.singular_values = Eigen::VectorXd::Ones(2);
  svd.vt = Eigen::MatrixXd(2, 4);
  svd.vt << 0.9, 0.1, 0.2, 0.8,
            0.1, 0.9, 0.3, 0.2;
  // rows pick 0, 1, then wrap: row 0 over {2,3} picks 3, row 1 picks 2
  CHECK(gong_liu_select(svd, doc, 4).sentence_indices ==
        std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(gong_liu_select(svd, doc, 3).sentence_indices ==
        std::vector<std::size_t>{0, 1, 3});
}

TEST_CASE("steinberger_select hand-computed scores") {
  const TraceFixture fx;
  const Summary summary = steinberger_select(fx.svd, fx.sigma, fx.doc, 2);
  CHECK(summary.sentence_indices == std::vector<std::size_t>{0, 2});
  // scores: sqrt(3.28), sqrt(0.68), sqrt(0.73)
  const double s0 = std::sqrt((0.9 * 2) * (0.9 * 2) + 0.2 * 0.2);
  const double s2 = std::sqrt((0.4 * 2) * (0.4 * 2) + 0.3 * 0.3);
  CHECK(s0 == doctest::Approx(std::sqrt(3.28)).epsilon(1e-12));
  CHECK(s2 == doctest::Approx(std::sqrt(0.73)).epsilon(1e-12));
}

TEST_CASE("steinberger_select single surviving concept ranks by |row 1|") {
  const Document doc = make_doc({{"a"}, {"b"}, {"c"}, {"d"}});
  SvdResult svd;
  svd.u = Eigen::MatrixXd::Identity(4, 4);
  svd.singular_values = Eigen::VectorXd(4);
  svd.singular_values << 8.0, 1.0, 1.0, 0.5;
  svd.vt = Eigen::MatrixXd::Zero(4, 4);
  svd.vt.row(0) << 0.2, -0.9, 0.5, 0.1;
  svd.vt.row(1) << 0.9, 0.9, 0.9, 0.9;  // filtered out, must not count
  const FilteredSigma sigma = filter_sigma(svd.singular_values, 0.5);
  CHECK(sigma.surviving() == 1);
  CHECK(steinberger_select(svd, sigma, doc, 2).sentence_indices ==
        std::vector<std::size_t>{1, 2});
}

TEST_CASE("steinberger_select equal scores fall back to document order") {
  const Document doc = make_doc({{"a"}, {"b"}, {"c"}});
  SvdResult svd;
  svd.u = Eigen::MatrixXd::Identity(3, 3);
  svd.singular_values = Eigen::VectorXd::Ones(3);
  svd.vt = Eigen::MatrixXd::Constant(3, 3, 0.5);
  const FilteredSigma sigma = filter_sigma(svd.singular_values, 0.5);
  CHECK(steinberger_select(svd, sigma, doc, 2).sentence_indices ==
        std::vector<std::size_t>{0, 1});
}

TEST_CASE("all selectors return unique ascending in-range indices") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 9;
    const Document doc = random_doc(rng, n, 8);
    const SvdResult svd = svd_of(doc, {LocalScheme::Augmented, GlobalScheme::Entropy,
                                       Adjacency::Four, 0.5});
    const FilteredSigma sigma = filter_sigma(svd.singular_values, 0.5);
    const std::size_t budget = rng() % (n + 3);

    std::vector<Summary> summaries;
    if (sigma.trace > 0.0) {
      summaries.push_back(ess_lsa_select(svd, sigma, doc, budget));
      summaries.push_back(steinberger_select(svd, sigma, doc, budget));
    }
    summaries.push_back(lead_select(doc, budget));
    summaries.push_back(gong_liu_select(svd, doc, budget));
    for (const Summary& summary : summaries) {
      CHECK(summary.size() <= budget);
      for (std::size_t i = 0; i < summary.size(); ++i) {
        CHECK(summary.sentence_indices[i] < n);
        if (i > 0) CHECK(summary.sentence_indices[i] > summary.sentence_indices[i - 1]);
      }
    }
  }
}

TEST_CASE("selection is deterministic") {
  std::mt19937 rng(31337);
  const Document doc = random_doc(rng, 8, 10);
  const SvdResult svd = svd_of(doc, {LocalScheme::Augmented, GlobalScheme::Entropy,
                                     Adjacency::Two, 0.5});
  const FilteredSigma sigma = filter_sigma(svd.singular_values, 0.5);
  const Summary a = ess_lsa_select(svd, sigma, doc, 4);
  const Summary b = ess_lsa_select(svd, sigma, doc, 4);
  CHECK(a.sentence_indices == b.sentence_indices);
  CHECK(a.rendered == b.rendered);
}

TEST_CASE("summary renders surfaces in document order") {
  const Document doc = make_doc({{"a"}, {"b"}, {"c"}});
  const Summary lead = lead_select(doc, 2);
  CHECK(lead.rendered == "sentence 0 sentence 1");
}
