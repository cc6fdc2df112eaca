// Python bindings for the lsasumm core: pipeline, weighting, SVD topics,
// sentence selection and ROUGE scoring.
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "lsasumm/errors.hpp"
#include "lsasumm/harness.hpp"
#include "lsasumm/lsa_core.hpp"

namespace py = pybind11;
using namespace lsasumm;

namespace {

EvalConfig make_eval_config(const std::vector<int>& orders,
                            std::optional<std::size_t> truncate_words, bool case_fold,
                            const std::function<std::string(const std::string&)>& normalize) {
  EvalConfig config;
  config.orders = orders;
  config.truncate_words = truncate_words;
  config.case_fold = case_fold;
  config.normalize = normalize;
  return config;
}

RunConfig make_run_config(const std::string& experiment, const std::string& selector,
                          double gamma, double alpha, std::size_t top_terms,
                          const std::unordered_set<std::string>& stopwords,
                          const std::string& delimiters) {
  RunConfig config;
  config.code = parse_experiment_code(experiment);
  config.selector = parse_selector(selector);
  config.gamma = gamma;
  config.alpha = alpha;
  config.representative_terms = top_terms;
  config.stopwords = stopwords;
  config.sentence_delimiters = delimiters;
  return config;
}

Budget make_budget(std::optional<double> ratio, std::optional<std::size_t> sentences) {
  if (ratio && sentences) throw std::invalid_argument("give either ratio or sentences, not both");
  if (sentences) return Budget::from_sentences(*sentences);
  return Budget::from_ratio(ratio.value_or(0.3));
}

}  // namespace

PYBIND11_MODULE(_lsasumm, m) {
  m.doc() = "Extractive summarization with enhanced latent semantic analysis";

  py::register_exception<EmptyDocumentError>(m, "EmptyDocumentError");
  py::register_exception<EmptyVocabularyError>(m, "EmptyVocabularyError");
  py::register_exception<NumericalFailureError>(m, "NumericalFailureError");
  py::register_exception<DegenerateSpectrumError>(m, "DegenerateSpectrumError");
  py::register_exception<InvalidCodeError>(m, "InvalidCodeError");
  py::register_exception<EmptyCorpusError>(m, "EmptyCorpusError");
  py::register_exception<MissingTagsError>(m, "MissingTagsError");
  py::register_exception<NoReferencesError>(m, "NoReferencesError");
  py::register_exception<CorpusError>(m, "CorpusError");

  py::enum_<Morphology>(m, "Morphology")
      .value("WORD", Morphology::Word)
      .value("STEM", Morphology::Stem)
      .value("ROOT", Morphology::Root);
  py::enum_<LocalScheme>(m, "LocalScheme")
      .value("BR", LocalScheme::Binary)
      .value("TF", LocalScheme::TermFrequency)
      .value("AW", LocalScheme::Augmented)
      .value("LW", LocalScheme::Logarithmic);
  py::enum_<GlobalScheme>(m, "GlobalScheme")
      .value("NG", GlobalScheme::None)
      .value("ISF", GlobalScheme::InverseSentenceFrequency)
      .value("EF", GlobalScheme::Entropy);
  py::enum_<Adjacency>(m, "Adjacency")
      .value("NONE", Adjacency::None)
      .value("TWO", Adjacency::Two)
      .value("FOUR", Adjacency::Four);

  py::class_<Sentence>(m, "Sentence")
      .def_readonly("index", &Sentence::index)
      .def_readonly("surface", &Sentence::surface)
      .def_readonly("terms", &Sentence::terms)
      .def("__repr__", [](const Sentence& s) {
        return "<Sentence " + std::to_string(s.index) + ": " + std::to_string(s.terms.size()) +
               " terms>";
      });

  py::class_<Document>(m, "Document")
      .def_readonly("id", &Document::id)
      .def_readonly("sentences", &Document::sentences)
      .def_readonly("vocabulary", &Document::vocabulary)
      .def_readonly("tagged", &Document::tagged)
      .def_property_readonly("sentence_count", &Document::sentence_count)
      .def_property_readonly("term_count", &Document::term_count);

  py::class_<ExperimentCode>(m, "ExperimentCode")
      .def_readonly("morphology", &ExperimentCode::morphology)
      .def_readonly("local", &ExperimentCode::local)
      .def_readonly("pos", &ExperimentCode::pos)
      .def_readonly("adjacency", &ExperimentCode::adjacency)
      .def_property_readonly("global_scheme",
                             [](const ExperimentCode& c) { return c.global; })
      .def("__str__", [](const ExperimentCode& c) { return to_string(c); })
      .def("__repr__",
           [](const ExperimentCode& c) { return "<ExperimentCode " + to_string(c) + ">"; })
      .def("__eq__", [](const ExperimentCode& a, const ExperimentCode& b) { return a == b; });

  py::class_<FilteredSigma>(m, "FilteredSigma")
      .def_readonly("values", &FilteredSigma::values)
      .def_readonly("alpha", &FilteredSigma::alpha)
      .def_readonly("trace", &FilteredSigma::trace)
      .def_property_readonly("surviving", &FilteredSigma::surviving);

  py::class_<Summary>(m, "Summary")
      .def_readonly("sentence_indices", &Summary::sentence_indices)
      .def_readonly("rendered", &Summary::rendered)
      .def("__len__", &Summary::size);

  py::class_<RougeScore>(m, "RougeScore")
      .def_readonly("order", &RougeScore::order)
      .def_readonly("recall", &RougeScore::recall)
      .def_readonly("precision", &RougeScore::precision)
      .def_readonly("f1", &RougeScore::f1)
      .def_readonly("per_reference", &RougeScore::per_reference)
      .def("__repr__", [](const RougeScore& s) {
        return "<RougeScore n=" + std::to_string(s.order) + " recall=" +
               std::to_string(s.recall) + ">";
      });

  m.def(
      "split_sentences",
      [](const std::string& text, const std::string& delimiters) {
        return split_sentences(text, delimiters);
      },
      py::arg("text"), py::arg("delimiters") = PipelineConfig{}.sentence_delimiters);
  m.def("tokenize", [](const std::string& s) { return tokenize(s); }, py::arg("text"));
  m.def(
      "normalize_term",
      [](const std::string& token, Morphology mode) { return normalize_term(token, mode); },
      py::arg("token"), py::arg("mode"));
  m.def("light_stem", [](const std::string& token) { return light_stem(token); },
        py::arg("token"));
  m.def(
      "extract_root",
      [](const std::string& token) { return default_root_extractor().extract(token); },
      py::arg("token"));
  m.def("load_stopwords", &load_stopwords, py::arg("path"));

  m.def(
      "build_document",
      [](const std::string& id, const std::string& text, Morphology morphology, bool pos_filter,
         const std::unordered_set<std::string>& stopwords, const std::string& delimiters,
         bool fold_case) {
        PipelineConfig config;
        config.morphology = morphology;
        config.pos_filter = pos_filter;
        config.stopwords = stopwords;
        if (!delimiters.empty()) config.sentence_delimiters = delimiters;
        config.fold_case = fold_case;
        return build_document(RawDocument{id, text}, config);
      },
      py::arg("id"), py::arg("text"), py::arg("morphology") = Morphology::Word,
      py::arg("pos_filter") = false,
      py::arg("stopwords") = std::unordered_set<std::string>{}, py::arg("delimiters") = "",
      py::arg("fold_case") = true);

  m.def(
      "build_matrix",
      [](const Document& doc, LocalScheme local, GlobalScheme global, Adjacency adjacency,
         double gamma) {
        WeightConfig config{local, global, adjacency, gamma};
        return build_matrix(doc, config).values;
      },
      py::arg("document"), py::arg("local") = LocalScheme::Augmented,
      py::arg("global") = GlobalScheme::Entropy, py::arg("adjacency") = Adjacency::None,
      py::arg("gamma") = 0.5);

  m.def(
      "decompose",
      [](const Eigen::MatrixXd& matrix) {
        SvdResult svd = decompose(matrix);
        return py::make_tuple(svd.u, svd.singular_values, svd.vt);
      },
      py::arg("matrix"), "Thin SVD with the deterministic sign convention; returns (U, E, Vt)");
  m.def("filter_sigma", &filter_sigma, py::arg("singular_values"), py::arg("alpha") = 0.5);
  m.def(
      "topic_thresholds",
      [](const FilteredSigma& sigma, std::size_t sentence_count) {
        std::vector<double> thresholds;
        thresholds.reserve(static_cast<std::size_t>(sigma.values.size()));
        for (Eigen::Index k = 0; k < sigma.values.size(); ++k) {
          thresholds.push_back(topic_threshold(sigma, k, sentence_count));
        }
        return thresholds;
      },
      py::arg("sigma"), py::arg("sentence_count"));

  m.def(
      "ess_lsa_select",
      [](const Eigen::MatrixXd& u, const Eigen::VectorXd& singular_values,
         const Eigen::MatrixXd& vt, const Document& doc, std::size_t budget, double alpha,
         std::size_t top_terms) {
        const SvdResult svd{u, singular_values, vt};
        return ess_lsa_select(svd, filter_sigma(singular_values, alpha), doc, budget,
                              {.representative_terms = top_terms});
      },
      py::arg("u"), py::arg("singular_values"), py::arg("vt"), py::arg("document"),
      py::arg("budget"), py::arg("alpha") = 0.5, py::arg("top_terms") = 3);
  m.def("lead_select", &lead_select, py::arg("document"), py::arg("budget"));
  m.def(
      "gong_liu_select",
      [](const Eigen::MatrixXd& u, const Eigen::VectorXd& singular_values,
         const Eigen::MatrixXd& vt, const Document& doc, std::size_t budget) {
        return gong_liu_select(SvdResult{u, singular_values, vt}, doc, budget);
      },
      py::arg("u"), py::arg("singular_values"), py::arg("vt"), py::arg("document"),
      py::arg("budget"));
  m.def(
      "steinberger_select",
      [](const Eigen::MatrixXd& u, const Eigen::VectorXd& singular_values,
         const Eigen::MatrixXd& vt, const Document& doc, std::size_t budget, double alpha) {
        const SvdResult svd{u, singular_values, vt};
        return steinberger_select(svd, filter_sigma(singular_values, alpha), doc, budget);
      },
      py::arg("u"), py::arg("singular_values"), py::arg("vt"), py::arg("document"),
      py::arg("budget"), py::arg("alpha") = 0.5);

  m.def(
      "rouge_n",
      [](const std::string& candidate, const std::vector<std::string>& references,
         const std::vector<int>& orders, std::optional<std::size_t> truncate_words,
         bool case_fold, const std::function<std::string(const std::string&)>& normalize) {
        return rouge_n(candidate, references,
                       make_eval_config(orders, truncate_words, case_fold, normalize));
      },
      py::arg("candidate"), py::arg("references"), py::arg("orders") = std::vector<int>{1, 2},
      py::arg("truncate_words") = std::nullopt, py::arg("case_fold") = true,
      py::arg("normalize") = nullptr);

  m.def("parse_experiment_code", &parse_experiment_code, py::arg("code"));
  m.def("experiment_code_string",
        [](const ExperimentCode& code) { return to_string(code); }, py::arg("code"));
  m.def(
      "budget_for",
      [](std::size_t sentence_count, std::optional<double> ratio,
         std::optional<std::size_t> sentences) {
        return budget_for(sentence_count, make_budget(ratio, sentences));
      },
      py::arg("sentence_count"), py::arg("ratio") = std::nullopt,
      py::arg("sentences") = std::nullopt);

  m.def(
      "summarize",
      [](const std::string& text, const std::string& experiment, const std::string& selector,
         std::optional<double> ratio, std::optional<std::size_t> sentences, double gamma,
         double alpha, std::size_t top_terms, const std::unordered_set<std::string>& stopwords,
         const std::string& delimiters, const std::string& id) {
        const RunConfig config =
            make_run_config(experiment, selector, gamma, alpha, top_terms, stopwords, delimiters);
        return summarize_document(RawDocument{id, text}, config,
                                  make_budget(ratio, sentences))
            .summary;
      },
      py::arg("text"), py::arg("experiment") = "WAWEFNOADJ", py::arg("selector") = "ess_lsa",
      py::arg("ratio") = std::nullopt, py::arg("sentences") = std::nullopt,
      py::arg("gamma") = 0.5, py::arg("alpha") = 0.5, py::arg("top_terms") = 3,
      py::arg("stopwords") = std::unordered_set<std::string>{}, py::arg("delimiters") = "",
      py::arg("id") = "doc",
      "Run the whole pipeline on one text and return the selected summary");
}
