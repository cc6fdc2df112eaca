#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "lsasumm/corpus.hpp"
#include "lsasumm/evaluation.hpp"
#include "lsasumm/experiment.hpp"
#include "lsasumm/selection.hpp"

// Orchestration: document -> matrix -> SVD -> selection -> ROUGE for a whole
// corpus, with a deterministic JSON/CSV report.
namespace lsasumm {

enum class SelectorKind { EssLsa, Lead, GongLiu, Steinberger };

SelectorKind parse_selector(std::string_view name);  // throws InvalidCodeError
std::string to_string(SelectorKind kind);

struct RunConfig {
  ExperimentCode code;
  SelectorKind selector = SelectorKind::EssLsa;
  double gamma = 0.5;
  double alpha = 0.5;
  std::size_t representative_terms = 3;
  std::unordered_set<std::string> stopwords;
  std::string sentence_delimiters;  // empty -> pipeline default
  StemTables stem_tables = StemTables::defaults();
  EvalConfig eval;
  unsigned jobs = 1;

  PipelineConfig pipeline_config() const;
  WeightConfig weight_config() const;
};

// One document summarized end to end (shared by the CLI and run_experiment).
struct DocumentRun {
  Document document;
  Summary summary;
  std::size_t budget = 0;
};

DocumentRun summarize_document(const RawDocument& raw, const RunConfig& config,
                               const Budget& budget);

struct DocumentResult {
  std::string id;
  std::size_t sentence_count = 0;
  std::size_t budget = 0;
  std::vector<std::size_t> selected;
  std::vector<RougeScore> rouge;
  bool evaluated = false;
  std::string warning;
};

struct RunReport {
  std::string experiment;
  std::string selector;
  double gamma = 0.5;
  double alpha = 0.5;
  Budget budget = Budget::from_ratio(0.3);
  std::vector<int> orders;
  std::vector<DocumentResult> documents;
  std::size_t documents_evaluated = 0;
  std::vector<RougeScore> aggregate;  // per order; mean over evaluated documents
};

// Runs every manifest document through the pipeline and evaluates against
// its references. Documents without references are summarized but skipped in
// the aggregate, with a warning recorded. Throws EmptyCorpusError on an
// empty manifest.
RunReport run_experiment(const CorpusManifest& manifest, const RunConfig& config);

nlohmann::ordered_json report_to_json(const RunReport& report);
std::string report_to_csv(const RunReport& report);

}  // namespace lsasumm
