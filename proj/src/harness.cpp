#include "lsasumm/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "lsasumm/errors.hpp"
#include "lsasumm/lsa_core.hpp"
#include "lsasumm/weighting.hpp"

namespace lsasumm {

SelectorKind parse_selector(std::string_view name) {
  if (name == "ess_lsa" || name == "ess-lsa") return SelectorKind::EssLsa;
  if (name == "lead") return SelectorKind::Lead;
  if (name == "gong_liu" || name == "gong-liu") return SelectorKind::GongLiu;
  if (name == "steinberger") return SelectorKind::Steinberger;
  throw InvalidCodeError("unknown selector '" + std::string(name) +
                         "' (expected ess_lsa|lead|gong_liu|steinberger)");
}

std::string to_string(SelectorKind kind) {
  switch (kind) {
    case SelectorKind::EssLsa: return "ess_lsa";
    case SelectorKind::Lead: return "lead";
    case SelectorKind::GongLiu: return "gong_liu";
    case SelectorKind::Steinberger: return "steinberger";
  }
  return "?";
}

PipelineConfig RunConfig::pipeline_config() const {
  PipelineConfig pipeline;
  if (!sentence_delimiters.empty()) pipeline.sentence_delimiters = sentence_delimiters;
  pipeline.stopwords = stopwords;
  pipeline.morphology = code.morphology;
  pipeline.pos_filter = code.pos;
  pipeline.stem_tables = stem_tables;
  return pipeline;
}

WeightConfig RunConfig::weight_config() const {
  WeightConfig weight;
  weight.local = code.local;
  weight.global = code.global;
  weight.adjacency = code.adjacency;
  weight.gamma = gamma;
  return weight;
}

DocumentRun summarize_document(const RawDocument& raw, const RunConfig& config,
                               const Budget& budget) {
  DocumentRun run;
  run.document = build_document(raw, config.pipeline_config());
  run.budget = budget.resolve(run.document.sentence_count());

  if (config.selector == SelectorKind::Lead) {
    run.summary = lead_select(run.document, run.budget);
    return run;
  }

  const TermSentenceMatrix matrix = build_matrix(run.document, config.weight_config());
  const SvdResult svd = decompose(matrix.values);
  const FilteredSigma sigma = filter_sigma(svd.singular_values, config.alpha);
  switch (config.selector) {
    case SelectorKind::EssLsa:
      run.summary = ess_lsa_select(svd, sigma, run.document, run.budget,
                                   {.representative_terms = config.representative_terms});
      break;
    case SelectorKind::GongLiu:
      run.summary = gong_liu_select(svd, run.document, run.budget);
      break;
    case SelectorKind::Steinberger:
      run.summary = steinberger_select(svd, sigma, run.document, run.budget);
      break;
    case SelectorKind::Lead:
      break;  // handled above
  }
  return run;
}

namespace {

DocumentResult process_document(const ManifestEntry& entry, const RunConfig& config,
                                const Budget& budget) {
  DocumentResult result;
  result.id = entry.id;

  const RawDocument raw{entry.id, read_text_file(entry.path)};
  DocumentRun run = summarize_document(raw, config, budget);
  result.sentence_count = run.document.sentence_count();
  result.budget = run.budget;
  result.selected = run.summary.sentence_indices;

  if (entry.references.empty()) {
    result.warning = "no references; evaluation skipped";
    return result;
  }
  std::vector<std::string> references;
  references.reserve(entry.references.size());
  for (const auto& ref : entry.references) references.push_back(read_text_file(ref));
  result.rouge = rouge_n(run.summary.rendered, references, config.eval);
  result.evaluated = true;
  return result;
}

}  // namespace

RunReport run_experiment(const CorpusManifest& manifest, const RunConfig& config) {
  if (manifest.documents.empty()) {
    throw EmptyCorpusError("manifest names no documents");
  }

  RunReport report;
  report.experiment = to_string(config.code);
  report.selector = to_string(config.selector);
  report.gamma = config.gamma;
  report.alpha = config.alpha;
  report.budget = manifest.budget;
  report.orders = config.eval.orders;
  report.documents.resize(manifest.documents.size());

  const unsigned jobs =
      std::max(1u, std::min<unsigned>(config.jobs,
                                      static_cast<unsigned>(manifest.documents.size())));
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    while (true) {
      const std::size_t index = cursor.fetch_add(1);
      if (index >= manifest.documents.size()) return;
      try {
        report.documents[index] =
            process_document(manifest.documents[index], config, manifest.budget);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  // Aggregate: arithmetic mean over evaluated documents, per order.
  for (int order : report.orders) {
    RougeScore mean;
    mean.order = order;
    std::size_t count = 0;
    for (const DocumentResult& doc : report.documents) {
      if (!doc.evaluated) continue;
      for (const RougeScore& score : doc.rouge) {
        if (score.order != order) continue;
        mean.recall += score.recall;
        mean.precision += score.precision;
        mean.f1 += score.f1;
        ++count;
      }
    }
    if (count > 0) {
      mean.recall /= static_cast<double>(count);
      mean.precision /= static_cast<double>(count);
      mean.f1 /= static_cast<double>(count);
    }
    report.aggregate.push_back(std::move(mean));
  }
  report.documents_evaluated = static_cast<std::size_t>(
      std::count_if(report.documents.begin(), report.documents.end(),
                    [](const DocumentResult& d) { return d.evaluated; }));
  return report;
}

namespace {

nlohmann::ordered_json score_to_json(const RougeScore& score, bool per_reference) {
  nlohmann::ordered_json j;
  j["order"] = score.order;
  j["recall"] = score.recall;
  j["precision"] = score.precision;
  j["f1"] = score.f1;
  if (per_reference) j["per_reference"] = score.per_reference;
  return j;
}

}  // namespace

nlohmann::ordered_json report_to_json(const RunReport& report) {
  nlohmann::ordered_json j;
  j["experiment"] = report.experiment;
  j["selector"] = report.selector;
  j["gamma"] = report.gamma;
  j["alpha"] = report.alpha;
  if (report.budget.is_ratio()) {
    j["budget"] = {{"mode", "ratio"}, {"value", report.budget.ratio()}};
  } else {
    j["budget"] = {{"mode", "sentences"}, {"value", report.budget.sentences()}};
  }
  j["orders"] = report.orders;
  j["documents"] = nlohmann::ordered_json::array();
  for (const DocumentResult& doc : report.documents) {
    nlohmann::ordered_json d;
    d["id"] = doc.id;
    d["sentences"] = doc.sentence_count;
    d["budget"] = doc.budget;
    d["selected"] = doc.selected;
    d["evaluated"] = doc.evaluated;
    if (!doc.warning.empty()) d["warning"] = doc.warning;
    if (doc.evaluated) {
      d["rouge"] = nlohmann::ordered_json::array();
      for (const RougeScore& score : doc.rouge) d["rouge"].push_back(score_to_json(score, true));
    }
    j["documents"].push_back(std::move(d));
  }
  j["aggregate"]["documents_evaluated"] = report.documents_evaluated;
  j["aggregate"]["rouge"] = nlohmann::ordered_json::array();
  for (const RougeScore& score : report.aggregate) {
    j["aggregate"]["rouge"].push_back(score_to_json(score, false));
  }
  return j;
}

std::string report_to_csv(const RunReport& report) {
  std::ostringstream out;
  out << "id,sentences,budget,selected,order,recall,precision,f1\n";
  out.precision(17);
  for (const DocumentResult& doc : report.documents) {
    std::string selected;
    for (std::size_t idx : doc.selected) {
      if (!selected.empty()) selected += ';';
      selected += std::to_string(idx);
    }
    if (!doc.evaluated) {
      out << doc.id << ',' << doc.sentence_count << ',' << doc.budget << ',' << selected
          << ",,,,\n";
      continue;
    }
    for (const RougeScore& score : doc.rouge) {
      out << doc.id << ',' << doc.sentence_count << ',' << doc.budget << ',' << selected << ','
          << score.order << ',' << score.recall << ',' << score.precision << ',' << score.f1
          << "\n";
    }
  }
  return out.str();
}

}  // namespace lsasumm
