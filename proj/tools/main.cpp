// lsasumm command line: summarize single documents, evaluate a corpus
// against reference summaries, or score candidate/reference pairs directly.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lsasumm/errors.hpp"
#include "lsasumm/harness.hpp"

namespace fs = std::filesystem;
using namespace lsasumm;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidConfig = 2;
constexpr int kExitCorpusError = 3;
constexpr int kExitNumericalFailure = 4;

struct CommonOptions {
  std::string experiment = "WAWEFNOADJ";
  std::string selector = "ess_lsa";
  std::optional<double> ratio;
  std::optional<std::size_t> sentences;
  double gamma = 0.5;
  double alpha = 0.5;
  std::size_t top_terms = 3;
  std::string stopwords_path;
  bool no_stopwords = false;
  std::string delimiters;
  std::string stem_prefixes;
  std::string stem_suffixes;
  std::string morphology;
  std::string local;
  std::string global;
  bool pos = false;
  std::string adjacency;
};

void add_common_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--experiment", opt.experiment,
                  "Experiment code, e.g. RAWEFPOS4ADJ (see README)")
      ->capture_default_str();
  cmd->add_option("--selector", opt.selector, "ess_lsa|lead|gong_liu|steinberger")
      ->capture_default_str();
  auto* ratio = cmd->add_option("--ratio", opt.ratio, "Compression ratio in (0,1]");
  cmd->add_option("--sentences", opt.sentences, "Absolute summary budget in sentences")
      ->excludes(ratio);
  cmd->add_option("--gamma", opt.gamma, "Adjacent-weight scale in [0,1]")->capture_default_str();
  cmd->add_option("--alpha", opt.alpha, "Singular-value cutoff fraction in [0,1]")
      ->capture_default_str();
  cmd->add_option("--top-terms", opt.top_terms, "Representative terms per topic")
      ->capture_default_str();
  cmd->add_option("--stopwords", opt.stopwords_path, "Stop-word file (one word per line)");
  cmd->add_flag("--no-stopwords", opt.no_stopwords, "Disable stop-word removal");
  cmd->add_option("--delimiters", opt.delimiters, "Sentence delimiter characters");
  auto* prefixes =
      cmd->add_option("--stem-prefixes", opt.stem_prefixes, "Light-stemmer prefix table file");
  cmd->add_option("--stem-suffixes", opt.stem_suffixes, "Light-stemmer suffix table file")
      ->needs(prefixes);
  prefixes->needs(cmd->get_option("--stem-suffixes"));
  cmd->add_option("--morphology", opt.morphology, "word|stem|root (overrides --experiment)");
  cmd->add_option("--local", opt.local, "BR|TF|AW|LW (overrides --experiment)");
  cmd->add_option("--global", opt.global, "NG|ISF|EF (overrides --experiment)");
  cmd->add_flag("--pos", opt.pos, "Enable POS filtering (overrides --experiment)");
  cmd->add_option("--adjacency", opt.adjacency, "none|two|four (overrides --experiment)");
}

std::unordered_set<std::string> resolve_stopwords(const CommonOptions& opt) {
  if (opt.no_stopwords) return {};
  if (!opt.stopwords_path.empty()) return load_stopwords(opt.stopwords_path);
  if (const char* env = std::getenv("LSASUMM_STOPWORDS"); env && *env) {
    return load_stopwords(env);
  }
  // Default files shipped with the repo; silently absent outside a checkout.
  std::unordered_set<std::string> words;
  for (const char* candidate : {"data/stopwords_ar.txt", "data/stopwords_en.txt"}) {
    if (fs::is_regular_file(candidate)) words.merge(load_stopwords(candidate));
  }
  return words;
}

RunConfig make_run_config(const CLI::App* cmd, const CommonOptions& opt,
                          const std::vector<int>& orders,
                          std::optional<std::size_t> truncate) {
  RunConfig config;
  config.code = parse_experiment_code(opt.experiment);
  if (cmd->count("--morphology")) {
    if (opt.morphology == "word") config.code.morphology = Morphology::Word;
    else if (opt.morphology == "stem") config.code.morphology = Morphology::Stem;
    else if (opt.morphology == "root") config.code.morphology = Morphology::Root;
    else throw InvalidCodeError("unknown morphology '" + opt.morphology + "'");
  }
  if (cmd->count("--local")) {
    config.code.local = parse_experiment_code("W" + opt.local + "NGNOADJ").local;
  }
  if (cmd->count("--global")) {
    config.code.global = parse_experiment_code("WTF" + opt.global + "NOADJ").global;
  }
  if (cmd->count("--pos")) config.code.pos = true;
  if (cmd->count("--adjacency")) {
    if (opt.adjacency == "none") config.code.adjacency = Adjacency::None;
    else if (opt.adjacency == "two") config.code.adjacency = Adjacency::Two;
    else if (opt.adjacency == "four") config.code.adjacency = Adjacency::Four;
    else throw InvalidCodeError("unknown adjacency '" + opt.adjacency + "'");
  }
  config.selector = parse_selector(opt.selector);
  if (opt.gamma < 0.0 || opt.gamma > 1.0) throw std::invalid_argument("gamma must lie in [0,1]");
  if (opt.alpha < 0.0 || opt.alpha > 1.0) throw std::invalid_argument("alpha must lie in [0,1]");
  config.gamma = opt.gamma;
  config.alpha = opt.alpha;
  config.representative_terms = opt.top_terms;
  config.stopwords = resolve_stopwords(opt);
  config.sentence_delimiters = opt.delimiters;
  if (!opt.stem_prefixes.empty()) {
    config.stem_tables = StemTables::load(opt.stem_prefixes, opt.stem_suffixes);
  }
  config.eval.orders = orders;
  config.eval.truncate_words = truncate;
  return config;
}

Budget make_budget(const CommonOptions& opt, const Budget& fallback) {
  if (opt.ratio) return Budget::from_ratio(*opt.ratio);
  if (opt.sentences) return Budget::from_sentences(*opt.sentences);
  return fallback;
}

std::vector<int> parse_orders(const std::string& spec) {
  std::vector<int> orders;
  std::string token;
  std::istringstream in(spec);
  while (std::getline(in, token, ',')) {
    if (!token.empty()) orders.push_back(std::stoi(token));
  }
  if (orders.empty()) throw std::invalid_argument("no n-gram orders given");
  return orders;
}

int run_summarize(const CLI::App* cmd, const std::string& file, const CommonOptions& opt,
                  bool as_json) {
  RunConfig config = make_run_config(cmd, opt, {1, 2}, std::nullopt);
  const Budget budget = make_budget(opt, Budget::from_ratio(0.3));
  const RawDocument raw{fs::path(file).stem().string(), read_text_file(file)};
  const DocumentRun run = summarize_document(raw, config, budget);
  if (as_json) {
    nlohmann::ordered_json j;
    j["id"] = run.document.id;
    j["experiment"] = to_string(config.code);
    j["selector"] = to_string(config.selector);
    j["sentences"] = run.document.sentence_count();
    j["budget"] = run.budget;
    j["selected"] = run.summary.sentence_indices;
    j["summary"] = run.summary.rendered;
    std::cout << j.dump(2) << "\n";
  } else {
    for (std::size_t idx : run.summary.sentence_indices) {
      std::cout << run.document.sentences[idx].surface << "\n";
    }
  }
  return kExitOk;
}

int run_evaluate(const CLI::App* cmd, const std::string& manifest_path, const CommonOptions& opt,
                 const std::string& orders_spec, std::optional<std::size_t> truncate,
                 unsigned jobs, const std::string& output, const std::string& csv) {
  RunConfig config = make_run_config(cmd, opt, parse_orders(orders_spec), truncate);
  config.jobs = jobs;
  CorpusManifest manifest = load_manifest(manifest_path);
  if (opt.ratio || opt.sentences) manifest.budget = make_budget(opt, manifest.budget);

  const RunReport report = run_experiment(manifest, config);
  const std::string json = report_to_json(report).dump(2) + "\n";
  if (output.empty() || output == "-") {
    std::cout << json;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw CorpusError("cannot write report: " + output);
    out << json;
  }
  if (!csv.empty()) {
    std::ofstream out(csv, std::ios::binary);
    if (!out) throw CorpusError("cannot write CSV: " + csv);
    out << report_to_csv(report);
  }
  return kExitOk;
}

int run_rouge(const std::string& candidate_path, const std::vector<std::string>& reference_paths,
              const std::string& orders_spec, std::optional<std::size_t> truncate,
              bool case_fold, bool as_json) {
  EvalConfig config;
  config.orders = parse_orders(orders_spec);
  config.truncate_words = truncate;
  config.case_fold = case_fold;
  const std::string candidate = read_text_file(candidate_path);
  std::vector<std::string> references;
  references.reserve(reference_paths.size());
  for (const auto& path : reference_paths) references.push_back(read_text_file(path));
  const auto scores = rouge_n(candidate, references, config);
  if (as_json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& s : scores) {
      j.push_back({{"order", s.order},
                   {"recall", s.recall},
                   {"precision", s.precision},
                   {"f1", s.f1},
                   {"per_reference", s.per_reference}});
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout.precision(6);
    for (const auto& s : scores) {
      std::cout << "ROUGE-" << s.order << " recall=" << s.recall
                << " precision=" << s.precision << " f1=" << s.f1 << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extractive summarization with enhanced latent semantic analysis"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from an INI/TOML file");

  CommonOptions sum_opt;
  std::string sum_file;
  bool sum_json = false;
  auto* sum = app.add_subcommand("summarize", "Summarize one UTF-8 text file");
  sum->add_option("file", sum_file, "Input document")->required();
  add_common_flags(sum, sum_opt);
  sum->add_flag("--json", sum_json, "Emit a JSON result instead of plain sentences");

  CommonOptions eval_opt;
  std::string manifest_path, eval_orders = "1,2", eval_output, eval_csv;
  std::optional<std::size_t> eval_truncate;
  unsigned eval_jobs = 1;
  auto* eval = app.add_subcommand("evaluate", "Run an experiment over a corpus manifest");
  eval->add_option("manifest", manifest_path, "Manifest JSON or corpus directory")->required();
  add_common_flags(eval, eval_opt);
  eval->add_option("-n,--orders", eval_orders, "Comma-separated n-gram orders")
      ->capture_default_str();
  eval->add_option("--truncate", eval_truncate, "Truncate candidates to this many words");
  eval->add_option("--jobs", eval_jobs, "Parallel document workers")->capture_default_str();
  eval->add_option("-o,--output", eval_output, "Report path ('-' for stdout)");
  eval->add_option("--csv", eval_csv, "Also write per-document rows as CSV");

  std::string rouge_candidate, rouge_orders = "1,2";
  std::vector<std::string> rouge_references;
  std::optional<std::size_t> rouge_truncate;
  bool rouge_json = false, rouge_keep_case = false;
  auto* rouge = app.add_subcommand("rouge", "Score a candidate file against reference files");
  rouge->add_option("candidate", rouge_candidate, "Candidate summary file")->required();
  rouge->add_option("references", rouge_references, "Reference summary files")->required();
  rouge->add_option("-n,--orders", rouge_orders, "Comma-separated n-gram orders")
      ->capture_default_str();
  rouge->add_option("--truncate", rouge_truncate, "Truncate the candidate to this many words");
  rouge->add_flag("--keep-case", rouge_keep_case, "Disable case folding");
  rouge->add_flag("--json", rouge_json, "Emit scores as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInvalidConfig;
  }

  try {
    if (sum->parsed()) return run_summarize(sum, sum_file, sum_opt, sum_json);
    if (eval->parsed()) {
      return run_evaluate(eval, manifest_path, eval_opt, eval_orders, eval_truncate, eval_jobs,
                          eval_output, eval_csv);
    }
    if (rouge->parsed()) {
      return run_rouge(rouge_candidate, rouge_references, rouge_orders, rouge_truncate,
                       !rouge_keep_case, rouge_json);
    }
  } catch (const InvalidCodeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidConfig;
  } catch (const NumericalFailureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumericalFailure;
  } catch (const DegenerateSpectrumError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumericalFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCorpusError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCorpusError;
  }
  return kExitOk;
}
