// Command-line surface over the instance gym, exact solver backends and the
// evaluation reports. Exit codes: 0 success, 1 partial trial/verification
// failures, 2 usage or configuration errors.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "nppc/error.hpp"
#include "nppc/eval.hpp"
#include "nppc/gym.hpp"
#include "nppc/instance.hpp"
#include "nppc/ladder.hpp"
#include "nppc/outcome.hpp"
#include "nppc/problem.hpp"
#include "nppc/rng.hpp"
#include "nppc/solver.hpp"

namespace {

using namespace nppc;

std::string env_or(const char* name, const std::string& fallback = "") {
  const char* value = std::getenv(name);
  return value != nullptr ? std::string(value) : fallback;
}

// ---------------------------------------------------------------------------
// generate

struct GenerateArgs {
  std::string problem;
  int level = 1;
  int count = 30;
  uint64_t seed = 42;
  std::string out = "-";
};

int cmd_generate(const GenerateArgs& args) {
  Problem problem = parse_problem(args.problem);
  const gym::ProblemDescriptor& desc = gym::descriptor(problem);
  if (args.count <= 0) fail(Errc::config_mismatch, "count must be positive");
  Ladders ladders;
  const GenConfig& config = ladders.level_config(problem, args.level);

  std::ostringstream lines;
  int verified = 0;
  for (int i = 0; i < args.count; ++i) {
    uint64_t tseed = derive_trial_seed(args.seed, desc.name, args.level, i);
    gym::GeneratedPair pair = gym::generate_instance(problem, config, tseed);
    pair.instance.level = args.level;
    if (gym::verify_solution(pair.instance, pair.planted).ok) ++verified;
    Json doc = Json::object();
    doc["instance"] = canonical_parse_json(canonical_serialize(pair.instance));
    doc["planted"] = pair.planted;
    lines << canonical_dump(doc) << "\n";
  }

  if (args.out == "-") {
    std::cout << lines.str();
  } else {
    std::ofstream out(args.out, std::ios::binary);
    if (!out) fail(Errc::io_error, "cannot open for writing: " + args.out);
    out << lines.str();
    if (!out) fail(Errc::io_error, "write failed: " + args.out);
  }

  // The summary goes to stderr when the pairs stream to stdout.
  std::ostream& info = args.out == "-" ? std::cerr : std::cout;
  info << "self-check " << verified << "/" << args.count
       << " planted solutions verified\n";
  return verified == args.count ? 0 : 1;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  // File of {"instance", "planted"} lines, "-" = stdin.
  std::string pairs = "-";
  std::string instance_path;
  std::string solution_path;
};

std::string slurp_line(const std::string& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_error, std::string("cannot open ") + what + ": " + path);
  std::string line;
  if (!std::getline(in, line))
    fail(Errc::io_error, std::string("empty ") + what + " file: " + path);
  return line;
}

int verify_single(const VerifyArgs& args) {
  Instance inst = canonical_parse(slurp_line(args.instance_path, "instance"));
  Json candidate =
      canonical_parse_json(slurp_line(args.solution_path, "solution"));
  VerifyOutcome outcome = gym::verify_solution(inst, candidate);
  if (outcome.ok) {
    std::cout << "ok\n";
    return 0;
  }
  std::cout << format_error(*outcome.error, inst.problem) << ": "
            << outcome.message << "\n";
  return 1;
}

int verify_pairs(std::istream& in, const std::string& label) {
  std::string line;
  int line_no = 0, total = 0, ok = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    ++total;
    Json doc;
    Instance inst;
    Json candidate;
    try {
      doc = canonical_parse_json(line);
      inst = canonical_parse(canonical_dump(doc.at("instance")));
      candidate = doc.contains("planted") ? doc.at("planted")
                                          : doc.at("solution");
    } catch (const std::exception& e) {
      fail(Errc::parse_error,
           label + ":" + std::to_string(line_no) + ": " + e.what());
    }
    VerifyOutcome outcome = gym::verify_solution(inst, candidate);
    if (outcome.ok) {
      ++ok;
    } else {
      std::cout << label << ":" << line_no << ": "
                << format_error(*outcome.error, inst.problem) << ": "
                << outcome.message << "\n";
    }
  }
  std::cout << "ok " << ok << "/" << total << "\n";
  return ok == total ? 0 : 1;
}

int cmd_verify(const VerifyArgs& args) {
  if (!args.instance_path.empty() || !args.solution_path.empty()) {
    if (args.instance_path.empty() || args.solution_path.empty())
      fail(Errc::config_mismatch,
           "--instance and --solution must be given together");
    return verify_single(args);
  }
  if (args.pairs == "-") return verify_pairs(std::cin, "stdin");
  std::ifstream in(args.pairs, std::ios::binary);
  if (!in) fail(Errc::io_error, "cannot open pairs file: " + args.pairs);
  return verify_pairs(in, args.pairs);
}

// ---------------------------------------------------------------------------
// solve

struct RunManifest {
  std::vector<std::string> problems;
  std::vector<int> levels = {1};
  std::vector<uint64_t> seeds = {42, 53, 64};
  int trials = 30;
  int shots = 1;
  int batch_size = 10;
  int max_tries = 3;
  std::string backend = "http";
  std::string endpoint;
  std::string model;
  std::string fixture;
  uint64_t salt = 0;
  double temperature = 0.6;
  double top_p = 0.95;
  int max_tokens = 7500;
  std::string out = "trials.jsonl";
};

using TrialKey = std::tuple<Problem, int, uint64_t, int>;

bool transport_failed(const solver::TrialRecord& rec) {
  return !rec.outcome.ok && rec.outcome.error &&
         rec.outcome.error->category == ErrorCategory::json_error &&
         rec.outcome.message.rfind("backend unavailable", 0) == 0;
}

std::unique_ptr<solver::Backend> make_backend(const RunManifest& manifest,
                                              std::string* model_label) {
  std::string model = manifest.model;
  if (model.empty()) model = env_or("NPPC_MODEL");

  if (manifest.backend == "http") {
    std::string endpoint = manifest.endpoint;
    if (endpoint.empty()) endpoint = env_or("NPPC_ENDPOINT");
    if (endpoint.empty())
      fail(Errc::config_mismatch,
           "http backend needs --endpoint or NPPC_ENDPOINT");
    if (model.empty()) model = "unknown";
    *model_label = model;
    return solver::make_http_backend(endpoint, env_or("NPPC_API_KEY"), model);
  }
  if (manifest.backend == "oracle") {
    *model_label = model.empty() ? "oracle" : model;
    return solver::make_oracle_backend();
  }
  if (manifest.backend == "random") {
    *model_label = model.empty() ? "random" : model;
    return solver::make_random_backend(manifest.salt);
  }
  if (manifest.backend == "fixture") {
    if (manifest.fixture.empty())
      fail(Errc::config_mismatch, "fixture backend needs --fixture");
    *model_label = model.empty() ? "fixture" : model;
    return solver::make_fixture_backend_from_file(manifest.fixture);
  }
  fail(Errc::config_mismatch, "unknown backend: " + manifest.backend);
}

int cmd_solve(const RunManifest& manifest) {
  if (manifest.problems.empty())
    fail(Errc::config_mismatch, "at least one --problem is required");
  std::vector<Problem> problems;
  for (const std::string& name : manifest.problems)
    problems.push_back(parse_problem(name));

  // Backend construction fails fast (missing endpoint/fixture) before any
  // trial or log write happens.
  std::string model_label;
  std::unique_ptr<solver::Backend> backend =
      make_backend(manifest, &model_label);

  solver::SolverConfig config;
  config.n_shots = manifest.shots;
  config.n_trials = manifest.trials;
  config.batch_size = manifest.batch_size;
  config.max_tries = manifest.max_tries;
  config.seeds = manifest.seeds;
  config.sampling = {manifest.temperature, manifest.top_p,
                     manifest.max_tokens};
  config.model = model_label;

  // Resume scan: completed keys in the existing log are skipped; trials
  // whose last attempt failed transport run again (their superseding record
  // appends later, and readers keep the last record per key).
  std::set<TrialKey> done;
  std::map<TrialKey, solver::TrialRecord> merged;
  {
    std::ifstream in(manifest.out, std::ios::binary);
    std::string line;
    int line_no = 0, malformed = 0;
    while (in && std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      try {
        solver::TrialRecord rec =
            solver::trial_from_json(canonical_parse_json(line));
        TrialKey key{rec.problem, rec.level, rec.seed, rec.trial_index};
        if (!transport_failed(rec)) done.insert(key);
        merged[key] = rec;
      } catch (const std::exception& e) {
        ++malformed;
        std::cerr << "warning: " << manifest.out << ":" << line_no << ": "
                  << e.what() << "\n";
      }
    }
    if (malformed > 0)
      std::cerr << "warning: skipped " << malformed
                << " malformed log lines\n";
  }

  std::ofstream out(manifest.out, std::ios::binary | std::ios::app);
  if (!out) fail(Errc::io_error, "cannot open for append: " + manifest.out);

  int transport_failures = 0;
  for (Problem problem : problems) {
    auto skip = [&](int level, uint64_t seed, int trial) {
      return done.count({problem, level, seed, trial}) > 0;
    };
    std::vector<solver::TrialRecord> records =
        solver::run_batch(problem, manifest.levels, *backend, config, skip);
    for (const solver::TrialRecord& rec : records) {
      out << solver::trial_to_json(rec).dump() << "\n";
      if (!out) fail(Errc::io_error, "write failed: " + manifest.out);
      merged[{rec.problem, rec.level, rec.seed, rec.trial_index}] = rec;
      if (transport_failed(rec)) {
        ++transport_failures;
        std::cerr << "failed trial: " << problem_name(rec.problem)
                  << " level " << rec.level << " seed " << rec.seed
                  << " trial " << rec.trial_index << ": "
                  << rec.outcome.message << "\n";
      }
    }
    out.flush();
  }

  // Accuracy per (problem, level) over the requested scope, resumed records
  // included.
  std::set<uint64_t> seed_set(manifest.seeds.begin(), manifest.seeds.end());
  std::set<int> level_set(manifest.levels.begin(), manifest.levels.end());
  for (Problem problem : problems) {
    for (int level : level_set) {
      int ok = 0, total = 0;
      for (const auto& [key, rec] : merged) {
        if (std::get<0>(key) != problem || std::get<1>(key) != level)
          continue;
        if (!seed_set.count(std::get<2>(key))) continue;
        if (std::get<3>(key) >= manifest.trials) continue;
        ++total;
        if (rec.outcome.ok) ++ok;
      }
      if (total == 0) continue;
      std::printf("%s level %d: accuracy %.2f (%d/%d ok)\n",
                  problem_name(problem).c_str(), level,
                  static_cast<double>(ok) / total, ok, total);
    }
  }
  if (transport_failures > 0) {
    std::cerr << transport_failures << " trials failed transport\n";
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// evaluate

struct EvaluateArgs {
  std::vector<std::string> logs;
  std::string out = "report";
  std::string metric = "mean";
  double gamma = 1.0;
  int resamples = 2000;
  double confidence = 0.95;
  uint64_t seed = 0;
  bool joint_trials = false;
};

int cmd_evaluate(const EvaluateArgs& args) {
  using LogKey = std::tuple<std::string, Problem, int, uint64_t, int>;
  std::map<LogKey, solver::TrialRecord> by_key;  // last record per key wins
  int malformed = 0;
  for (const std::string& path : args.logs) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::io_error, "cannot open log: " + path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      try {
        solver::TrialRecord rec =
            solver::trial_from_json(canonical_parse_json(line));
        by_key[{rec.model, rec.problem, rec.level, rec.seed,
                rec.trial_index}] = rec;
      } catch (const std::exception& e) {
        ++malformed;
        std::cerr << "warning: " << path << ":" << line_no << ": " << e.what()
                  << "\n";
      }
    }
  }
  if (malformed > 0)
    std::cerr << "warning: skipped " << malformed << " malformed log lines\n";
  if (by_key.empty()) {
    std::cerr << "no records\n";
    return 2;
  }

  std::vector<solver::TrialRecord> records;
  records.reserve(by_key.size());
  for (const auto& [key, rec] : by_key) records.push_back(rec);

  eval::EvalOptions options;
  options.resamples = args.resamples;
  options.confidence = args.confidence;
  options.seed = args.seed;
  options.gamma = args.gamma;
  options.level_metric = eval::parse_metric(args.metric);
  options.joint_trials = args.joint_trials;

  eval::Report report = eval::build_report(records, options);

  {
    std::ofstream csv(args.out + ".csv", std::ios::binary);
    if (!csv) fail(Errc::io_error, "cannot write: " + args.out + ".csv");
    csv << report.csv;
    std::ofstream json(args.out + ".json", std::ios::binary);
    if (!json) fail(Errc::io_error, "cannot write: " + args.out + ".json");
    json << report.summary.dump(2) << "\n";
  }

  for (const auto& [model, entry] : report.summary.at("models").items()) {
    std::printf("model %s (%zu records)\n", model.c_str(),
                static_cast<size_t>(std::count_if(
                    records.begin(), records.end(),
                    [&](const solver::TrialRecord& r) {
                      return r.model == model;
                    })));
    for (const char* metric :
         {"mean", "median", "iqm", "optimality_gap"}) {
      const Json& cell = entry.at("overall").at(metric);
      std::printf("  %-15s %.6f  [%.6f, %.6f]\n", metric,
                  cell.at("value").get<double>(),
                  cell.at("ci_low").get<double>(),
                  cell.at("ci_high").get<double>());
    }
  }
  std::cout << "wrote " << args.out << ".csv and " << args.out << ".json\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"NP-complete problem gym: generate, verify, solve, evaluate"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* cmd_gen = app.add_subcommand(
      "generate", "Write canonical instance+planted pairs, one per line");
  cmd_gen->add_option("--problem", gen.problem, "Problem name, e.g. 3SAT")
      ->required();
  cmd_gen->add_option("--level", gen.level, "Difficulty level (default 1)");
  cmd_gen->add_option("--count", gen.count, "Instances to emit (default 30)");
  cmd_gen->add_option("--seed", gen.seed, "Experiment seed (default 42)");
  cmd_gen->add_option("--out", gen.out, "Output path, - for stdout");

  VerifyArgs ver;
  CLI::App* cmd_ver = app.add_subcommand(
      "verify", "Check candidate solutions against instances");
  cmd_ver->add_option("--pairs", ver.pairs,
                      "File of {\"instance\",\"planted\"} lines, - for stdin");
  cmd_ver->add_option("--instance", ver.instance_path,
                      "File holding one canonical instance record");
  cmd_ver->add_option("--solution", ver.solution_path,
                      "File holding one candidate solution");

  RunManifest manifest;
  CLI::App* cmd_sol = app.add_subcommand(
      "solve", "Run trials against a backend and append a JSONL trial log");
  cmd_sol->add_option("--problem", manifest.problems, "Problem name (repeatable)")
      ->required()
      ->delimiter(',');
  cmd_sol->add_option("--levels,--level", manifest.levels,
                      "Difficulty levels (default 1)")
      ->delimiter(',');
  cmd_sol->add_option("--seeds,--seed", manifest.seeds,
                      "Experiment seeds (default 42,53,64)")
      ->delimiter(',');
  cmd_sol->add_option("--trials", manifest.trials, "Trials per cell (default 30)");
  cmd_sol->add_option("--shots", manifest.shots,
                      "In-context examples per prompt (default 1)");
  cmd_sol->add_option("--batch-size", manifest.batch_size,
                      "Max concurrent requests (default 10)");
  cmd_sol->add_option("--max-tries", manifest.max_tries,
                      "Attempts per trial on transport failure (default 3)");
  cmd_sol->add_option("--backend", manifest.backend,
                      "http | oracle | random | fixture (default http)")
      ->check(CLI::IsMember({"http", "oracle", "random", "fixture"}));
  cmd_sol->add_option("--endpoint", manifest.endpoint,
                      "Chat-completions endpoint (or NPPC_ENDPOINT)");
  cmd_sol->add_option("--model", manifest.model,
                      "Model label (or NPPC_MODEL)");
  cmd_sol->add_option("--fixture", manifest.fixture,
                      "Canned replies file for the fixture backend");
  cmd_sol->add_option("--salt", manifest.salt,
                      "Extra seed for the random backend (default 0)");
  cmd_sol->add_option("--temperature", manifest.temperature,
                      "Sampling temperature (default 0.6)");
  cmd_sol->add_option("--top-p", manifest.top_p,
                      "Nucleus sampling mass (default 0.95)");
  cmd_sol->add_option("--max-tokens", manifest.max_tokens,
                      "Completion token cap (default 7500)");
  cmd_sol->add_option("--out", manifest.out,
                      "Trial log path, appended (default trials.jsonl)");

  EvaluateArgs eva;
  CLI::App* cmd_eva = app.add_subcommand(
      "evaluate", "Aggregate trial logs into CSV/JSON reports");
  cmd_eva->alias("report");
  cmd_eva->add_option("--log", eva.logs, "Trial log path (repeatable)")
      ->required();
  cmd_eva->add_option("--metric", eva.metric,
                      "Metric for per-level rows (default mean)")
      ->check(CLI::IsMember({"mean", "median", "iqm", "optimality_gap"}));
  cmd_eva->add_option("--gamma", eva.gamma,
                      "Optimality-gap threshold (default 1.0)");
  cmd_eva->add_option("--resamples", eva.resamples,
                      "Bootstrap resamples (default 2000)");
  cmd_eva->add_option("--confidence", eva.confidence,
                      "Interval mass (default 0.95)");
  cmd_eva->add_option("--seed", eva.seed, "Bootstrap seed (default 0)");
  cmd_eva->add_flag("--joint-trials", eva.joint_trials,
                    "Treat each trial as its own run instead of per-seed "
                    "accuracies");
  cmd_eva->add_option("--out", eva.out,
                      "Report path prefix (default report)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (cmd_gen->parsed()) return cmd_generate(gen);
    if (cmd_ver->parsed()) return cmd_verify(ver);
    if (cmd_sol->parsed()) return cmd_solve(manifest);
    if (cmd_eva->parsed()) return cmd_evaluate(eva);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no subcommand\n";
  return 2;
}
