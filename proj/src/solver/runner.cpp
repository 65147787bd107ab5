#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "nppc/error.hpp"
#include "nppc/rng.hpp"
#include "nppc/solver.hpp"

namespace nppc::solver {

namespace {

struct Job {
  int level = 0;
  uint64_t seed = 0;
  int trial = 0;
};

TrialRecord run_one(Problem problem, const gym::ProblemDescriptor& desc,
                    const GenConfig& gen_config, const Job& job,
                    Backend& backend, const SolverConfig& config) {
  TrialRecord rec;
  rec.problem = problem;
  rec.level = job.level;
  rec.seed = job.seed;
  rec.trial_index = job.trial;
  rec.model = config.model;

  const uint64_t trial_seed =
      derive_trial_seed(job.seed, desc.name, job.level, job.trial);
  gym::GeneratedPair target =
      gym::generate_instance(problem, gen_config, trial_seed);
  target.instance.level = job.level;
  rec.instance = target.instance;
  rec.planted = target.planted;

  std::vector<gym::GeneratedPair> examples;
  for (int s = 0; s < config.n_shots; ++s) {
    gym::GeneratedPair ex = gym::generate_instance(
        problem, gen_config, example_seed(trial_seed, s));
    ex.instance.level = job.level;
    examples.push_back(std::move(ex));
  }
  const PromptBundle prompt = render_prompt(desc, examples, target.instance);

  BackendReply reply;
  int attempt = 0;
  while (attempt < config.max_tries) {
    ++attempt;
    reply = backend.complete(prompt.text, config.sampling);
    if (reply.finish != Finish::transport_error) break;
  }
  rec.attempts = attempt;
  rec.prompt_tokens = reply.prompt_tokens;
  rec.completion_tokens = reply.completion_tokens;
  rec.raw_response = reply.text;

  if (reply.finish == Finish::transport_error) {
    // Backend unavailable: recorded, never raised. No reply was produced,
    // so the trial lands in the json_error bucket with the failure detail.
    rec.outcome.ok = false;
    rec.outcome.error = ErrorCode{ErrorCategory::json_error, 0};
    rec.outcome.message = "backend unavailable after " +
                          std::to_string(attempt) +
                          " attempts: " + reply.text;
    return rec;
  }

  rec.aha_count = count_aha(
      reply.reasoning_text.empty() ? reply.text : reply.reasoning_text);

  Extraction ex = extract_solution(reply.text);
  if (!ex.solution.has_value()) {
    rec.outcome.ok = false;
    rec.outcome.error = ErrorCode{ErrorCategory::json_error, 0};
    rec.outcome.message = ex.error;
    return rec;
  }
  rec.extracted = *ex.solution;
  rec.outcome = gym::verify_solution(target.instance, *ex.solution);
  return rec;
}

}  // namespace

std::vector<TrialRecord> run_batch(
    Problem problem, const std::vector<int>& levels, Backend& backend,
    const SolverConfig& config,
    const std::function<bool(int level, uint64_t seed, int trial)>& skip,
    const Ladders& ladders) {
  if (config.n_shots < 1 || config.n_trials < 1 || config.batch_size < 1 ||
      config.max_tries < 1 || config.seeds.empty())
    fail(Errc::config_mismatch,
         "run_batch: shots, trials, batch size, tries and seeds must all be "
         "positive");

  std::vector<int> lv = levels;
  std::sort(lv.begin(), lv.end());
  lv.erase(std::unique(lv.begin(), lv.end()), lv.end());

  const gym::ProblemDescriptor& desc = gym::descriptor(problem);
  std::vector<const GenConfig*> configs;  // resolved up front: bad levels
  for (int level : lv)                    // fail before any backend call
    configs.push_back(&ladders.level_config(problem, level));

  std::vector<Job> jobs;
  for (size_t li = 0; li < lv.size(); ++li)
    for (uint64_t seed : config.seeds)
      for (int trial = 0; trial < config.n_trials; ++trial)
        if (!skip || !skip(lv[li], seed, trial))
          jobs.push_back({lv[li], seed, trial});

  std::vector<TrialRecord> records(jobs.size());
  if (jobs.empty()) return records;

  auto config_for = [&](int level) {
    size_t at = static_cast<size_t>(
        std::lower_bound(lv.begin(), lv.end(), level) - lv.begin());
    return configs[at];
  };

  int width = config.batch_size;
  if (backend.concurrency_limit() > 0)
    width = std::min(width, backend.concurrency_limit());
  width = static_cast<int>(
      std::min<size_t>(static_cast<size_t>(width), jobs.size()));

  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      try {
        records[i] = run_one(problem, desc, *config_for(jobs[i].level),
                             jobs[i], backend, config);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  if (width == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < width; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

Json trial_to_json(const TrialRecord& rec) {
  Json doc = Json::object();
  doc["problem"] = problem_name(rec.problem);
  doc["level"] = rec.level;
  doc["seed"] = rec.seed;
  doc["trial_index"] = rec.trial_index;
  doc["model"] = rec.model;
  doc["instance"] = canonical_parse_json(canonical_serialize(rec.instance));
  doc["planted"] = rec.planted;
  doc["prompt_tokens"] = rec.prompt_tokens;
  doc["completion_tokens"] = rec.completion_tokens;
  doc["raw_response"] = rec.raw_response;
  // A reply whose extracted "solution" is the JSON null collapses to the
  // no-extraction encoding here; both verify identically downstream.
  doc["extracted"] = rec.extracted.has_value() ? *rec.extracted : Json();
  doc["ok"] = rec.outcome.ok;
  doc["error"] = rec.outcome.error.has_value()
                     ? Json(format_error(*rec.outcome.error, rec.problem))
                     : Json();
  doc["message"] = rec.outcome.message;
  doc["attempts"] = rec.attempts;
  doc["aha_count"] = rec.aha_count;
  return doc;
}

TrialRecord trial_from_json(const Json& doc) {
  try {
    TrialRecord rec;
    rec.problem = parse_problem(doc.at("problem").get<std::string>());
    rec.level = doc.at("level").get<int>();
    rec.seed = doc.at("seed").get<uint64_t>();
    rec.trial_index = doc.at("trial_index").get<int>();
    rec.model = doc.at("model").get<std::string>();
    rec.instance = canonical_parse(canonical_dump(doc.at("instance")));
    rec.planted = doc.at("planted");
    rec.prompt_tokens = doc.at("prompt_tokens").get<int64_t>();
    rec.completion_tokens = doc.at("completion_tokens").get<int64_t>();
    rec.raw_response = doc.at("raw_response").get<std::string>();
    if (!doc.at("extracted").is_null()) rec.extracted = doc.at("extracted");
    rec.outcome.ok = doc.at("ok").get<bool>();
    if (!doc.at("error").is_null())
      rec.outcome.error =
          parse_error_text(doc.at("error").get<std::string>()).code;
    rec.outcome.message = doc.at("message").get<std::string>();
    rec.attempts = doc.at("attempts").get<int>();
    rec.aha_count = doc.at("aha_count").get<int>();
    return rec;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(Errc::parse_error, std::string("bad trial record: ") + e.what());
  }
}

}  // namespace nppc::solver
