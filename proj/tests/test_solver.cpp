#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "doctest.h"
#include "nppc/error.hpp"
#include "nppc/gym.hpp"
#include "nppc/ladder.hpp"
#include "nppc/rng.hpp"
#include "nppc/solver.hpp"

using namespace nppc;
using namespace nppc::solver;

namespace {

Instance target_instance(Problem p, int level, uint64_t seed) {
  const GenConfig& cfg = Ladders().level_config(p, level);
  gym::GeneratedPair pair = gym::generate_instance(p, cfg, seed);
  pair.instance.level = level;
  return pair.instance;
}

PromptBundle golden_bundle() {
  const uint64_t tseed = derive_trial_seed(42, "3SAT", 1, 0);
  const GenConfig& cfg = Ladders().level_config(Problem::three_sat, 1);
  gym::GeneratedPair ex =
      gym::generate_instance(Problem::three_sat, cfg, example_seed(tseed, 0));
  ex.instance.level = 1;
  return render_prompt(gym::descriptor(Problem::three_sat), {ex},
                       target_instance(Problem::three_sat, 1, tseed));
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("extraction handles the full fallback corpus") {
  struct Fixture {
    const char* name;
    const char* reply;
    const char* want_dump;  // nullptr when extraction must fail
    const char* want_error;
  };
  const Fixture corpus[] = {
      {"fenced block", "Reasoning.\n```json\n{\"solution\": [1,0,1]}\n```",
       "[1,0,1]", nullptr},
      {"bare object with no fence or prefix", "{\"solution\": \"abc\"}",
       "\"abc\"", nullptr},
      {"prose only", "I cannot solve this.", nullptr,
       "No JSON found in the text."},
      {"last fenced block wins",
       "```json\n{\"solution\": 1}\n```\nno wait\n"
       "```json\n{\"solution\": 2}\n```",
       "2", nullptr},
      {"fenced stage beats later bare objects",
       "```json\n{\"solution\": \"fenced\"}\n```\n"
       "Afterthought: {\"solution\": \"bare\"}",
       "\"fenced\"", nullptr},
      {"json prefix with whitespace", "The answer is json\n  {\"solution\": 3}",
       "3", nullptr},
      {"last json-prefixed object wins",
       "json {\"solution\": 1} then json {\"solution\": 2}", "2", nullptr},
      {"last bare object wins",
       "{\"solution\": [0]} or rather {\"solution\": [1]}", "[1]", nullptr},
      {"line comments stripped",
       "```json\n{\"solution\": [0, 1] // chosen nodes\n}\n```", "[0,1]",
       nullptr},
      {"block comments stripped",
       "```json\n{/* final */ \"solution\": true}\n```", "true", nullptr},
      {"missing solution key", "```json\n{\"answer\": 41}\n```", nullptr,
       "Error parsing JSON or answer field: 'solution'"},
      {"malformed object", "```json\n{\"solution\": [1,\n```", nullptr, ""},
      {"truncated reply with partial object",
       "The cover must include node 7, so {\"solution\"", nullptr,
       "No JSON found in the text."},
      {"fenced non-object", "```json\n[1,2]\n```", nullptr, ""},
      {"inner object of nested braces", "{\"a\": {\"solution\": 5}}", "5",
       nullptr},
  };

  int checked = 0;
  for (const Fixture& f : corpus) {
    CAPTURE(f.name);
    Extraction got = extract_solution(f.reply);
    if (f.want_dump != nullptr) {
      REQUIRE(got.solution.has_value());
      CHECK(got.solution->dump() == f.want_dump);
      CHECK(got.error.empty());
    } else {
      CHECK_FALSE(got.solution.has_value());
      if (f.want_error[0] != '\0')
        CHECK(got.error == f.want_error);
      else
        CHECK(got.error.substr(0, 36) ==
              "Error parsing JSON or answer field: ");
    }
    ++checked;
  }
  CHECK(checked >= 12);
}

TEST_CASE("comment stripping leaves delimiter-free text alone") {
  const char* corpus[] = {
      "{\"solution\": \"abc\"}",
      "{\"solution\": [1, 2, 3], \"note\": \"a / b * c\"}",
      "{\"solution\": \"10/2 = 5\"}",
      "plain prose with no comments at all",
      "{\"solution\": \"star * slash / apart\"}",
  };
  for (const char* s : corpus) CHECK(strip_json_comments(s) == s);

  CHECK(strip_json_comments("keep // drop\nnext") == "keep \nnext");
  CHECK(strip_json_comments("a /* gone */ b") == "a  b");
  // The line pass runs first and can swallow a block opener.
  CHECK(strip_json_comments("a // x /* y\nb */ c") == "a \nb */ c");
  // Unterminated block comments stay put, matching the lazy pattern.
  CHECK(strip_json_comments("a /* open") == "a /* open");
}

TEST_CASE("extraction returns the solution field verbatim") {
  Extraction got = extract_solution(
      "```json\n{\"solution\": {\"x\": 1}, \"why\": \"because\"}\n```");
  // Stage 1 captures the whole fenced body even with nested braces.
  REQUIRE(got.solution.has_value());
  CHECK(got.solution->dump() == "{\"x\":1}");

  // The null solution comes back as an extracted null, not an error.
  got = extract_solution("```json\n{\"solution\": null}\n```");
  REQUIRE(got.solution.has_value());
  CHECK(got.solution->is_null());
}

TEST_CASE("prompt renders the template byte for byte") {
  PromptBundle bundle = golden_bundle();
  CHECK(bundle.shots == 1);
  REQUIRE(bundle.example_pairs.size() == 1);

  const std::string golden =
      slurp(std::string(NPPC_REPO_ROOT) + "/tests/golden/prompt_three_sat.txt");
  CHECK(bundle.text == golden);

  // Section order, including the instruction sentence.
  size_t a = bundle.text.find("# 3SAT Problem Description:");
  size_t b = bundle.text.find("# Examples:");
  size_t c = bundle.text.find("# Problem to Solve: ");
  size_t d = bundle.text.find("# Instruction:");
  size_t e = bundle.text.find("Reason step by step and present");
  REQUIRE(a != std::string::npos);
  REQUIRE(e != std::string::npos);
  CHECK(a < b);
  CHECK(b < c);
  CHECK(c < d);
  CHECK(d < e);
  CHECK(bundle.text.find("{\"solution\": \"___\" }") != std::string::npos);

  // Byte-stable across calls.
  CHECK(golden_bundle().text == bundle.text);
}

TEST_CASE("prompt embeds examples in order and rejects mismatches") {
  const auto& desc = gym::descriptor(Problem::vertex_cover);
  const GenConfig& cfg = Ladders().level_config(Problem::vertex_cover, 1);
  gym::GeneratedPair e1 =
      gym::generate_instance(Problem::vertex_cover, cfg, 1);
  gym::GeneratedPair e2 =
      gym::generate_instance(Problem::vertex_cover, cfg, 2);
  Instance target = target_instance(Problem::vertex_cover, 1, 3);

  PromptBundle two = render_prompt(desc, {e1, e2}, target);
  CHECK(two.shots == 2);
  const std::string pair1 = "Problem: " + canonical_dump(e1.instance.payload) +
                            "\n{\"solution\": " + canonical_dump(e1.planted) +
                            "}\n";
  const std::string pair2 = "Problem: " + canonical_dump(e2.instance.payload) +
                            "\n{\"solution\": " + canonical_dump(e2.planted) +
                            "}\n";
  CHECK(two.text.find(pair1 + pair2) != std::string::npos);

  CHECK_THROWS_AS(render_prompt(desc, {}, target), Error);
  Instance wrong = target_instance(Problem::three_sat, 1, 4);
  CHECK_THROWS_AS(render_prompt(desc, {e1}, wrong), Error);
  gym::GeneratedPair alien = gym::generate_instance(
      Problem::three_sat, Ladders().level_config(Problem::three_sat, 1), 5);
  CHECK_THROWS_AS(render_prompt(desc, {alien}, target), Error);
}

TEST_CASE("aha counting is case-insensitive and whole-word") {
  CHECK(count_aha("Wait, wait. That's it.") == 2);
  CHECK(count_aha("") == 0);
  CHECK(count_aha("awaiting results") == 0);
  CHECK(count_aha("WAIT... wait?! Wait.") == 3);
  CHECK(count_aha("wait_here and waits") == 0);
  CHECK(count_aha("wait\nwait") == 2);
  CHECK(count_aha("hmm, wait", {"hmm", "wait"}) == 2);
  CHECK(count_aha("anything", {}) == 0);
}

TEST_CASE("oracle backend solves easy levels through the full pipeline") {
  auto backend = make_oracle_backend();
  SolverConfig config;
  config.n_trials = 3;
  config.seeds = {42};
  config.model = "oracle";
  for (Problem p : {Problem::three_sat, Problem::vertex_cover,
                    Problem::superstring, Problem::partition}) {
    CAPTURE(problem_name(p));
    auto records = run_batch(p, {1}, *backend, config);
    REQUIRE(records.size() == 3);
    for (const auto& rec : records) {
      CAPTURE(rec.trial_index);
      CHECK(rec.outcome.ok);
      CHECK(rec.attempts == 1);
      CHECK(rec.extracted.has_value());
      CHECK(rec.aha_count == 0);
    }
  }
}

TEST_CASE("random backend emits schema-valid but almost surely wrong answers") {
  auto backend = make_random_backend();
  SolverConfig config;
  config.n_trials = 8;
  config.seeds = {7};
  config.model = "random";
  auto records = run_batch(Problem::three_sat, {3}, *backend, config);
  REQUIRE(records.size() == 8);
  for (const auto& rec : records) {
    REQUIRE(rec.extracted.has_value());
    // Schema-valid: a wrong answer must be a semantic error, never a
    // format error.
    if (!rec.outcome.ok) {
      REQUIRE(rec.outcome.error.has_value());
      CHECK(rec.outcome.error->category == ErrorCategory::problem_error);
    }
  }

  // Deterministic in (salt, prompt): the serialized log reproduces.
  auto again = run_batch(Problem::three_sat, {3}, *backend, config);
  REQUIRE(again.size() == records.size());
  for (size_t i = 0; i < records.size(); ++i)
    CHECK(canonical_dump(trial_to_json(records[i])) ==
          canonical_dump(trial_to_json(again[i])));

  // A different salt changes the draws.
  auto salted = make_random_backend(99);
  auto other = run_batch(Problem::three_sat, {3}, *salted, config);
  bool any_differ = false;
  for (size_t i = 0; i < records.size(); ++i)
    any_differ = any_differ || other[i].raw_response != records[i].raw_response;
  CHECK(any_differ);
}

TEST_CASE("random backend answers are schema-valid for every problem") {
  auto backend = make_random_backend(5);
  SolverConfig config;
  config.n_trials = 2;
  config.seeds = {11};
  config.model = "random";
  for (Problem p : all_problems()) {
    CAPTURE(problem_name(p));
    auto records = run_batch(p, {1}, *backend, config);
    for (const auto& rec : records) {
      REQUIRE(rec.extracted.has_value());
      if (!rec.outcome.ok) {
        REQUIRE(rec.outcome.error.has_value());
        CHECK(rec.outcome.error->category == ErrorCategory::problem_error);
      }
    }
  }
}

namespace {

// Counts in-flight complete() calls; replies with a canned transport chain.
class ProbeBackend final : public Backend {
 public:
  ProbeBackend(int fail_first, std::string text)
      : fail_first_(fail_first), text_(std::move(text)) {}

  BackendReply complete(const std::string& prompt, const Sampling&) override {
    const int now = ++in_flight_;
    int seen = peak_.load();
    while (now > seen && !peak_.compare_exchange_weak(seen, now)) {
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(2));
    --in_flight_;

    int count;
    {
      std::lock_guard<std::mutex> lock(mu_);
      count = ++calls_[prompt];
    }
    BackendReply r;
    if (count <= fail_first_) {
      r.finish = Finish::transport_error;
      r.text = "socket reset";
      return r;
    }
    r.text = text_;
    r.prompt_tokens = 10;
    r.completion_tokens = 20;
    return r;
  }

  int peak() const { return peak_.load(); }

 private:
  int fail_first_;
  std::string text_;
  std::atomic<int> in_flight_{0};
  std::atomic<int> peak_{0};
  std::mutex mu_;
  std::map<std::string, int> calls_;
};

}  // namespace

TEST_CASE("runner caps concurrency and orders records deterministically") {
  ProbeBackend backend(0, "```json\n{\"solution\": [0]}\n```");
  SolverConfig config;
  config.n_trials = 5;
  config.seeds = {64, 42};  // listed order, not sorted
  config.batch_size = 3;
  config.model = "probe";
  auto records = run_batch(Problem::vertex_cover, {2, 1}, backend, config);

  REQUIRE(records.size() == 2 * 2 * 5);
  CHECK(backend.peak() <= 3);
  CHECK(backend.peak() >= 2);  // the pool really ran in parallel
  size_t i = 0;
  for (int level : {1, 2})
    for (uint64_t seed : {uint64_t{64}, uint64_t{42}})
      for (int trial = 0; trial < 5; ++trial, ++i) {
        CAPTURE(i);
        CHECK(records[i].level == level);
        CHECK(records[i].seed == seed);
        CHECK(records[i].trial_index == trial);
      }
  for (const auto& rec : records) {
    CHECK(rec.prompt_tokens == 10);
    CHECK(rec.completion_tokens == 20);
  }
}

TEST_CASE("transport failures retry up to max_tries and are recorded") {
  SolverConfig config;
  config.n_trials = 1;
  config.seeds = {42};
  config.max_tries = 3;

  // Two failures then success: the third attempt lands.
  ProbeBackend flaky(2, "```json\n{\"solution\": [0]}\n```");
  auto records = run_batch(Problem::vertex_cover, {1}, flaky, config);
  REQUIRE(records.size() == 1);
  CHECK(records[0].attempts == 3);
  CHECK(records[0].extracted.has_value());

  // Permanent failure: recorded as a json_error outcome, never raised.
  ProbeBackend dead(1'000'000, "unused");
  records = run_batch(Problem::vertex_cover, {1}, dead, config);
  REQUIRE(records.size() == 1);
  CHECK(records[0].attempts == 3);
  CHECK_FALSE(records[0].outcome.ok);
  REQUIRE(records[0].outcome.error.has_value());
  CHECK(records[0].outcome.error->category == ErrorCategory::json_error);
  CHECK(records[0].outcome.message.find("backend unavailable after 3") !=
        std::string::npos);
  CHECK_FALSE(records[0].extracted.has_value());
}

TEST_CASE("truncated replies with no object are json errors") {
  // Build the exact prompt the runner will render, then can a cut-off reply.
  SolverConfig config;
  config.n_trials = 1;
  config.seeds = {53};
  config.model = "qwq-sim";

  const uint64_t tseed = derive_trial_seed(53, "3SAT", 1, 0);
  const GenConfig& cfg = Ladders().level_config(Problem::three_sat, 1);
  gym::GeneratedPair ex =
      gym::generate_instance(Problem::three_sat, cfg, example_seed(tseed, 0));
  ex.instance.level = 1;
  PromptBundle prompt =
      render_prompt(gym::descriptor(Problem::three_sat), {ex},
                    target_instance(Problem::three_sat, 1, tseed));

  BackendReply cut;
  cut.text = "Wait, I still need to check clause 4... wait, the assignment";
  cut.reasoning_text = "";
  cut.prompt_tokens = 111;
  cut.completion_tokens = 7500;
  cut.finish = Finish::length_cap;
  auto backend =
      make_fixture_backend({{fnv1a64(prompt.text), cut}});

  auto records = run_batch(Problem::three_sat, {1}, *backend, config);
  REQUIRE(records.size() == 1);
  CHECK_FALSE(records[0].outcome.ok);
  REQUIRE(records[0].outcome.error.has_value());
  CHECK(records[0].outcome.error->category == ErrorCategory::json_error);
  CHECK(records[0].outcome.message == "No JSON found in the text.");
  CHECK(records[0].aha_count == 2);
  CHECK(records[0].completion_tokens == 7500);
}

TEST_CASE("fixture backends replay byte-identically and skip keys resume") {
  SolverConfig config;
  config.n_trials = 4;
  config.seeds = {42};
  config.model = "fixture";

  ProbeBackend canned(0, "json {\"solution\": [0, 1]}");
  auto full = run_batch(Problem::vertex_cover, {1}, canned, config);
  REQUIRE(full.size() == 4);

  auto skip = [](int, uint64_t, int trial) { return trial != 2; };
  auto partial = run_batch(Problem::vertex_cover, {1}, canned, config, skip);
  REQUIRE(partial.size() == 1);
  CHECK(partial[0].trial_index == 2);
  CHECK(canonical_dump(trial_to_json(partial[0])) ==
        canonical_dump(trial_to_json(full[2])));
}

TEST_CASE("fixture files round-trip replies") {
  const std::string path = "fixture_roundtrip.jsonl";
  {
    Json line = Json::object();
    line["prompt_hash"] = std::to_string(fnv1a64("hello"));
    Json rep = Json::object();
    rep["text"] = "```json\n{\"solution\": 1}\n```";
    rep["reasoning_text"] = "wait";
    rep["prompt_tokens"] = 3;
    rep["completion_tokens"] = 9;
    rep["finish"] = "complete";
    line["reply"] = rep;
    std::ofstream out(path, std::ios::binary);
    out << canonical_dump(line) << "\n";
  }
  auto backend = make_fixture_backend_from_file(path);
  BackendReply got = backend->complete("hello", Sampling{});
  CHECK(got.text == "```json\n{\"solution\": 1}\n```");
  CHECK(got.reasoning_text == "wait");
  CHECK(got.prompt_tokens == 3);
  CHECK(got.completion_tokens == 9);
  CHECK(got.finish == Finish::complete);

  BackendReply miss = backend->complete("other", Sampling{});
  CHECK(miss.finish == Finish::transport_error);

  CHECK_THROWS_AS(make_fixture_backend_from_file("no_such_file.jsonl"), Error);
  std::remove(path.c_str());
}

TEST_CASE("trial records round-trip through the log format") {
  auto backend = make_oracle_backend();
  SolverConfig config;
  config.n_trials = 2;
  config.seeds = {42};
  config.model = "oracle";
  auto records = run_batch(Problem::partition, {1}, *backend, config);
  for (const auto& rec : records) {
    Json doc = trial_to_json(rec);
    const std::string line = canonical_dump(doc);
    TrialRecord back = trial_from_json(canonical_parse_json(line));
    CHECK(canonical_dump(trial_to_json(back)) == line);
    CHECK(back.problem == rec.problem);
    CHECK(back.seed == rec.seed);
    CHECK(back.outcome.ok == rec.outcome.ok);
    CHECK(canonical_serialize(back.instance) ==
          canonical_serialize(rec.instance));
  }
  CHECK_THROWS_AS(trial_from_json(Json::object()), Error);
}

TEST_CASE("runner validates configuration up front") {
  ProbeBackend backend(0, "x");
  SolverConfig bad;
  bad.n_trials = 0;
  CHECK_THROWS_AS(run_batch(Problem::three_sat, {1}, backend, bad), Error);
  SolverConfig config;
  CHECK_THROWS_AS(run_batch(Problem::three_sat, {999}, backend, config),
                  Error);
}
