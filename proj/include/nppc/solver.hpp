#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nppc/gym.hpp"
#include "nppc/instance.hpp"
#include "nppc/ladder.hpp"
#include "nppc/outcome.hpp"

namespace nppc::solver {

// Rendered prompt plus the example pairs that were embedded into it.
struct PromptBundle {
  std::string text;
  int shots = 0;
  // (instance rendering, solution rendering), in embedding order.
  std::vector<std::pair<std::string, std::string>> example_pairs;
};

enum class Finish { complete, length_cap, transport_error };

struct BackendReply {
  std::string text;            // raw completion
  std::string reasoning_text;  // separate reasoning channel; empty when absent
  int64_t prompt_tokens = 0;
  int64_t completion_tokens = 0;
  Finish finish = Finish::complete;
};

// Sampling knobs forwarded to the backend (defaults for self-hosted models).
struct Sampling {
  double temperature = 0.6;
  double top_p = 0.95;
  int max_tokens = 7500;
};

struct SolverConfig {
  int n_shots = 1;
  int n_trials = 30;
  int batch_size = 10;  // max concurrent in-flight requests
  int max_tries = 3;    // attempts per trial; only transport failures retry
  std::vector<uint64_t> seeds = {42, 53, 64};
  Sampling sampling;
  std::string model = "unknown";  // label stamped on trial records
};

// Full provenance of one solver attempt.
struct TrialRecord {
  Problem problem = Problem::three_sat;
  int level = 0;
  uint64_t seed = 0;  // experiment seed, not the derived instance seed
  int trial_index = 0;
  std::string model;
  Instance instance;
  SolutionJson planted;
  int64_t prompt_tokens = 0;
  int64_t completion_tokens = 0;
  std::string raw_response;
  std::optional<SolutionJson> extracted;  // nullopt when nothing was extracted
  VerifyOutcome outcome;
  int attempts = 0;
  int aha_count = 0;
};

// One completion service. Implementations must either tolerate concurrent
// complete() calls or advertise a limit of 1; the runner respects it.
class Backend {
 public:
  virtual ~Backend() = default;
  virtual BackendReply complete(const std::string& prompt,
                                const Sampling& sampling) = 0;
  // 0 means no limit beyond the runner's batch size.
  virtual int concurrency_limit() const { return 0; }
};

// Fills the prompt template with the problem statement, the in-context
// example pairs and the target instance. Byte-stable for equal inputs.
// Throws problem_mismatch when examples is empty or any example/target
// problem differs from the descriptor.
PromptBundle render_prompt(const gym::ProblemDescriptor& descriptor,
                           const std::vector<gym::GeneratedPair>& examples,
                           const Instance& target);

// Result of mining a reply for the "solution" field.
struct Extraction {
  std::optional<SolutionJson> solution;  // set on success
  std::string error;  // reason when extraction failed, empty otherwise
};

// Three-stage fallback parse of a model reply: fenced ```json block, then a
// "json"-prefixed brace object, then any brace object; within the first
// stage that matches anything, the LAST match wins. Line and block comments
// are stripped before parsing. Returns the object's "solution" field.
Extraction extract_solution(const std::string& response_text);

// The comment-stripping pass used by extract_solution, exposed for testing:
// deletes // to end of line, then /* ... */ spans, as plain text edits.
std::string strip_json_comments(const std::string& text);

// Case-insensitive whole-word occurrences of the marker lexicon.
int count_aha(const std::string& reasoning_text,
              const std::vector<std::string>& lexicon = {"wait"});

// Backends. The HTTP backend posts a chat-completions request
// {model, messages, temperature, top_p, max_tokens} with bearer auth and
// reads the reply's first choice plus usage counts; any transport or shape
// problem comes back as finish = transport_error (never a throw).
std::unique_ptr<Backend> make_http_backend(const std::string& endpoint,
                                           const std::string& api_key,
                                           const std::string& model);

// Replays the exact published pipeline offline: parses the problem header
// and the last "Problem:" line out of the prompt, runs the exact search and
// answers with a fenced json block. Synthetic backends report zero tokens.
std::unique_ptr<Backend> make_oracle_backend();

// Emits a uniformly random schema-valid solution for the prompted instance;
// deterministic in (salt, prompt bytes).
std::unique_ptr<Backend> make_random_backend(uint64_t salt = 0);

// Replays canned replies keyed by fnv1a64 of the prompt bytes.
std::unique_ptr<Backend> make_fixture_backend(
    std::map<uint64_t, BackendReply> replies);
// File form: one canonical JSON object per line,
// {"prompt_hash": "<decimal>", "reply": {text, reasoning_text,
//  prompt_tokens, completion_tokens, finish}}. Throws io_error/parse_error.
std::unique_ptr<Backend> make_fixture_backend_from_file(
    const std::string& path);

// Runs |levels| x |config.seeds| x config.n_trials trials of one problem.
// Per trial: derive the instance seed, generate target and examples, render,
// complete (retrying transport failures up to max_tries), extract, verify.
// At most batch_size requests are in flight at once; records come back in
// (level, seed, trial) order regardless of completion order. A trial whose
// last attempt still failed transport is recorded with a json_error outcome
// and the failure message; it never raises. The optional skip predicate
// drops (level, seed, trial) keys before any work (resume support).
std::vector<TrialRecord> run_batch(
    Problem problem, const std::vector<int>& levels, Backend& backend,
    const SolverConfig& config = {},
    const std::function<bool(int level, uint64_t seed, int trial)>& skip = {},
    const Ladders& ladders = Ladders());

// Trial-log wire format: one canonical JSON object per line, append-only.
Json trial_to_json(const TrialRecord& rec);
TrialRecord trial_from_json(const Json& doc);  // throws parse_error

}  // namespace nppc::solver
