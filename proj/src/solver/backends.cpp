#include <algorithm>
#include <fstream>
#include <numeric>
#include <utility>

#include "httplib.h"
#include "nppc/error.hpp"
#include "nppc/oracle.hpp"
#include "nppc/rng.hpp"
#include "nppc/solver.hpp"

namespace nppc::solver {

namespace {

BackendReply transport_failure(std::string detail) {
  BackendReply r;
  r.finish = Finish::transport_error;
  r.text = std::move(detail);
  return r;
}

BackendReply fenced_answer(const SolutionJson& solution) {
  BackendReply r;
  r.text = "```json\n{\"solution\": " + canonical_dump(solution) + "}\n```";
  return r;
}

// Recover (problem, payload) from a rendered prompt: the problem name sits
// in the header line, the target payload on the last "Problem: " line.
Instance instance_from_prompt(const std::string& prompt) {
  const std::string header = " Problem Description:";
  size_t h = prompt.find(header);
  size_t mark = prompt.rfind("# ", h);
  if (h == std::string::npos || mark == std::string::npos)
    fail(Errc::parse_error, "prompt has no problem header");
  std::string name = prompt.substr(mark + 2, h - mark - 2);

  const std::string lead = "\nProblem: ";
  size_t p = prompt.rfind(lead);
  if (p == std::string::npos)
    fail(Errc::parse_error, "prompt has no target instance line");
  size_t start = p + lead.size();
  size_t end = prompt.find('\n', start);
  if (end == std::string::npos) end = prompt.size();

  Instance inst;
  inst.problem = parse_problem(name);
  inst.payload = canonical_parse_json(prompt.substr(start, end - start));
  return inst;
}

class HttpBackend final : public Backend {
 public:
  HttpBackend(std::string endpoint, std::string api_key, std::string model)
      : api_key_(std::move(api_key)), model_(std::move(model)) {
    size_t scheme = endpoint.find("://");
    size_t slash = scheme == std::string::npos
                       ? endpoint.find('/')
                       : endpoint.find('/', scheme + 3);
    if (slash == std::string::npos) {
      base_ = endpoint;
      path_ = "/";
    } else {
      base_ = endpoint.substr(0, slash);
      path_ = endpoint.substr(slash);
    }
  }

  BackendReply complete(const std::string& prompt,
                        const Sampling& sampling) override {
    Json body = Json::object();
    body["model"] = model_;
    body["messages"] =
        Json::array({Json{{"role", "user"}, {"content", prompt}}});
    body["temperature"] = sampling.temperature;
    body["top_p"] = sampling.top_p;
    body["max_tokens"] = sampling.max_tokens;

    httplib::Client cli(base_);
    cli.set_connection_timeout(30, 0);
    cli.set_read_timeout(600, 0);  // completions may take minutes
    cli.set_write_timeout(60, 0);
    httplib::Headers headers;
    if (!api_key_.empty())
      headers.emplace("Authorization", "Bearer " + api_key_);

    auto res = cli.Post(path_, headers, body.dump(), "application/json");
    if (!res) return transport_failure(httplib::to_string(res.error()));
    if (res->status != 200)
      return transport_failure("HTTP " + std::to_string(res->status) + ": " +
                               res->body);

    Json doc = Json::parse(res->body, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("choices") ||
        !doc["choices"].is_array() || doc["choices"].empty())
      return transport_failure("malformed completion body");

    const Json& choice = doc["choices"][0];
    BackendReply reply;
    if (choice.contains("message") && choice["message"].is_object()) {
      const Json& msg = choice["message"];
      if (msg.contains("content") && msg["content"].is_string())
        reply.text = msg["content"].get<std::string>();
      if (msg.contains("reasoning_content") &&
          msg["reasoning_content"].is_string())
        reply.reasoning_text = msg["reasoning_content"].get<std::string>();
    }
    if (doc.contains("usage") && doc["usage"].is_object()) {
      const Json& usage = doc["usage"];
      if (usage.contains("prompt_tokens") &&
          usage["prompt_tokens"].is_number())
        reply.prompt_tokens = usage["prompt_tokens"].get<int64_t>();
      if (usage.contains("completion_tokens") &&
          usage["completion_tokens"].is_number())
        reply.completion_tokens = usage["completion_tokens"].get<int64_t>();
    }
    reply.finish = choice.contains("finish_reason") &&
                           choice["finish_reason"] == Json("length")
                       ? Finish::length_cap
                       : Finish::complete;
    return reply;
  }

 private:
  std::string base_, path_, api_key_, model_;
};

class OracleBackend final : public Backend {
 public:
  BackendReply complete(const std::string& prompt, const Sampling&) override {
    Instance inst;
    try {
      inst = instance_from_prompt(prompt);
    } catch (const Error& e) {
      return transport_failure(std::string("oracle backend: ") + e.what());
    }
    oracle::OracleResult res;
    try {
      res = oracle::solve_exact(inst);
    } catch (const Error& e) {
      return transport_failure(std::string("oracle backend: ") + e.what());
    }
    if (res.status != oracle::OracleStatus::found) {
      BackendReply r;
      r.text = "No solution found within budget.";
      return r;
    }
    return fenced_answer(res.solution);
  }
};

// One uniformly random draw from each problem's solution schema.
SolutionJson random_solution(const Instance& inst, Rng& rng) {
  const Json& p = inst.payload;
  auto ints = [](const std::vector<int64_t>& v) {
    Json a = Json::array();
    for (int64_t x : v) a.push_back(x);
    return a;
  };
  auto distinct = [&](int64_t n, int64_t k) {
    std::vector<int64_t> pool(static_cast<size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    rng.partial_shuffle(pool, static_cast<size_t>(k));
    pool.resize(static_cast<size_t>(k));
    std::sort(pool.begin(), pool.end());
    return pool;
  };
  auto labels = [&](int64_t n, int64_t lo, int64_t hi) {
    std::vector<int64_t> v(static_cast<size_t>(n));
    for (auto& x : v) x = rng.range(lo, hi);
    return ints(v);
  };
  auto permutation = [&](int64_t n) {
    std::vector<int64_t> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    rng.shuffle(v);
    return ints(v);
  };

  switch (inst.problem) {
    case Problem::three_sat: {
      Json a = Json::array();
      for (int64_t i = 0; i < p.at("num_variables").get<int64_t>(); ++i)
        a.push_back(rng.coin());
      return a;
    }
    case Problem::vertex_cover:
      return ints(distinct(p.at("num_nodes").get<int64_t>(),
                           p.at("cover_size").get<int64_t>()));
    case Problem::three_dm: {
      const Json& triples = p.at("triples");
      Json a = Json::array();
      for (int64_t i : distinct(static_cast<int64_t>(triples.size()),
                                p.at("n").get<int64_t>()))
        a.push_back(triples[static_cast<size_t>(i)]);
      return a;
    }
    case Problem::tsp:
      return permutation(p.at("num_cities").get<int64_t>());
    case Problem::hamiltonian_cycle:
    case Problem::bandwidth:
      return permutation(p.at("num_nodes").get<int64_t>());
    case Problem::three_col:
      return labels(p.at("num_nodes").get<int64_t>(), 0, 2);
    case Problem::bin_packing:
      return labels(static_cast<int64_t>(p.at("sizes").size()), 0,
                    p.at("num_bins").get<int64_t>() - 1);
    case Problem::max_leaf_span_tree: {
      const int64_t n = p.at("num_nodes").get<int64_t>();
      return labels(n, -1, n - 1);
    }
    case Problem::qde: {
      const int64_t c = std::max<int64_t>(p.at("c").get<int64_t>(), 1);
      return Json::array({rng.range(1, c), rng.range(1, c)});
    }
    case Problem::min_sum_squares:
      return labels(static_cast<int64_t>(p.at("sizes").size()), 0,
                    p.at("k").get<int64_t>() - 1);
    case Problem::superstring: {
      std::string s(static_cast<size_t>(p.at("max_length").get<int64_t>()),
                    'a');
      for (char& ch : s) ch = static_cast<char>('a' + rng.below(26));
      return Json(s);
    }
    case Problem::clique:
    case Problem::independent_set:
    case Problem::dominating_set:
      return ints(
          distinct(p.at("num_nodes").get<int64_t>(), p.at("k").get<int64_t>()));
    case Problem::set_splitting:
      return labels(p.at("num_elements").get<int64_t>(), 0, 1);
    case Problem::set_packing:
      return ints(distinct(static_cast<int64_t>(p.at("subsets").size()),
                           p.at("k").get<int64_t>()));
    case Problem::x3c:
      return ints(distinct(static_cast<int64_t>(p.at("subsets").size()),
                           p.at("num_elements").get<int64_t>() / 3));
    case Problem::minimum_cover:
      return ints(distinct(static_cast<int64_t>(p.at("sets").size()),
                           p.at("k").get<int64_t>()));
    case Problem::partition:
      return labels(static_cast<int64_t>(p.at("sizes").size()), 0, 1);
    case Problem::subset_sum: {
      std::vector<int64_t> chosen;
      for (int64_t i = 0; i < static_cast<int64_t>(p.at("sizes").size()); ++i)
        if (rng.coin()) chosen.push_back(i);
      return ints(chosen);
    }
    case Problem::hitting_string: {
      std::string s(static_cast<size_t>(p.at("n").get<int64_t>()), '0');
      for (char& ch : s) ch = rng.coin() ? '1' : '0';
      return Json(s);
    }
    case Problem::quadratic_congruences:
      return Json(
          rng.range(1, std::max<int64_t>(p.at("c").get<int64_t>() - 1, 1)));
    case Problem::betweenness:
      return permutation(p.at("num_elements").get<int64_t>());
    case Problem::clustering:
      return labels(p.at("num_elements").get<int64_t>(), 0, 2);
  }
  fail(Errc::unknown_problem, "random backend: unhandled problem");
}

class RandomBackend final : public Backend {
 public:
  explicit RandomBackend(uint64_t salt) : salt_(salt) {}

  BackendReply complete(const std::string& prompt, const Sampling&) override {
    Instance inst;
    try {
      inst = instance_from_prompt(prompt);
    } catch (const Error& e) {
      return transport_failure(std::string("random backend: ") + e.what());
    }
    Rng rng(mix64(salt_ ^ fnv1a64(prompt)));
    try {
      return fenced_answer(random_solution(inst, rng));
    } catch (const Json::exception& e) {
      return transport_failure(std::string("random backend: ") + e.what());
    }
  }

 private:
  uint64_t salt_;
};

class FixtureBackend final : public Backend {
 public:
  explicit FixtureBackend(std::map<uint64_t, BackendReply> replies)
      : replies_(std::move(replies)) {}

  BackendReply complete(const std::string& prompt, const Sampling&) override {
    auto it = replies_.find(fnv1a64(prompt));
    if (it == replies_.end())
      return transport_failure("fixture: no canned reply for this prompt");
    return it->second;
  }

 private:
  std::map<uint64_t, BackendReply> replies_;
};

Finish finish_from_string(const std::string& s) {
  if (s == "complete") return Finish::complete;
  if (s == "length_cap") return Finish::length_cap;
  if (s == "transport_error") return Finish::transport_error;
  fail(Errc::parse_error, "unknown finish state: " + s);
}

}  // namespace

std::unique_ptr<Backend> make_http_backend(const std::string& endpoint,
                                           const std::string& api_key,
                                           const std::string& model) {
  return std::make_unique<HttpBackend>(endpoint, api_key, model);
}

std::unique_ptr<Backend> make_oracle_backend() {
  return std::make_unique<OracleBackend>();
}

std::unique_ptr<Backend> make_random_backend(uint64_t salt) {
  return std::make_unique<RandomBackend>(salt);
}

std::unique_ptr<Backend> make_fixture_backend(
    std::map<uint64_t, BackendReply> replies) {
  return std::make_unique<FixtureBackend>(std::move(replies));
}

std::unique_ptr<Backend> make_fixture_backend_from_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open fixture file: " + path);
  std::map<uint64_t, BackendReply> replies;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      Json doc = canonical_parse_json(line);
      BackendReply r;
      const Json& rep = doc.at("reply");
      r.text = rep.at("text").get<std::string>();
      if (rep.contains("reasoning_text"))
        r.reasoning_text = rep.at("reasoning_text").get<std::string>();
      r.prompt_tokens = rep.at("prompt_tokens").get<int64_t>();
      r.completion_tokens = rep.at("completion_tokens").get<int64_t>();
      r.finish = finish_from_string(rep.at("finish").get<std::string>());
      replies[std::stoull(doc.at("prompt_hash").get<std::string>())] = r;
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      fail(Errc::parse_error, "fixture line " + std::to_string(line_no) +
                                  ": " + e.what());
    }
  }
  return std::make_unique<FixtureBackend>(std::move(replies));
}

}  // namespace nppc::solver
