#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "problems.hpp"

namespace nppc::gym::detail {

// ---- Shortest Common Superstring ----------------------------------------------
// Draw the superstring itself (length n over a-z), then cut k substrings out
// of it at random offsets; the substring set may repeat. The published string
// is a witness of length exactly n = max_length.

Json gen_superstring(const GenConfig& config, uint64_t seed, SolutionJson& planted) {
  const int64_t n = config.geti("n");
  const int64_t k = config.geti("k");
  if (n < 2) infeasible("the superstring must hold substrings of length >= 2");
  Rng rng(seed);

  std::string w;
  for (int64_t i = 0; i < n; ++i)
    w += static_cast<char>('a' + rng.below(26));

  const int64_t len_hi = std::min(n, std::max<int64_t>(3, n / 5));
  Json strings = Json::array();
  for (int64_t j = 0; j < k; ++j) {
    const int64_t len = rng.range(2, len_hi);
    const size_t start = static_cast<size_t>(rng.below(static_cast<uint64_t>(n - len + 1)));
    strings.push_back(w.substr(start, static_cast<size_t>(len)));
  }

  Json payload = Json::object();
  payload["strings"] = std::move(strings);
  payload["max_length"] = n;
  planted = w;
  return payload;
}

VerifyOutcome verify_superstring(const Json& payload, const Json& candidate) {
  auto w = cand_string(candidate);
  if (!w) return problem_error(Problem::superstring, 1);
  const int64_t max_length = payload.at("max_length").get<int64_t>();
  if (static_cast<int64_t>(w->size()) > max_length)
    return problem_error(Problem::superstring, 2);
  for (const auto& sj : payload.at("strings"))
    if (w->find(sj.get<std::string>()) == std::string::npos)
      return problem_error(Problem::superstring, 3);
  return ok_outcome();
}

void validate_superstring(const Json& payload) {
  req_int(payload, "max_length", 1, kMaxCount);
  const Json& strings = req_array(payload, "strings");
  size_t si = 0;
  for (const auto& sj : strings) {
    std::string where = "strings[" + std::to_string(si++) + "]";
    if (!sj.is_string()) schema_fail(where, "not a string");
    const std::string s = sj.get<std::string>();
    if (s.empty()) schema_fail(where, "strings must not be empty");
    for (char ch : s)
      if (ch < 'a' || ch > 'z') schema_fail(where, "strings use lowercase a-z");
  }
}

// ---- Betweenness ----------------------------------------------------------------
// Plant a permutation f; each published triple takes three distinct elements
// ordered along f, reversed with probability 1/2 (both orders state the same
// constraint). Triples are distinct as constraints.

Json gen_betweenness(const GenConfig& config, uint64_t seed, SolutionJson& planted) {
  const int64_t n = config.geti("num_element");
  const int64_t m = config.geti("num_triples");
  if (n < 3) infeasible("betweenness needs at least 3 elements");
  Rng rng(seed);

  std::vector<int64_t> f(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i) f[static_cast<size_t>(i)] = i;
  rng.shuffle(f);

  std::set<std::array<int64_t, 3>> seen;  // key: (min end, middle, max end)
  Json triples = Json::array();
  for (int64_t j = 0; j < m; ++j) {
    std::array<int64_t, 3> ordered{};
    int attempts = 0;
    do {
      if (++attempts > kRetryBudget)
        infeasible("cannot draw " + std::to_string(m) + " distinct betweenness triples");
      std::vector<int64_t> els = sample_indices(n, 3, rng);
      std::sort(els.begin(), els.end(), [&](int64_t a, int64_t b) {
        return f[static_cast<size_t>(a)] < f[static_cast<size_t>(b)];
      });
      ordered = {els[0], els[1], els[2]};
    } while (!seen.insert({std::min(ordered[0], ordered[2]), ordered[1],
                           std::max(ordered[0], ordered[2])})
                  .second);
    if (rng.coin()) std::swap(ordered[0], ordered[2]);
    triples.push_back(Json::array({ordered[0], ordered[1], ordered[2]}));
  }

  Json payload = Json::object();
  payload["num_elements"] = n;
  payload["triples"] = std::move(triples);
  planted = int_list_json(f);
  return payload;
}

VerifyOutcome verify_betweenness(const Json& payload, const Json& candidate) {
  auto f = cand_int_list(candidate);
  if (!f) return verification_error("Wrong output format.");
  const int64_t n = payload.at("num_elements").get<int64_t>();
  if (static_cast<int64_t>(f->size()) != n)
    return problem_error(Problem::betweenness, 1);
  std::vector<bool> used(static_cast<size_t>(n), false);
  for (int64_t v : *f) {
    if (v < 0 || v >= n || used[static_cast<size_t>(v)])
      return problem_error(Problem::betweenness, 2);
    used[static_cast<size_t>(v)] = true;
  }
  for (const auto& tj : payload.at("triples")) {
    const int64_t fa = (*f)[static_cast<size_t>(tj[0].get<int64_t>())];
    const int64_t fb = (*f)[static_cast<size_t>(tj[1].get<int64_t>())];
    const int64_t fc = (*f)[static_cast<size_t>(tj[2].get<int64_t>())];
    if (!((fa < fb && fb < fc) || (fc < fb && fb < fa)))
      return problem_error(Problem::betweenness, 3);
  }
  return ok_outcome();
}

void validate_betweenness(const Json& payload) {
  const int64_t n = req_int(payload, "num_elements", 1, kMaxCount);
  const Json& triples = req_array(payload, "triples");
  size_t ti = 0;
  for (const auto& tj : triples) {
    std::string where = "triples[" + std::to_string(ti++) + "]";
    if (!tj.is_array() || tj.size() != 3)
      schema_fail(where, "a triple lists exactly 3 elements");
    std::set<int64_t> distinct;
    for (const auto& ej : tj)
      distinct.insert(as_checked_int(ej, where, 0, n - 1));
    if (distinct.size() != 3) schema_fail(where, "triple elements must be distinct");
  }
}

// ---- Clustering -----------------------------------------------------------------
// Plant three groups; distances are <= B inside a group and > B across
// groups, so a valid 3-clustering must reproduce the planted one.

Json gen_clustering(const GenConfig& config, uint64_t seed, SolutionJson& planted) {
  const int64_t n = config.geti("num_elements");
  const int64_t bound = config.geti("b");
  if (bound < 1) infeasible("the distance bound must be positive");
  Rng rng(seed);

  std::vector<int64_t> group(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i)
    group[static_cast<size_t>(i)] = static_cast<int64_t>(rng.below(3));

  std::vector<std::vector<int64_t>> dist(
      static_cast<size_t>(n), std::vector<int64_t>(static_cast<size_t>(n), 0));
  for (Edge e : undirected_pairs(n)) {
    const bool same = group[static_cast<size_t>(e.first)] ==
                      group[static_cast<size_t>(e.second)];
    const int64_t d = same ? rng.range(1, bound) : rng.range(bound + 1, 2 * bound);
    dist[static_cast<size_t>(e.first)][static_cast<size_t>(e.second)] = d;
    dist[static_cast<size_t>(e.second)][static_cast<size_t>(e.first)] = d;
  }

  Json payload = Json::object();
  payload["num_elements"] = n;
  payload["B"] = bound;
  payload["distances"] = matrix_json(dist);
  planted = int_list_json(group);
  return payload;
}

VerifyOutcome verify_clustering(const Json& payload, const Json& candidate) {
  auto labels = cand_int_list(candidate);
  if (!labels) return verification_error("Wrong output format.");
  const int64_t n = payload.at("num_elements").get<int64_t>();
  const int64_t bound = payload.at("B").get<int64_t>();
  if (static_cast<int64_t>(labels->size()) != n)
    return problem_error(Problem::clustering, 1);
  for (int64_t l : *labels)
    if (l < 0 || l > 2) return problem_error(Problem::clustering, 2);
  const Json& dist = payload.at("distances");
  for (int64_t u = 0; u < n; ++u)
    for (int64_t v = u + 1; v < n; ++v)
      if ((*labels)[static_cast<size_t>(u)] == (*labels)[static_cast<size_t>(v)] &&
          dist[static_cast<size_t>(u)][static_cast<size_t>(v)].get<int64_t>() > bound)
        return problem_error(Problem::clustering, 3);
  return ok_outcome();
}

void validate_clustering(const Json& payload) {
  const int64_t n = req_int(payload, "num_elements", 1, kMaxCount);
  req_int(payload, "B", 1, kMaxItemValue);
  validate_matrix(req_array(payload, "distances"), n, kMaxItemValue, "distances");
}

}  // namespace nppc::gym::detail
