#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "problems.hpp"

namespace nppc::gym::detail {

namespace {

std::set<Edge> edge_set(const Json& arr) {
  std::set<Edge> s;
  for (const auto& e : arr) s.insert({e[0].get<int64_t>(), e[1].get<int64_t>()});
  return s;
}

Edge norm(int64_t u, int64_t v) { return u < v ? Edge{u, v} : Edge{v, u}; }

}  // namespace

// ---- Vertex Cover ----------------------------------------------------------
// Plant the cover, then sample edges only among pairs touching it. The edge
// count targets 1.5n but is capped by the coverable-pair pool so every
// published level stays generable.

Json gen_vertex_cover(const GenConfig& config, uint64_t seed,
                      SolutionJson& planted) {
  const int64_t n = config.geti("num_nodes");
  const int64_t k = config.geti("cover_size");
  if (k < 1 || k > n) infeasible("cover_size must be within [1, num_nodes]");
  Rng rng(seed);

  std::vector<int64_t> cover = sample_indices(n, static_cast<size_t>(k), rng);
  std::set<int64_t> in_cover(cover.begin(), cover.end());

  std::vector<Edge> pool;
  for (Edge e : undirected_pairs(n))
    if (in_cover.count(e.first) || in_cover.count(e.second)) pool.push_back(e);
  size_t target = std::min(pool.size(), static_cast<size_t>(3 * n / 2));
  std::vector<Edge> edges = sample_edges(std::move(pool), target, rng);

  Json payload = Json::object();
  payload["num_nodes"] = n;
  payload["cover_size"] = k;
  payload["edges"] = edges_json(std::move(edges));

  std::sort(cover.begin(), cover.end());
  planted = int_list_json(cover);
  return payload;
}

VerifyOutcome verify_vertex_cover(const Json& payload, const Json& candidate) {
  auto idx = cand_int_list(candidate);
  if (!idx) return problem_error(Problem::vertex_cover, 1);
  if (idx->empty()) return problem_error(Problem::vertex_cover, 2);
  const int64_t n = payload.at("num_nodes").get<int64_t>();
  const int64_t k = payload.at("cover_size").get<int64_t>();
  for (int64_t v : *idx)
    if (v < 0 || v >= n) return problem_error(Problem::vertex_cover, 3);
  if (static_cast<int64_t>(idx->size()) > k)
    return problem_error(Problem::vertex_cover, 4);
  std::set<int64_t> chosen(idx->begin(), idx->end());
  for (const auto& e : payload.at("edges"))
    if (!chosen.count(e[0].get<int64_t>()) && !chosen.count(e[1].get<int64_t>()))
      return problem_error(Problem::vertex_cover, 5);
  return ok_outcome();
}

void validate_vertex_cover(const Json& payload) {
  const int64_t n = req_int(payload, "num_nodes", 1, kMaxCount);
  req_int(payload, "cover_size", 1, n);
  validate_edges(req_array(payload, "edges"), n, "edges", false);
}

// ---- Clique ----------------------------------------------------------------
// Plant the k-clique; every other pair appears with probability 1/2.

Json gen_clique(const GenConfig& config, uint64_t seed, SolutionJson& planted) {
  const int64_t n = config.geti("num_nodes");
  const int64_t k = config.geti("clique_size");
  if (k < 1 || k > n) infeasible("clique_size must be within [1, num_nodes]");
  Rng rng(seed);

  std::vector<int64_t> members = sample_indices(n, static_cast<size_t>(k), rng);
  std::set<int64_t> in_clique(members.begin(), members.end());

  std::vector<Edge> edges;
  for (Edge e : undirected_pairs(n)) {
    if (in_clique.count(e.first) && in_clique.count(e.second))
      edges.push_back(e);
    else if (rng.coin())
      edges.push_back(e);
  }

  Json payload = Json::object();
  payload["num_nodes"] = n;
  payload["k"] = k;
  payload["edges"] = edges_json(std::move(edges));

  std::sort(members.begin(), members.end());
  planted = int_list_json(members);
  return payload;
}

VerifyOutcome verify_clique(const Json& payload, const Json& candidate) {
  auto idx = cand_int_list(candidate);
  if (!idx) return problem_error(Problem::clique, 1);
  const int64_t n = payload.at("num_nodes").get<int64_t>();
  const int64_t k = payload.at("k").get<int64_t>();
  if (static_cast<int64_t>(idx->size()) != k)
    return problem_error(Problem::clique, 2);
  std::set<int64_t> chosen;
  for (int64_t v : *idx) {
    if (v < 0 || v >= n || !chosen.insert(v).second)
      return problem_error(Problem::clique, 3);
  }
  std::set<Edge> edges = edge_set(payload.at("edges"));
  for (auto it = chosen.begin(); it != chosen.end(); ++it)
    for (auto jt = std::next(it); jt != chosen.end(); ++jt)
      if (!edges.count({*it, *jt})) return problem_error(Problem::clique, 4);
  return ok_outcome();
}

void validate_clique(const Json& payload) {
  const int64_t n = req_int(payload, "num_nodes", 1, kMaxCount);
  req_int(payload, "k", 1, n);
  validate_edges(req_array(payload, "edges"), n, "edges", false);
}

// ---- Independent Set -------------------------------------------------------
// Plant the independent set; pairs not inside it appear with probability 1/2.

Json gen_independent_set(const GenConfig& config, uint64_t seed,
                         SolutionJson& planted) {
  const int64_t n = config.geti("num_nodes");
  const int64_t k = config.geti("ind_set_size");
  if (k < 1 || k > n) infeasible("ind_set_size must be within [1, num_nodes]");
  Rng rng(seed);

  std::vector<int64_t> members = sample_indices(n, static_cast<size_t>(k), rng);
  std::set<int64_t> inside(members.begin(), members.end());

  std::vector<Edge> edges;
  for (Edge e : undirected_pairs(n)) {
    if (inside.count(e.first) && inside.count(e.second)) continue;
    if (rng.coin()) edges.push_back(e);
  }

  Json payload = Json::object();
  payload["num_nodes"] = n;
  payload["k"] = k;
  payload["edges"] = edges_json(std::move(edges));

  std::sort(members.begin(), members.end());
  planted = int_list_json(members);
  return payload;
}

VerifyOutcome verify_independent_set(const Json& payload, const Json& candidate) {
  auto idx = cand_int_list(candidate);
  if (!idx) return problem_error(Problem::independent_set, 1);
  const int64_t n = payload.at("num_nodes").get<int64_t>();
  const int64_t k = payload.at("k").get<int64_t>();
  if (static_cast<int64_t>(idx->size()) < k)
    return problem_error(Problem::independent_set, 2);
  std::set<int64_t> chosen;
  for (int64_t v : *idx) {
    if (v < 0 || v >= n || !chosen.insert(v).second)
      return problem_error(Problem::independent_set, 3);
  }
  for (const auto& e : payload.at("edges"))
    if (chosen.count(e[0].get<int64_t>()) && chosen.count(e[1].get<int64_t>()))
      return problem_error(Problem::independent_set, 4);
  return ok_outcome();
}

void validate_independent_set(const Json& payload) {
  const int64_t n = req_int(payload, "num_nodes", 1, kMaxCount);
  req_int(payload, "k", 1, n);
  validate_edges(req_array(payload, "edges"), n, "edges", false);
}

// ---- Dominating Set --------------------------------------------------------
// Plant the set, give every outside node one edge into it, then sprinkle
// Bernoulli(edge_prob) edges over the remaining pairs.

Json gen_dominating_set(const GenConfig& config, uint64_t seed,
                        SolutionJson& planted) {
  const int64_t n = config.geti("num_nodes");
  const int64_t k = config.geti("k");
  const Rational p = config.getr("edge_prob");
  if (k < 1 || k > n) infeasible("k must be within [1, num_nodes]");
  Rng rng(seed);

  std::vector<int64_t> members = sample_indices(n, static_cast<size_t>(k), rng);
  std::set<int64_t> inside(members.begin(), members.end());

  std::set<Edge> edges;
  for (int64_t u = 0; u < n; ++u) {
    if (inside.count(u)) continue;
    int64_t d = members[static_cast<size_t>(rng.below(static_cast<uint64_t>(k)))];
    edges.insert(norm(u, d));
  }
  for (Edge e : undirected_pairs(n)) {
    if (edges.count(e)) continue;
    if (rng.chance(p.num, p.den)) edges.insert(e);
  }

  Json payload = Json::object();
  payload["num_nodes"] = n;
  payload["k"] = k;
  payload["edges"] = edges_json({edges.begin(), edges.end()});

  std::sort(members.begin(), members.end());
  planted = int_list_json(members);
  return payload;
}

VerifyOutcome verify_dominating_set(const Json& payload, const Json& candidate) {
  auto idx = cand_int_list(candidate);
  if (!idx) return problem_error(Problem::dominating_set, 1);
  if (idx->empty()) return problem_error(Problem::dominating_set, 2);
  const int64_t n = payload.at("num_nodes").get<int64_t>();
  const int64_t k = payload.at("k").get<int64_t>();
  std::set<int64_t> chosen;
  for (int64_t v : *idx) {
    if (v < 0 || v >= n || !chosen.insert(v).second)
      return problem_error(Problem::dominating_set, 3);
  }
  if (static_cast<int64_t>(idx->size()) > k)
    return problem_error(Problem::dominating_set, 4);
  std::vector<bool> dominated(static_cast<size_t>(n), false);
  for (int64_t v : chosen) dominated[static_cast<size_t>(v)] = true;
  for (const auto& e : payload.at("edges")) {
    int64_t u = e[0].get<int64_t>();
    int64_t v = e[1].get<int64_t>();
    if (chosen.count(u)) dominated[static_cast<size_t>(v)] = true;
    if (chosen.count(v)) dominated[static_cast<size_t>(u)] = true;
  }
  for (int64_t u = 0; u < n; ++u)
    if (!dominated[static_cast<size_t>(u)])
      return problem_error(Problem::dominating_set, 5);
  return ok_outcome();
}

void validate_dominating_set(const Json& payload) {
  const int64_t n = req_int(payload, "num_nodes", 1, kMaxCount);
  req_int(payload, "k", 1, n);
  validate_edges(req_array(payload, "edges"), n, "edges", false);
}

}  // namespace nppc::gym::detail
