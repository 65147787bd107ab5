#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "problems.hpp"

namespace nppc::gym::detail {

// ---- Travelling Salesman ---------------------------------------------------
// Plant a tour, split a random total <= B into its n leg lengths, and keep
// every non-tour distance in [ceil(B/n), 2*ceil(B/n)] so no stray edge is
// orders of magnitude shorter than the planted legs.

Json gen_tsp(const GenConfig& config, uint64_t seed, SolutionJson& planted) {
  const int64_t n = config.geti("num_cities");
  const int64_t bound = config.geti("target_length");
  if (n < 3) infeasible("a tour needs at least 3 cities");
  if (bound < n) infeasible("target_length below num_cities leaves no room for positive leg lengths");
  Rng rng(seed);

  std::vector<int64_t> tour(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i) tour[static_cast<size_t>(i)] = i;
  rng.shuffle(tour);

  const int64_t total = rng.range(n, bound);
  std::vector<int64_t> legs = random_composition(total, n, rng);
  const int64_t base = (bound + n - 1) / n;

  std::vector<std::vector<int64_t>> dist(
      static_cast<size_t>(n), std::vector<int64_t>(static_cast<size_t>(n), 0));
  for (Edge e : undirected_pairs(n)) {
    int64_t w = rng.range(base, 2 * base);
    dist[static_cast<size_t>(e.first)][static_cast<size_t>(e.second)] = w;
    dist[static_cast<size_t>(e.second)][static_cast<size_t>(e.first)] = w;
  }
  for (int64_t i = 0; i < n; ++i) {
    int64_t u = tour[static_cast<size_t>(i)];
    int64_t v = tour[static_cast<size_t>((i + 1) % n)];
    dist[static_cast<size_t>(u)][static_cast<size_t>(v)] = legs[static_cast<size_t>(i)];
    dist[static_cast<size_t>(v)][static_cast<size_t>(u)] = legs[static_cast<size_t>(i)];
  }

  Json payload = Json::object();
  payload["num_cities"] = n;
  payload["target_length"] = bound;
  payload["distances"] = matrix_json(dist);
  planted = int_list_json(tour);
  return payload;
}

VerifyOutcome verify_tsp(const Json& payload, const Json& candidate) {
  auto idx = cand_int_list(candidate);
  if (!idx) return verification_error("Wrong output format.");
  const int64_t n = payload.at("num_cities").get<int64_t>();
  const int64_t bound = payload.at("target_length").get<int64_t>();
  if (static_cast<int64_t>(idx->size()) != n)
    return problem_error(Problem::tsp, 1);
  for (int64_t c : *idx)
    if (c < 0 || c >= n) return problem_error(Problem::tsp, 2);
  std::set<int64_t> seen(idx->begin(), idx->end());
  if (static_cast<int64_t>(seen.size()) != n)
    return problem_error(Problem::tsp, 3);
  const Json& dist = payload.at("distances");
  __int128 length = 0;
  for (int64_t i = 0; i < n; ++i) {
    size_t u = static_cast<size_t>((*idx)[static_cast<size_t>(i)]);
    size_t v = static_cast<size_t>((*idx)[static_cast<size_t>((i + 1) % n)]);
    length += dist[u][v].get<int64_t>();
  }
  if (length > bound) return problem_error(Problem::tsp, 4);
  return ok_outcome();
}

void validate_tsp(const Json& payload) {
  const int64_t n = req_int(payload, "num_cities", 1, kMaxCount);
  req_int(payload, "target_length", 1, kMaxValue);
  validate_matrix(req_array(payload, "distances"), n, kMaxItemValue, "distances");
}

// ---- Hamiltonian Cycle -----------------------------------------------------
// Plant a random cycle and add up to floor(1.5n) extra distinct edges (capped
// by the number of remaining pairs).

Json gen_hamiltonian_cycle(const GenConfig& config, uint64_t seed,
                           SolutionJson& planted) {
  const int64_t n = config.geti("num_nodes");
  const bool directed = config.getb("directed");
  if (n < 3) infeasible("a cycle needs at least 3 nodes");
  Rng rng(seed);

  std::vector<int64_t> cycle(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i) cycle[static_cast<size_t>(i)] = i;
  rng.shuffle(cycle);

  std::set<Edge> edges;
  for (int64_t i = 0; i < n; ++i) {
    int64_t u = cycle[static_cast<size_t>(i)];
    int64_t v = cycle[static_cast<size_t>((i + 1) % n)];
    edges.insert(directed ? Edge{u, v} : Edge{std::min(u, v), std::max(u, v)});
  }

  std::vector<Edge> pool;
  if (directed) {
    for (int64_t u = 0; u < n; ++u)
      for (int64_t v = 0; v < n; ++v)
        if (u != v && !edges.count({u, v})) pool.push_back({u, v});
  } else {
    for (Edge e : undirected_pairs(n))
      if (!edges.count(e)) pool.push_back(e);
  }
  size_t extra = std::min(pool.size(), static_cast<size_t>(3 * n / 2));
  for (Edge e : sample_edges(std::move(pool), extra, rng)) edges.insert(e);

  Json payload = Json::object();
  payload["num_nodes"] = n;
  payload["directed"] = directed;
  payload["edges"] = edges_json({edges.begin(), edges.end()});
  planted = int_list_json(cycle);
  return payload;
}

VerifyOutcome verify_hamiltonian_cycle(const Json& payload, const Json& candidate) {
  auto idx = cand_int_list(candidate);
  if (!idx) return verification_error("Wrong output format.");
  const int64_t n = payload.at("num_nodes").get<int64_t>();
  const bool directed = payload.at("directed").get<bool>();
  std::vector<int64_t> path = *idx;
  if (static_cast<int64_t>(path.size()) == n + 1) {
    if (path.front() != path.back())
      return problem_error(Problem::hamiltonian_cycle, 2);
    path.pop_back();
  }
  if (static_cast<int64_t>(path.size()) != n)
    return problem_error(Problem::hamiltonian_cycle, 1);
  std::set<int64_t> seen(path.begin(), path.end());
  if (seen.size() != path.size())
    return problem_error(Problem::hamiltonian_cycle, 3);
  for (int64_t v : path)
    if (v < 0 || v >= n) return problem_error(Problem::hamiltonian_cycle, 4);
  std::set<Edge> edges;
  for (const auto& e : payload.at("edges"))
    edges.insert({e[0].get<int64_t>(), e[1].get<int64_t>()});
  for (int64_t i = 0; i < n; ++i) {
    int64_t u = path[static_cast<size_t>(i)];
    int64_t v = path[static_cast<size_t>((i + 1) % n)];
    bool present = directed ? edges.count({u, v}) != 0
                            : edges.count({std::min(u, v), std::max(u, v)}) != 0;
    if (!present) return problem_error(Problem::hamiltonian_cycle, 5);
  }
  return ok_outcome();
}

void validate_hamiltonian_cycle(const Json& payload) {
  const int64_t n = req_int(payload, "num_nodes", 1, kMaxCount);
  const bool directed = req_bool(payload, "directed");
  validate_edges(req_array(payload, "edges"), n, "edges", directed);
}

}  // namespace nppc::gym::detail
