#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "problems.hpp"

namespace nppc::gym::detail {

// ---- Graph 3-Colourability ---------------------------------------------------
// Shuffle nodes into three near-equal colour classes and sample the requested
// number of distinct cross-class edges. The edge count is a published
// parameter, so an impossible request is an error, never a clamp.

Json gen_three_col(const GenConfig& config, uint64_t seed, SolutionJson& planted) {
  const int64_t n = config.geti("num_nodes");
  const int64_t m = config.geti("num_edges");
  Rng rng(seed);

  std::vector<int64_t> order(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
  rng.shuffle(order);
  std::vector<int64_t> color(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i)
    color[static_cast<size_t>(order[static_cast<size_t>(i)])] = i % 3;

  std::vector<Edge> pool;
  for (Edge e : undirected_pairs(n))
    if (color[static_cast<size_t>(e.first)] != color[static_cast<size_t>(e.second)])
      pool.push_back(e);
  if (static_cast<size_t>(m) > pool.size())
    infeasible("num_edges " + std::to_string(m) + " exceeds the " +
               std::to_string(pool.size()) + " cross-class pairs of a 3-partition");
  std::vector<Edge> edges = sample_edges(std::move(pool), static_cast<size_t>(m), rng);

  Json payload = Json::object();
  payload["num_nodes"] = n;
  payload["edges"] = edges_json(std::move(edges));
  planted = int_list_json(color);
  return payload;
}

VerifyOutcome verify_three_col(const Json& payload, const Json& candidate) {
  auto colors = cand_int_list(candidate);
  const int64_t n = payload.at("num_nodes").get<int64_t>();
  if (!colors || static_cast<int64_t>(colors->size()) != n)
    return verification_error("Wrong output format.");
  for (int64_t c : *colors)
    if (c < 0 || c > 2) return verification_error("Wrong output format.");
  for (const auto& e : payload.at("edges")) {
    size_t u = static_cast<size_t>(e[0].get<int64_t>());
    size_t v = static_cast<size_t>(e[1].get<int64_t>());
    if ((*colors)[u] == (*colors)[v]) return problem_error(Problem::three_col, 1);
  }
  return ok_outcome();
}

void validate_three_col(const Json& payload) {
  const int64_t n = req_int(payload, "num_nodes", 1, kMaxCount);
  validate_edges(req_array(payload, "edges"), n, "edges", false);
}

// ---- Bandwidth ---------------------------------------------------------------
// Plant a random layout and sample up to floor(1.5n) distinct edges among the
// pairs it keeps within the bandwidth bound.

Json gen_bandwidth(const GenConfig& config, uint64_t seed, SolutionJson& planted) {
  const int64_t n = config.geti("num_nodes");
  const int64_t bw = config.geti("bandwidth");
  if (bw < 1) infeasible("bandwidth must be positive");
  Rng rng(seed);

  std::vector<int64_t> layout(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i) layout[static_cast<size_t>(i)] = i;
  rng.shuffle(layout);

  std::vector<Edge> pool;
  for (Edge e : undirected_pairs(n))
    if (std::llabs(layout[static_cast<size_t>(e.first)] -
                   layout[static_cast<size_t>(e.second)]) <= bw)
      pool.push_back(e);
  size_t target = std::min(pool.size(), static_cast<size_t>(3 * n / 2));
  std::vector<Edge> edges = sample_edges(std::move(pool), target, rng);

  Json payload = Json::object();
  payload["num_nodes"] = n;
  payload["bandwidth"] = bw;
  payload["edges"] = edges_json(std::move(edges));
  planted = int_list_json(layout);
  return payload;
}

VerifyOutcome verify_bandwidth(const Json& payload, const Json& candidate) {
  auto layout = cand_int_list(candidate);
  if (!layout) return verification_error("Wrong output format.");
  const int64_t n = payload.at("num_nodes").get<int64_t>();
  const int64_t bw = payload.at("bandwidth").get<int64_t>();
  if (static_cast<int64_t>(layout->size()) != n)
    return problem_error(Problem::bandwidth, 1);
  std::vector<bool> used(static_cast<size_t>(n), false);
  for (int64_t f : *layout) {
    if (f < 0 || f >= n || used[static_cast<size_t>(f)])
      return problem_error(Problem::bandwidth, 2);
    used[static_cast<size_t>(f)] = true;
  }
  for (const auto& e : payload.at("edges")) {
    size_t u = static_cast<size_t>(e[0].get<int64_t>());
    size_t v = static_cast<size_t>(e[1].get<int64_t>());
    if (std::llabs((*layout)[u] - (*layout)[v]) > bw)
      return problem_error(Problem::bandwidth, 3);
  }
  return ok_outcome();
}

void validate_bandwidth(const Json& payload) {
  const int64_t n = req_int(payload, "num_nodes", 1, kMaxCount);
  req_int(payload, "bandwidth", 1, n);
  validate_edges(req_array(payload, "edges"), n, "edges", false);
}

// ---- Maximum Leaf Spanning Tree ------------------------------------------------
// Plant a spider: a spine path of n-k nodes with k extra leaves hanging off
// random spine nodes, so the tree has at least k degree-1 nodes. Then add up
// to floor(n/2) extra distinct edges.

Json gen_max_leaf_span_tree(const GenConfig& config, uint64_t seed,
                            SolutionJson& planted) {
  const int64_t n = config.geti("num_nodes");
  const int64_t k = config.geti("target_leaves");
  if (k < 1 || k > n - 1)
    infeasible("target_leaves must be within [1, num_nodes - 1]");
  Rng rng(seed);

  std::vector<int64_t> nodes(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i) nodes[static_cast<size_t>(i)] = i;
  rng.shuffle(nodes);
  const int64_t spine_len = n - k;

  std::vector<int64_t> parent(static_cast<size_t>(n), -1);
  for (int64_t i = 1; i < spine_len; ++i)
    parent[static_cast<size_t>(nodes[static_cast<size_t>(i)])] =
        nodes[static_cast<size_t>(i - 1)];
  for (int64_t j = 0; j < k; ++j) {
    int64_t leaf = nodes[static_cast<size_t>(spine_len + j)];
    int64_t attach = nodes[static_cast<size_t>(rng.below(static_cast<uint64_t>(spine_len)))];
    parent[static_cast<size_t>(leaf)] = attach;
  }

  std::set<Edge> edges;
  for (int64_t v = 0; v < n; ++v) {
    int64_t p = parent[static_cast<size_t>(v)];
    if (p >= 0) edges.insert({std::min(v, p), std::max(v, p)});
  }
  std::vector<Edge> pool;
  for (Edge e : undirected_pairs(n))
    if (!edges.count(e)) pool.push_back(e);
  size_t extra = std::min(pool.size(), static_cast<size_t>(n / 2));
  for (Edge e : sample_edges(std::move(pool), extra, rng)) edges.insert(e);

  Json payload = Json::object();
  payload["num_nodes"] = n;
  payload["target_leaves"] = k;
  payload["edges"] = edges_json({edges.begin(), edges.end()});
  planted = int_list_json(parent);
  return payload;
}

VerifyOutcome verify_max_leaf_span_tree(const Json& payload, const Json& candidate) {
  auto parent = cand_int_list(candidate);
  if (!parent) return verification_error("Wrong output format.");
  const int64_t n = payload.at("num_nodes").get<int64_t>();
  const int64_t k = payload.at("target_leaves").get<int64_t>();
  if (static_cast<int64_t>(parent->size()) != n)
    return problem_error(Problem::max_leaf_span_tree, 1);
  std::set<Edge> edges;
  for (const auto& e : payload.at("edges"))
    edges.insert({e[0].get<int64_t>(), e[1].get<int64_t>()});
  int64_t root = -1;
  int64_t roots = 0;
  for (int64_t v = 0; v < n; ++v) {
    int64_t p = (*parent)[static_cast<size_t>(v)];
    if (p == -1) {
      ++roots;
      root = v;
      continue;
    }
    if (p < 0 || p >= n || p == v ||
        !edges.count({std::min(v, p), std::max(v, p)}))
      return problem_error(Problem::max_leaf_span_tree, 2);
  }
  if (roots != 1) return problem_error(Problem::max_leaf_span_tree, 3);
  std::vector<std::vector<int64_t>> children(static_cast<size_t>(n));
  for (int64_t v = 0; v < n; ++v) {
    int64_t p = (*parent)[static_cast<size_t>(v)];
    if (p != -1) children[static_cast<size_t>(p)].push_back(v);
  }
  std::vector<int64_t> stack{root};
  std::vector<bool> reached(static_cast<size_t>(n), false);
  reached[static_cast<size_t>(root)] = true;
  int64_t count = 1;
  while (!stack.empty()) {
    int64_t v = stack.back();
    stack.pop_back();
    for (int64_t c : children[static_cast<size_t>(v)]) {
      if (reached[static_cast<size_t>(c)]) continue;
      reached[static_cast<size_t>(c)] = true;
      ++count;
      stack.push_back(c);
    }
  }
  if (count != n) return problem_error(Problem::max_leaf_span_tree, 4);
  int64_t leaves = 0;
  for (int64_t v = 0; v < n; ++v) {
    int64_t degree = static_cast<int64_t>(children[static_cast<size_t>(v)].size()) +
                     ((*parent)[static_cast<size_t>(v)] != -1 ? 1 : 0);
    if (degree == 1) ++leaves;
  }
  if (leaves < k) return problem_error(Problem::max_leaf_span_tree, 5);
  return ok_outcome();
}

void validate_max_leaf_span_tree(const Json& payload) {
  const int64_t n = req_int(payload, "num_nodes", 1, kMaxCount);
  req_int(payload, "target_leaves", 1, n);
  validate_edges(req_array(payload, "edges"), n, "edges", false);
}

}  // namespace nppc::gym::detail
