#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nppc/error.hpp"
#include "nppc/json.hpp"
#include "nppc/oracle.hpp"
#include "search.hpp"

// Every solver here is an independent exhaustive search over the payload as
// wire JSON; none of them call into the gym verifier. Search::tick() is hit
// once per node so budgets bound both work and recursion depth.

namespace nppc::oracle {
namespace {

using detail::Search;

// Any depth-first search deeper than this has a flat candidate space of at
// least 2^kMaxDepth, which no configurable budget can cover.
constexpr int64_t kMaxDepth = 10'000;
// Adjacency/distance matrices above this node count are never searchable.
constexpr int64_t kMaxMatrix = 4'096;

[[noreturn]] void unsupported(const std::string& what) {
  fail(Errc::unsupported_size, "oracle: " + what);
}

void require_depth(int64_t dim) {
  if (dim > kMaxDepth)
    unsupported("a search over " + std::to_string(dim) +
                " decisions provably exceeds the state budget");
}

size_t uz(int64_t v) { return static_cast<size_t>(v); }

std::vector<int64_t> int_list(const Json& arr) {
  std::vector<int64_t> out;
  out.reserve(arr.size());
  for (const auto& v : arr) out.push_back(v.get<int64_t>());
  return out;
}

std::vector<std::pair<int64_t, int64_t>> edge_pairs(const Json& edges) {
  std::vector<std::pair<int64_t, int64_t>> out;
  out.reserve(edges.size());
  for (const auto& e : edges)
    out.emplace_back(e[0].get<int64_t>(), e[1].get<int64_t>());
  return out;
}

std::vector<std::vector<int64_t>> neighbor_lists(
    int64_t n, const std::vector<std::pair<int64_t, int64_t>>& edges) {
  std::vector<std::vector<int64_t>> adj(uz(n));
  for (auto [u, v] : edges) {
    adj[uz(u)].push_back(v);
    adj[uz(v)].push_back(u);
  }
  return adj;
}

std::vector<std::vector<char>> adjacency_matrix(
    int64_t n, const std::vector<std::pair<int64_t, int64_t>>& edges) {
  if (n > kMaxMatrix)
    unsupported("adjacency matrix over " + std::to_string(n) + " nodes");
  std::vector<std::vector<char>> adj(uz(n), std::vector<char>(uz(n), 0));
  for (auto [u, v] : edges) adj[uz(u)][uz(v)] = adj[uz(v)][uz(u)] = 1;
  return adj;
}

std::vector<std::vector<int64_t>> read_matrix(const Json& m) {
  if (static_cast<int64_t>(m.size()) > kMaxMatrix)
    unsupported("distance matrix over " + std::to_string(m.size()) + " rows");
  std::vector<std::vector<int64_t>> out;
  out.reserve(m.size());
  for (const auto& row : m) out.push_back(int_list(row));
  return out;
}

Json indices_json(const std::vector<int64_t>& v) {
  Json out = Json::array();
  for (int64_t x : v) out.push_back(x);
  return out;
}

int64_t isqrt(int64_t v) {
  if (v < 0) return -1;
  auto r = static_cast<int64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

// ---- logic ------------------------------------------------------------

std::optional<Json> solve_three_sat(const Json& payload, Search& s) {
  const int64_t n = payload.at("num_variables").get<int64_t>();
  require_depth(n);
  struct Lit {
    int64_t var;
    bool pos;
  };
  std::vector<std::array<Lit, 3>> clauses;
  for (const auto& cj : payload.at("clauses")) {
    std::array<Lit, 3> c{};
    for (int i = 0; i < 3; ++i) {
      int64_t l = cj[uz(i)].get<int64_t>();
      c[uz(i)] = {std::llabs(l) - 1, l > 0};
    }
    clauses.push_back(c);
  }
  std::vector<int8_t> assign(uz(n), -1);
  std::function<bool(int64_t)> dfs = [&](int64_t i) -> bool {
    if (!s.tick()) return false;
    for (const auto& c : clauses) {
      bool dead = true;
      for (const Lit& l : c) {
        int8_t a = assign[uz(l.var)];
        if (a == -1 || (a == 1) == l.pos) {
          dead = false;
          break;
        }
      }
      if (dead) return false;
    }
    if (i == n) return true;
    for (int8_t v = 0; v < 2; ++v) {
      assign[uz(i)] = v;
      if (dfs(i + 1)) return true;
      if (s.stopped()) break;
    }
    assign[uz(i)] = -1;
    return false;
  };
  if (!dfs(0)) return std::nullopt;
  Json out = Json::array();
  for (int8_t a : assign) out.push_back(a == 1);
  return out;
}

std::optional<Json> solve_hitting_string(const Json& payload, Search& s) {
  const int64_t n = payload.at("n").get<int64_t>();
  require_depth(n);
  std::vector<std::string> patterns;
  for (const auto& p : payload.at("strings")) patterns.push_back(p.get<std::string>());
  std::vector<int8_t> bits(uz(n), -1);
  auto pattern_alive = [&](const std::string& p) {
    for (size_t i = 0; i < p.size(); ++i) {
      if (p[i] == '*') continue;
      if (bits[i] == -1 || p[i] - '0' == bits[i]) return true;
    }
    return false;
  };
  std::function<bool(int64_t)> dfs = [&](int64_t i) -> bool {
    if (!s.tick()) return false;
    for (const auto& p : patterns)
      if (!pattern_alive(p)) return false;
    if (i == n) return true;
    for (int8_t b = 0; b < 2; ++b) {
      bits[uz(i)] = b;
      if (dfs(i + 1)) return true;
      if (s.stopped()) break;
    }
    bits[uz(i)] = -1;
    return false;
  };
  if (!dfs(0)) return std::nullopt;
  std::string x;
  for (int8_t b : bits) x += static_cast<char>('0' + b);
  return Json(x);
}

// ---- graph cover family -------------------------------------------------

std::optional<Json> solve_vertex_cover(const Json& payload, Search& s) {
  const int64_t k = payload.at("cover_size").get<int64_t>();
  auto edges = edge_pairs(payload.at("edges"));
  require_depth(k);
  std::set<int64_t> chosen;
  std::function<bool(int64_t)> dfs = [&](int64_t left) -> bool {
    if (!s.tick()) return false;
    const std::pair<int64_t, int64_t>* pick = nullptr;
    for (const auto& e : edges) {
      if (!chosen.count(e.first) && !chosen.count(e.second)) {
        pick = &e;
        break;
      }
    }
    if (!pick) return true;
    if (left == 0) return false;
    for (int64_t v : {pick->first, pick->second}) {
      chosen.insert(v);
      if (dfs(left - 1)) return true;
      chosen.erase(v);
      if (s.stopped()) return false;
    }
    return false;
  };
  if (!dfs(k)) return std::nullopt;
  if (chosen.empty()) chosen.insert(0);  // edgeless graph; keep it non-empty
  return indices_json({chosen.begin(), chosen.end()});
}

std::optional<Json> solve_clique(const Json& payload, Search& s) {
  const int64_t n = payload.at("num_nodes").get<int64_t>();
  const int64_t k = payload.at("k").get<int64_t>();
  auto adj = adjacency_matrix(n, edge_pairs(payload.at("edges")));
  require_depth(k);
  std::vector<int64_t> chosen;
  std::function<bool(int64_t)> dfs = [&](int64_t start) -> bool {
    if (!s.tick()) return false;
    if (static_cast<int64_t>(chosen.size()) == k) return true;
    if (n - start < k - static_cast<int64_t>(chosen.size())) return false;
    for (int64_t v = start; v < n; ++v) {
      bool fits = true;
      for (int64_t u : chosen)
        if (!adj[uz(u)][uz(v)]) {
          fits = false;
          break;
        }
      if (!fits) continue;
      chosen.push_back(v);
      if (dfs(v + 1)) return true;
      chosen.pop_back();
      if (s.stopped()) return false;
    }
    return false;
  };
  if (!dfs(0)) return std::nullopt;
  return indices_json(chosen);
}

std::optional<Json> solve_independent_set(const Json& payload, Search& s) {
  const int64_t n = payload.at("num_nodes").get<int64_t>();
  const int64_t k = payload.at("k").get<int64_t>();
  auto adj = adjacency_matrix(n, edge_pairs(payload.at("edges")));
  require_depth(k);
  std::vector<int64_t> chosen;
  std::function<bool(int64_t)> dfs = [&](int64_t start) -> bool {
    if (!s.tick()) return false;
    if (static_cast<int64_t>(chosen.size()) == k) return true;
    if (n - start < k - static_cast<int64_t>(chosen.size())) return false;
    for (int64_t v = start; v < n; ++v) {
      bool fits = true;
      for (int64_t u : chosen)
        if (adj[uz(u)][uz(v)]) {
          fits = false;
          break;
        }
      if (!fits) continue;
      chosen.push_back(v);
      if (dfs(v + 1)) return true;
      chosen.pop_back();
      if (s.stopped()) return false;
    }
    return false;
  };
  if (!dfs(0)) return std::nullopt;
  return indices_json(chosen);
}

std::optional<Json> solve_dominating_set(const Json& payload, Search& s) {
  const int64_t n = payload.at("num_nodes").get<int64_t>();
  const int64_t k = payload.at("k").get<int64_t>();
  auto adj = neighbor_lists(n, edge_pairs(payload.at("edges")));
  require_depth(k);
  std::vector<int64_t> chosen;
  auto first_undominated = [&]() -> int64_t {
    std::vector<char> dom(uz(n), 0);
    for (int64_t w : chosen) {
      dom[uz(w)] = 1;
      for (int64_t u : adj[uz(w)]) dom[uz(u)] = 1;
    }
    for (int64_t v = 0; v < n; ++v)
      if (!dom[uz(v)]) return v;
    return -1;
  };
  std::function<bool(int64_t)> dfs = [&](int64_t left) -> bool {
    if (!s.tick()) return false;
    int64_t u = first_undominated();
    if (u < 0) return true;
    if (left == 0) return false;
    std::vector<int64_t> closed{u};
    closed.insert(closed.end(), adj[uz(u)].begin(), adj[uz(u)].end());
    for (int64_t w : closed) {
      chosen.push_back(w);
      if (dfs(left - 1)) return true;
      chosen.pop_back();
      if (s.stopped()) return false;
    }
    return false;
  };
  if (!dfs(k)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return indices_json(chosen);
}

// ---- matchings and covers over set systems -------------------------------

std::optional<Json> solve_three_dm(const Json& payload, Search& s) {
  const int64_t n = payload.at("n").get<int64_t>();
  require_depth(n);
  std::vector<std::array<int64_t, 3>> triples;
  for (const auto& t : payload.at("triples"))
    triples.push_back({t[0].get<int64_t>(), t[1].get<int64_t>(), t[2].get<int64_t>()});
  std::vector<std::vector<size_t>> by_x(uz(n));
  for (size_t i = 0; i < triples.size(); ++i) {
    int64_t x = triples[i][0];
    if (x >= 0 && x < n) by_x[uz(x)].push_back(i);
  }
  std::set<int64_t> used_y, used_z;
  std::vector<size_t> chosen;
  std::function<bool(int64_t)> dfs = [&](int64_t x) -> bool {
    if (!s.tick()) return false;
    if (x == n) return true;
    for (size_t i : by_x[uz(x)]) {
      if (used_y.count(triples[i][1]) || used_z.count(triples[i][2])) continue;
      used_y.insert(triples[i][1]);
      used_z.insert(triples[i][2]);
      chosen.push_back(i);
      if (dfs(x + 1)) return true;
      chosen.pop_back();
      used_y.erase(triples[i][1]);
      used_z.erase(triples[i][2]);
      if (s.stopped()) return false;
    }
    return false;
  };
  if (!dfs(0)) return std::nullopt;
  Json out = Json::array();
  for (size_t i : chosen)
    out.push_back(Json::array({triples[i][0], triples[i][1], triples[i][2]}));
  return out;
}

std::optional<Json> solve_set_splitting(const Json& payload, Search& s) {
  const int64_t n = payload.at("num_elements").get<int64_t>();
  require_depth(n);
  std::vector<std::vector<int64_t>> subsets;
  for (const auto& sub : payload.at("subsets")) subsets.push_back(int_list(sub));
  std::vector<int8_t> label(uz(n), -1);
  auto subset_alive = [&](const std::vector<int64_t>& sub) {
    bool side0 = false, side1 = false, open = false;
    for (int64_t e : sub) {
      int8_t l = label[uz(e)];
      if (l == -1)
        open = true;
      else if (l == 0)
        side0 = true;
      else
        side1 = true;
    }
    return (side0 && side1) || open;
  };
  std::function<bool(int64_t)> dfs = [&](int64_t i) -> bool {
    if (!s.tick()) return false;
    for (const auto& sub : subsets)
      if (!subset_alive(sub)) return false;
    if (i == n) return true;
    // the two sides are symmetric, so the first element can sit on side 0
    for (int8_t l = 0; l < (i == 0 ? 1 : 2); ++l) {
      label[uz(i)] = l;
      if (dfs(i + 1)) return true;
      if (s.stopped()) break;
    }
    label[uz(i)] = -1;
    return false;
  };
  if (!dfs(0)) return std::nullopt;
  Json out = Json::array();
  for (int8_t l : label) out.push_back(static_cast<int64_t>(l));
  return out;
}

std::optional<Json> solve_set_packing(const Json& payload, Search& s) {
  const int64_t n = payload.at("num_elements").get<int64_t>();
  const int64_t k = payload.at("k").get<int64_t>();
  std::vector<std::vector<int64_t>> subsets;
  for (const auto& sub : payload.at("subsets")) subsets.push_back(int_list(sub));
  const int64_t m = static_cast<int64_t>(subsets.size());
  require_depth(m);
  std::vector<char> used(uz(n), 0);
  std::vector<int64_t> chosen;
  std::function<bool(int64_t)> dfs = [&](int64_t idx) -> bool {
    if (!s.tick()) return false;
    if (static_cast<int64_t>(chosen.size()) == k) return true;
    if (m - idx < k - static_cast<int64_t>(chosen.size())) return false;
    // take subsets[idx]
    bool disjoint = true;
    for (int64_t e : subsets[uz(idx)])
      if (used[uz(e)]) {
        disjoint = false;
        break;
      }
    if (disjoint) {
      for (int64_t e : subsets[uz(idx)]) used[uz(e)] = 1;
      chosen.push_back(idx);
      if (dfs(idx + 1)) return true;
      chosen.pop_back();
      for (int64_t e : subsets[uz(idx)]) used[uz(e)] = 0;
      if (s.stopped()) return false;
    }
    return dfs(idx + 1);
  };
  if (!dfs(0)) return std::nullopt;
  return indices_json(chosen);
}

std::optional<Json> solve_x3c(const Json& payload, Search& s) {
  const int64_t universe = payload.at("num_elements").get<int64_t>();
  std::vector<std::vector<int64_t>> subsets;
  for (const auto& sub : payload.at("subsets")) subsets.push_back(int_list(sub));
  require_depth(universe / 3 + 1);
  std::vector<std::vector<size_t>> by_elem(uz(universe));
  for (size_t i = 0; i < subsets.size(); ++i)
    for (int64_t e : subsets[i])
      if (e >= 0 && e < universe) by_elem[uz(e)].push_back(i);
  std::vector<char> covered(uz(universe), 0);
  std::vector<int64_t> chosen;
  std::function<bool(int64_t)> dfs = [&](int64_t from) -> bool {
    if (!s.tick()) return false;
    int64_t e = from;
    while (e < universe && covered[uz(e)]) ++e;
    if (e == universe) return true;
    for (size_t i : by_elem[uz(e)]) {
      bool fresh = true;
      for (int64_t x : subsets[i])
        if (covered[uz(x)]) {
          fresh = false;
          break;
        }
      if (!fresh) continue;
      for (int64_t x : subsets[i]) covered[uz(x)] = 1;
      chosen.push_back(static_cast<int64_t>(i));
      if (dfs(e + 1)) return true;
      chosen.pop_back();
      for (int64_t x : subsets[i]) covered[uz(x)] = 0;
      if (s.stopped()) return false;
    }
    return false;
  };
  if (!dfs(0)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return indices_json(chosen);
}

std::optional<Json> solve_minimum_cover(const Json& payload, Search& s) {
  const int64_t n = payload.at("num_elements").get<int64_t>();
  const int64_t k = payload.at("k").get<int64_t>();
  std::vector<std::vector<int64_t>> sets;
  for (const auto& sub : payload.at("sets")) sets.push_back(int_list(sub));
  require_depth(k);
  std::vector<std::vector<size_t>> by_elem(uz(n));
  for (size_t i = 0; i < sets.size(); ++i)
    for (int64_t e : sets[i])
      if (e >= 0 && e < n) by_elem[uz(e)].push_back(i);
  std::vector<char> covered(uz(n), 0);
  std::vector<int64_t> chosen;
  std::function<bool(int64_t)> dfs = [&](int64_t left) -> bool {
    if (!s.tick()) return false;
    int64_t e = 0;
    while (e < n && covered[uz(e)]) ++e;
    if (e == n) return true;
    if (left == 0) return false;
    for (size_t i : by_elem[uz(e)]) {
      std::vector<int64_t> newly;
      for (int64_t x : sets[i]) {
        if (!covered[uz(x)]) {
          covered[uz(x)] = 1;
          newly.push_back(x);
        }
      }
      chosen.push_back(static_cast<int64_t>(i));
      if (dfs(left - 1)) return true;
      chosen.pop_back();
      for (int64_t x : newly) covered[uz(x)] = 0;
      if (s.stopped()) return false;
    }
    return false;
  };
  if (!dfs(k)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return indices_json(chosen);
}

// ---- tours and layouts ----------------------------------------------------

std::optional<Json> solve_tsp(const Json& payload, Search& s) {
  const int64_t n = payload.at("num_cities").get<int64_t>();
  const int64_t bound = payload.at("target_length").get<int64_t>();
  auto dist = read_matrix(payload.at("distances"));
  require_depth(n);
  std::vector<char> visited(uz(n), 0);
  std::vector<int64_t> order{0};
  visited[0] = 1;
  std::function<bool(int64_t)> dfs = [&](int64_t len) -> bool {
    if (!s.tick()) return false;
    if (static_cast<int64_t>(order.size()) == n)
      return len + dist[uz(order.back())][0] <= bound;
    for (int64_t v = 1; v < n; ++v) {
      if (visited[uz(v)]) continue;
      int64_t leg = dist[uz(order.back())][uz(v)];
      if (len + leg > bound) continue;
      visited[uz(v)] = 1;
      order.push_back(v);
      if (dfs(len + leg)) return true;
      order.pop_back();
      visited[uz(v)] = 0;
      if (s.stopped()) return false;
    }
    return false;
  };
  if (n == 1) return indices_json({0});
  if (!dfs(0)) return std::nullopt;
  return indices_json(order);
}

std::optional<Json> solve_hamiltonian_cycle(const Json& payload, Search& s) {
  const int64_t n = payload.at("num_nodes").get<int64_t>();
  const bool directed = payload.at("directed").get<bool>();
  auto edges = edge_pairs(payload.at("edges"));
  require_depth(n);
  std::vector<std::vector<int64_t>> out(uz(n));
  std::set<std::pair<int64_t, int64_t>> arc;
  for (auto [u, v] : edges) {
    out[uz(u)].push_back(v);
    arc.insert({u, v});
    if (!directed) {
      out[uz(v)].push_back(u);
      arc.insert({v, u});
    }
  }
  std::vector<char> visited(uz(n), 0);
  std::vector<int64_t> path{0};
  visited[0] = 1;
  std::function<bool()> dfs = [&]() -> bool {
    if (!s.tick()) return false;
    if (static_cast<int64_t>(path.size()) == n)
      return arc.count({path.back(), 0}) != 0;
    for (int64_t v : out[uz(path.back())]) {
      if (visited[uz(v)]) continue;
      visited[uz(v)] = 1;
      path.push_back(v);
      if (dfs()) return true;
      path.pop_back();
      visited[uz(v)] = 0;
      if (s.stopped()) return false;
    }
    return false;
  };
  if (!dfs()) return std::nullopt;
  return indices_json(path);
}

std::optional<Json> solve_bandwidth(const Json& payload, Search& s) {
  const int64_t n = payload.at("num_nodes").get<int64_t>();
  const int64_t bw = payload.at("bandwidth").get<int64_t>();
  auto adj = neighbor_lists(n, edge_pairs(payload.at("edges")));
  require_depth(n);
  std::vector<int64_t> pos(uz(n), -1);
  std::vector<char> node_placed(uz(n), 0);
  std::function<bool(int64_t)> dfs = [&](int64_t slot) -> bool {
    if (!s.tick()) return false;
    if (slot == n) return true;
    for (int64_t v = 0; v < n; ++v) {
      if (node_placed[uz(v)]) continue;
      bool fits = true;
      for (int64_t u : adj[uz(v)]) {
        if (pos[uz(u)] >= 0 && slot - pos[uz(u)] > bw) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      pos[uz(v)] = slot;
      node_placed[uz(v)] = 1;
      if (dfs(slot + 1)) return true;
      pos[uz(v)] = -1;
      node_placed[uz(v)] = 0;
      if (s.stopped()) return false;
    }
    return false;
  };
  if (!dfs(0)) return std::nullopt;
  return indices_json(pos);
}

std::optional<Json> solve_betweenness(const Json& payload, Search& s) {
  const int64_t n = payload.at("num_elements").get<int64_t>();
  require_depth(n);
  std::vector<std::array<int64_t, 3>> triples;
  for (const auto& t : payload.at("triples"))
    triples.push_back({t[0].get<int64_t>(), t[1].get<int64_t>(), t[2].get<int64_t>()});
  std::vector<int64_t> pos(uz(n), -1);
  std::vector<char> slot_used(uz(n), 0);
  auto triples_alive = [&]() {
    for (const auto& t : triples) {
      int64_t a = pos[uz(t[0])], b = pos[uz(t[1])], c = pos[uz(t[2])];
      if (a < 0 || b < 0 || c < 0) continue;
      if (!((a < b && b < c) || (c < b && b < a))) return false;
    }
    return true;
  };
  std::function<bool(int64_t)> dfs = [&](int64_t e) -> bool {
    if (!s.tick()) return false;
    if (!triples_alive()) return false;
    if (e == n) return true;
    for (int64_t slot = 0; slot < n; ++slot) {
      if (slot_used[uz(slot)]) continue;
      pos[uz(e)] = slot;
      slot_used[uz(slot)] = 1;
      if (dfs(e + 1)) return true;
      pos[uz(e)] = -1;
      slot_used[uz(slot)] = 0;
      if (s.stopped()) return false;
    }
    return false;
  };
  if (!dfs(0)) return std::nullopt;
  return indices_json(pos);
}

// ---- k-way assignments -----------------------------------------------------

std::optional<Json> solve_three_col(const Json& payload, Search& s) {
  const int64_t n = payload.at("num_nodes").get<int64_t>();
  auto adj = neighbor_lists(n, edge_pairs(payload.at("edges")));
  require_depth(n);
  std::vector<int8_t> color(uz(n), -1);
  std::function<bool(int64_t)> dfs = [&](int64_t v) -> bool {
    if (!s.tick()) return false;
    if (v == n) return true;
    // colours are interchangeable; pin the first node
    for (int8_t c = 0; c < (v == 0 ? 1 : 3); ++c) {
      bool fits = true;
      for (int64_t u : adj[uz(v)])
        if (color[uz(u)] == c) {
          fits = false;
          break;
        }
      if (!fits) continue;
      color[uz(v)] = c;
      if (dfs(v + 1)) return true;
      if (s.stopped()) break;
    }
    color[uz(v)] = -1;
    return false;
  };
  if (!dfs(0)) return std::nullopt;
  Json out = Json::array();
  for (int8_t c : color) out.push_back(static_cast<int64_t>(c));
  return out;
}

std::optional<Json> solve_clustering(const Json& payload, Search& s) {
  const int64_t n = payload.at("num_elements").get<int64_t>();
  const int64_t bound = payload.at("B").get<int64_t>();
  auto dist = read_matrix(payload.at("distances"));
  require_depth(n);
  std::vector<int8_t> label(uz(n), -1);
  std::function<bool(int64_t)> dfs = [&](int64_t v) -> bool {
    if (!s.tick()) return false;
    if (v == n) return true;
    for (int8_t c = 0; c < (v == 0 ? 1 : 3); ++c) {
      bool fits = true;
      for (int64_t u = 0; u < v; ++u) {
        if (label[uz(u)] == c && dist[uz(u)][uz(v)] > bound) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      label[uz(v)] = c;
      if (dfs(v + 1)) return true;
      if (s.stopped()) break;
    }
    label[uz(v)] = -1;
    return false;
  };
  if (!dfs(0)) return std::nullopt;
  Json out = Json::array();
  for (int8_t c : label) out.push_back(static_cast<int64_t>(c));
  return out;
}

// Shared skeleton for bin packing and min-sum-of-squares: place items
// (largest first) into k groups. Groups are tried least-loaded first, so the
// first descent replays the LPT heuristic; equal-load groups are
// interchangeable states and only one representative is explored. `fits`
// gets (loads, group, item, total still unplaced after this item) and must
// stay pessimistic about the future for the search to remain exact.
std::optional<std::vector<int64_t>> pack_items(
    const std::vector<int64_t>& sizes, int64_t k, Search& s,
    const std::function<bool(const std::vector<int64_t>&, int64_t, int64_t,
                             int64_t)>& fits) {
  const int64_t m = static_cast<int64_t>(sizes.size());
  require_depth(m);
  std::vector<size_t> order(uz(m));
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return sizes[a] > sizes[b]; });
  std::vector<int64_t> suffix(uz(m) + 1, 0);
  for (int64_t i = m - 1; i >= 0; --i)
    suffix[uz(i)] = suffix[uz(i) + 1] + sizes[order[uz(i)]];
  std::vector<int64_t> loads(uz(k), 0);
  std::vector<int64_t> group(uz(m), -1);
  std::vector<int64_t> bins(uz(k));
  std::function<bool(int64_t)> dfs = [&](int64_t i) -> bool {
    if (!s.tick()) return false;
    if (i == m) return true;
    const int64_t sz = sizes[order[uz(i)]];
    const int64_t rest = suffix[uz(i) + 1];
    for (int64_t b = 0; b < k; ++b) bins[uz(b)] = b;
    std::stable_sort(bins.begin(), bins.end(),
                     [&](int64_t a, int64_t b) { return loads[uz(a)] < loads[uz(b)]; });
    int64_t prev_load = -1;
    for (int64_t b : bins) {
      if (loads[uz(b)] == prev_load) continue;
      prev_load = loads[uz(b)];
      if (!fits(loads, b, sz, rest)) continue;
      loads[uz(b)] += sz;
      group[order[uz(i)]] = b;
      if (dfs(i + 1)) return true;
      group[order[uz(i)]] = -1;
      loads[uz(b)] -= sz;
      if (s.stopped()) return false;
    }
    return false;
  };
  if (!dfs(0)) return std::nullopt;
  return group;
}

std::optional<Json> solve_bin_packing(const Json& payload, Search& s) {
  auto sizes = int_list(payload.at("sizes"));
  const int64_t capacity = payload.at("bin_capacity").get<int64_t>();
  const int64_t k = payload.at("num_bins").get<int64_t>();
  auto fits = [capacity, k](const std::vector<int64_t>& loads, int64_t b, int64_t sz,
                            int64_t rest) {
    if (loads[uz(b)] + sz > capacity) return false;
    int64_t placed = sz;
    for (int64_t l : loads) placed += l;
    return k * capacity - placed >= rest;  // the rest must still fit somewhere
  };
  auto group = pack_items(sizes, k, s, fits);
  if (!group) return std::nullopt;
  return indices_json(*group);
}

std::optional<Json> solve_min_sum_squares(const Json& payload, Search& s) {
  auto sizes = int_list(payload.at("sizes"));
  const int64_t k = payload.at("k").get<int64_t>();
  const int64_t bound = payload.at("J").get<int64_t>();
  // Admissible bound: water-fill the unplaced total over the groups (the
  // continuous relaxation), which never overestimates the best completion.
  auto fits = [bound](const std::vector<int64_t>& loads, int64_t b, int64_t sz,
                      int64_t rest) {
    std::vector<int64_t> ls = loads;
    ls[uz(b)] += sz;
    std::sort(ls.begin(), ls.end());
    const int64_t k2 = static_cast<int64_t>(ls.size());
    __int128 lb = 0;
    int64_t prefix = 0;
    for (int64_t j = 0; j < k2; ++j) {
      prefix += ls[uz(j)];
      // pour onto bins [0..j]; valid once the level stays below the next bin
      if (j + 1 < k2 && static_cast<__int128>(prefix) + rest >
                            static_cast<__int128>(ls[uz(j) + 1]) * (j + 1))
        continue;
      const __int128 levelled = static_cast<__int128>(prefix) + rest;
      lb = levelled * levelled / (j + 1);
      for (int64_t i = j + 1; i < k2; ++i)
        lb += static_cast<__int128>(ls[uz(i)]) * ls[uz(i)];
      break;
    }
    return lb <= bound;
  };
  auto group = pack_items(sizes, k, s, fits);
  if (!group) return std::nullopt;
  return indices_json(*group);
}

// ---- spanning trees ---------------------------------------------------------

std::optional<Json> solve_max_leaf_span_tree(const Json& payload, Search& s) {
  const int64_t n = payload.at("num_nodes").get<int64_t>();
  const int64_t k = payload.at("target_leaves").get<int64_t>();
  auto edges = edge_pairs(payload.at("edges"));
  const int64_t m = static_cast<int64_t>(edges.size());
  require_depth(m);
  if (n == 1) return indices_json({-1});
  if (m < n - 1) return std::nullopt;

  // union-find without path compression so choices undo in O(1)
  std::vector<int64_t> parent(uz(n)), rank_(uz(n), 0);
  for (int64_t v = 0; v < n; ++v) parent[uz(v)] = v;
  auto find = [&](int64_t v) {
    while (parent[uz(v)] != v) v = parent[uz(v)];
    return v;
  };

  std::vector<int64_t> deg(uz(n), 0);
  std::vector<char> taken(uz(m), 0);
  std::function<bool(int64_t, int64_t)> dfs = [&](int64_t idx, int64_t chosen) -> bool {
    if (!s.tick()) return false;
    if (chosen == n - 1) {
      int64_t leaves = 0;
      for (int64_t v = 0; v < n; ++v) leaves += deg[uz(v)] == 1;
      return leaves >= k;
    }
    if (m - idx < n - 1 - chosen) return false;
    auto [u, v] = edges[uz(idx)];
    int64_t ru = find(u), rv = find(v);
    if (ru != rv) {
      if (rank_[uz(ru)] < rank_[uz(rv)]) std::swap(ru, rv);
      parent[uz(rv)] = ru;
      const bool bumped = rank_[uz(ru)] == rank_[uz(rv)];
      if (bumped) ++rank_[uz(ru)];
      ++deg[uz(u)];
      ++deg[uz(v)];
      taken[uz(idx)] = 1;
      if (dfs(idx + 1, chosen + 1)) return true;
      taken[uz(idx)] = 0;
      --deg[uz(u)];
      --deg[uz(v)];
      if (bumped) --rank_[uz(ru)];
      parent[uz(rv)] = rv;
      if (s.stopped()) return false;
    }
    return dfs(idx + 1, chosen);
  };
  if (!dfs(0, 0)) return std::nullopt;

  std::vector<std::vector<int64_t>> adj(uz(n));
  for (int64_t i = 0; i < m; ++i) {
    if (!taken[uz(i)]) continue;
    adj[uz(edges[uz(i)].first)].push_back(edges[uz(i)].second);
    adj[uz(edges[uz(i)].second)].push_back(edges[uz(i)].first);
  }
  std::vector<int64_t> par(uz(n), -2);
  std::vector<int64_t> stack{0};
  par[0] = -1;
  while (!stack.empty()) {
    int64_t v = stack.back();
    stack.pop_back();
    for (int64_t u : adj[uz(v)]) {
      if (par[uz(u)] != -2) continue;
      par[uz(u)] = v;
      stack.push_back(u);
    }
  }
  return indices_json(par);
}

// ---- number problems --------------------------------------------------------

std::optional<Json> solve_partition(const Json& payload, Search& s) {
  auto sizes = int_list(payload.at("sizes"));
  const int64_t m = static_cast<int64_t>(sizes.size());
  require_depth(m);
  int64_t total = 0;
  for (int64_t v : sizes) total += v;
  if (total % 2 != 0) return std::nullopt;
  const int64_t target = total / 2;
  std::vector<int64_t> suffix(uz(m) + 1, 0);
  for (int64_t i = m - 1; i >= 0; --i) suffix[uz(i)] = suffix[uz(i) + 1] + sizes[uz(i)];
  std::vector<int8_t> label(uz(m), 1);
  std::function<bool(int64_t, int64_t)> dfs = [&](int64_t i, int64_t cur) -> bool {
    if (!s.tick()) return false;
    if (cur == target) return true;  // everything left stays on side 1
    if (i == m || cur > target || cur + suffix[uz(i)] < target) return false;
    label[uz(i)] = 0;
    if (dfs(i + 1, cur + sizes[uz(i)])) return true;
    label[uz(i)] = 1;
    if (s.stopped()) return false;
    return dfs(i + 1, cur);
  };
  if (!dfs(0, 0)) return std::nullopt;
  Json out = Json::array();
  for (int8_t l : label) out.push_back(static_cast<int64_t>(l));
  return out;
}

std::optional<Json> solve_subset_sum(const Json& payload, Search& s) {
  auto sizes = int_list(payload.at("sizes"));
  const int64_t target = payload.at("target").get<int64_t>();
  const int64_t m = static_cast<int64_t>(sizes.size());
  require_depth(m);
  std::vector<int64_t> suffix(uz(m) + 1, 0);
  for (int64_t i = m - 1; i >= 0; --i) suffix[uz(i)] = suffix[uz(i) + 1] + sizes[uz(i)];
  std::vector<int64_t> chosen;
  std::function<bool(int64_t, int64_t)> dfs = [&](int64_t i, int64_t cur) -> bool {
    if (!s.tick()) return false;
    if (cur == target) return true;
    if (i == m || cur > target || cur + suffix[uz(i)] < target) return false;
    chosen.push_back(i);
    if (dfs(i + 1, cur + sizes[uz(i)])) return true;
    chosen.pop_back();
    if (s.stopped()) return false;
    return dfs(i + 1, cur);
  };
  if (!dfs(0, 0)) return std::nullopt;
  return indices_json(chosen);
}

std::optional<Json> solve_qde(const Json& payload, Search& s) {
  const int64_t a = payload.at("a").get<int64_t>();
  const int64_t b = payload.at("b").get<int64_t>();
  const int64_t c = payload.at("c").get<int64_t>();
  if (c <= b) return std::nullopt;  // a*x^2 + b*y >= a + b > c
  const int64_t xmax = isqrt((c - b) / a);
  if (xmax > s.max_states())
    unsupported("sweep over " + std::to_string(xmax) +
                " x values provably exceeds the state budget");
  for (int64_t x = 1; x <= xmax; ++x) {
    if (!s.tick()) return std::nullopt;
    const int64_t rem = c - a * x * x;
    if (rem >= b && rem % b == 0) return Json::array({x, rem / b});
  }
  return std::nullopt;
}

std::optional<Json> solve_quadratic_congruences(const Json& payload, Search& s) {
  const int64_t a = payload.at("a").get<int64_t>();
  const int64_t b = payload.at("b").get<int64_t>();
  const int64_t c = payload.at("c").get<int64_t>();
  if (c - 1 > s.max_states())
    unsupported("sweep over " + std::to_string(c - 1) +
                " residues provably exceeds the state budget");
  for (int64_t x = 1; x < c; ++x) {
    if (!s.tick()) return std::nullopt;
    if (static_cast<__int128>(x) * x % b == a) return Json(x);
  }
  return std::nullopt;
}

// ---- superstring ------------------------------------------------------------

std::optional<Json> solve_superstring(const Json& payload, Search& s) {
  const int64_t max_length = payload.at("max_length").get<int64_t>();
  std::vector<std::string> raw;
  for (const auto& v : payload.at("strings")) raw.push_back(v.get<std::string>());

  // Strings contained in another contribute nothing to the optimum.
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<std::string> strs;
  for (size_t i = 0; i < raw.size(); ++i) {
    bool inside = false;
    for (size_t j = 0; j < raw.size() && !inside; ++j)
      inside = i != j && raw[j].find(raw[i]) != std::string::npos;
    if (!inside) strs.push_back(raw[i]);
  }
  const int64_t r = static_cast<int64_t>(strs.size());
  const __int128 table = (static_cast<__int128>(1) << std::min<int64_t>(r, 62)) * r * r;
  if (r > 62 || table > s.max_states())
    unsupported("superstring subset table for " + std::to_string(r) +
                " strings provably exceeds the state budget");
  if (r == 0) return Json(std::string());  // anything covers an empty family
  if (r == 1) {
    if (static_cast<int64_t>(strs[0].size()) > max_length) return std::nullopt;
    return Json(strs[0]);
  }

  auto overlap = [&](const std::string& a, const std::string& b) -> int64_t {
    const int64_t cap =
        static_cast<int64_t>(std::min(a.size(), b.size())) - 1;
    for (int64_t o = cap; o > 0; --o)
      if (a.compare(a.size() - uz(o), uz(o), b, 0, uz(o)) == 0) return o;
    return 0;
  };
  std::vector<std::vector<int64_t>> ov(uz(r), std::vector<int64_t>(uz(r), 0));
  for (int64_t i = 0; i < r; ++i)
    for (int64_t j = 0; j < r; ++j)
      if (i != j) ov[uz(i)][uz(j)] = overlap(strs[uz(i)], strs[uz(j)]);

  const size_t full = (size_t{1} << r);
  constexpr int64_t kInf = INT64_MAX / 2;
  std::vector<std::vector<int64_t>> dp(full, std::vector<int64_t>(uz(r), kInf));
  std::vector<std::vector<int64_t>> prev(full, std::vector<int64_t>(uz(r), -1));
  for (int64_t i = 0; i < r; ++i)
    dp[size_t{1} << i][uz(i)] = static_cast<int64_t>(strs[uz(i)].size());
  for (size_t mask = 1; mask < full; ++mask) {
    for (int64_t last = 0; last < r; ++last) {
      if (!(mask >> last & 1) || dp[mask][uz(last)] == kInf) continue;
      for (int64_t j = 0; j < r; ++j) {
        if (mask >> j & 1) continue;
        if (!s.tick()) return std::nullopt;
        const size_t next = mask | (size_t{1} << j);
        const int64_t len = dp[mask][uz(last)] +
                            static_cast<int64_t>(strs[uz(j)].size()) -
                            ov[uz(last)][uz(j)];
        if (len < dp[next][uz(j)]) {
          dp[next][uz(j)] = len;
          prev[next][uz(j)] = last;
        }
      }
    }
  }
  int64_t best = kInf, best_last = -1;
  for (int64_t i = 0; i < r; ++i)
    if (dp[full - 1][uz(i)] < best) {
      best = dp[full - 1][uz(i)];
      best_last = i;
    }
  if (best > max_length) return std::nullopt;  // DP optimum is exact

  std::vector<int64_t> chain;
  size_t mask = full - 1;
  int64_t last = best_last;
  while (last != -1) {
    chain.push_back(last);
    int64_t p = prev[mask][uz(last)];
    mask &= ~(size_t{1} << last);
    last = p;
  }
  std::reverse(chain.begin(), chain.end());
  std::string result = strs[uz(chain[0])];
  for (size_t i = 1; i < chain.size(); ++i)
    result += strs[uz(chain[i])].substr(uz(ov[uz(chain[i - 1])][uz(chain[i])]));
  return Json(result);
}

}  // namespace

OracleResult solve_exact(const Instance& inst, const OracleBudget& budget) {
  if (budget.max_states <= 0 || budget.max_millis <= 0)
    fail(Errc::config_mismatch, "oracle budget fields must be positive");
  Search search(budget);
  std::optional<Json> found;
  try {
    switch (inst.problem) {
      case Problem::three_sat: found = solve_three_sat(inst.payload, search); break;
      case Problem::vertex_cover: found = solve_vertex_cover(inst.payload, search); break;
      case Problem::three_dm: found = solve_three_dm(inst.payload, search); break;
      case Problem::tsp: found = solve_tsp(inst.payload, search); break;
      case Problem::hamiltonian_cycle:
        found = solve_hamiltonian_cycle(inst.payload, search);
        break;
      case Problem::three_col: found = solve_three_col(inst.payload, search); break;
      case Problem::bin_packing: found = solve_bin_packing(inst.payload, search); break;
      case Problem::max_leaf_span_tree:
        found = solve_max_leaf_span_tree(inst.payload, search);
        break;
      case Problem::qde: found = solve_qde(inst.payload, search); break;
      case Problem::min_sum_squares:
        found = solve_min_sum_squares(inst.payload, search);
        break;
      case Problem::superstring: found = solve_superstring(inst.payload, search); break;
      case Problem::bandwidth: found = solve_bandwidth(inst.payload, search); break;
      case Problem::clique: found = solve_clique(inst.payload, search); break;
      case Problem::independent_set:
        found = solve_independent_set(inst.payload, search);
        break;
      case Problem::dominating_set:
        found = solve_dominating_set(inst.payload, search);
        break;
      case Problem::set_splitting:
        found = solve_set_splitting(inst.payload, search);
        break;
      case Problem::set_packing: found = solve_set_packing(inst.payload, search); break;
      case Problem::x3c: found = solve_x3c(inst.payload, search); break;
      case Problem::minimum_cover:
        found = solve_minimum_cover(inst.payload, search);
        break;
      case Problem::partition: found = solve_partition(inst.payload, search); break;
      case Problem::subset_sum: found = solve_subset_sum(inst.payload, search); break;
      case Problem::hitting_string:
        found = solve_hitting_string(inst.payload, search);
        break;
      case Problem::quadratic_congruences:
        found = solve_quadratic_congruences(inst.payload, search);
        break;
      case Problem::betweenness: found = solve_betweenness(inst.payload, search); break;
      case Problem::clustering: found = solve_clustering(inst.payload, search); break;
    }
  } catch (const Json::exception& e) {
    fail(Errc::schema_violation, std::string("oracle: malformed payload: ") + e.what());
  }
  OracleResult result;
  result.states = search.states();
  if (found) {
    result.status = OracleStatus::found;
    result.solution = std::move(*found);
  } else {
    result.status =
        search.stopped() ? OracleStatus::exhausted : OracleStatus::no_solution;
  }
  return result;
}

}  // namespace nppc::oracle
