#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nppc/json.hpp"
#include "nppc/oracle.hpp"

// Yes/no re-implementation of every acceptance rule, kept deliberately apart
// from the gym verifiers (no shared helpers) so the two can cross-check each
// other in tests.

namespace nppc::oracle {
namespace {

using Pair = std::pair<int64_t, int64_t>;

std::optional<std::vector<int64_t>> as_ints(const Json& c) {
  if (!c.is_array()) return std::nullopt;
  std::vector<int64_t> out;
  for (const auto& v : c) {
    if (!v.is_number_integer() && !v.is_number_unsigned()) return std::nullopt;
    out.push_back(v.get<int64_t>());
  }
  return out;
}

std::optional<std::vector<bool>> as_bools(const Json& c) {
  if (!c.is_array()) return std::nullopt;
  std::vector<bool> out;
  for (const auto& v : c) {
    if (!v.is_boolean()) return std::nullopt;
    out.push_back(v.get<bool>());
  }
  return out;
}

std::optional<std::string> as_str(const Json& c) {
  if (!c.is_string()) return std::nullopt;
  return c.get<std::string>();
}

std::optional<int64_t> as_int(const Json& c) {
  if (!c.is_number_integer() && !c.is_number_unsigned()) return std::nullopt;
  return c.get<int64_t>();
}

size_t uz(int64_t v) { return static_cast<size_t>(v); }

std::set<Pair> payload_edges(const Json& edges) {
  std::set<Pair> out;
  for (const auto& e : edges) out.insert({e[0].get<int64_t>(), e[1].get<int64_t>()});
  return out;
}

bool check_three_sat(const Json& p, const Json& c) {
  auto bits = as_bools(c);
  if (!bits || static_cast<int64_t>(bits->size()) != p.at("num_variables").get<int64_t>())
    return false;
  for (const auto& clause : p.at("clauses")) {
    bool satisfied = false;
    for (const auto& lj : clause) {
      int64_t lit = lj.get<int64_t>();
      if ((lit > 0) == (*bits)[uz(std::llabs(lit) - 1)]) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return false;
  }
  return true;
}

bool check_hitting_string(const Json& p, const Json& c) {
  auto s = as_str(c);
  if (!s || static_cast<int64_t>(s->size()) != p.at("n").get<int64_t>()) return false;
  for (char ch : *s)
    if (ch != '0' && ch != '1') return false;
  for (const auto& pj : p.at("strings")) {
    const std::string pattern = pj.get<std::string>();
    bool agrees = false;
    for (size_t i = 0; i < pattern.size() && !agrees; ++i)
      agrees = pattern[i] == (*s)[i];
    if (!agrees) return false;
  }
  return true;
}

bool check_vertex_cover(const Json& p, const Json& c) {
  auto idx = as_ints(c);
  if (!idx || idx->empty()) return false;
  const int64_t n = p.at("num_nodes").get<int64_t>();
  for (int64_t v : *idx)
    if (v < 0 || v >= n) return false;
  if (static_cast<int64_t>(idx->size()) > p.at("cover_size").get<int64_t>())
    return false;
  std::set<int64_t> chosen(idx->begin(), idx->end());
  for (const auto& e : p.at("edges"))
    if (!chosen.count(e[0].get<int64_t>()) && !chosen.count(e[1].get<int64_t>()))
      return false;
  return true;
}

bool check_clique(const Json& p, const Json& c) {
  auto idx = as_ints(c);
  if (!idx || static_cast<int64_t>(idx->size()) != p.at("k").get<int64_t>())
    return false;
  const int64_t n = p.at("num_nodes").get<int64_t>();
  std::set<int64_t> chosen;
  for (int64_t v : *idx)
    if (v < 0 || v >= n || !chosen.insert(v).second) return false;
  auto edges = payload_edges(p.at("edges"));
  for (auto it = chosen.begin(); it != chosen.end(); ++it)
    for (auto jt = std::next(it); jt != chosen.end(); ++jt)
      if (!edges.count({*it, *jt})) return false;
  return true;
}

bool check_independent_set(const Json& p, const Json& c) {
  auto idx = as_ints(c);
  if (!idx || static_cast<int64_t>(idx->size()) < p.at("k").get<int64_t>())
    return false;
  const int64_t n = p.at("num_nodes").get<int64_t>();
  std::set<int64_t> chosen;
  for (int64_t v : *idx)
    if (v < 0 || v >= n || !chosen.insert(v).second) return false;
  for (const auto& e : p.at("edges"))
    if (chosen.count(e[0].get<int64_t>()) && chosen.count(e[1].get<int64_t>()))
      return false;
  return true;
}

bool check_dominating_set(const Json& p, const Json& c) {
  auto idx = as_ints(c);
  if (!idx || idx->empty()) return false;
  const int64_t n = p.at("num_nodes").get<int64_t>();
  std::set<int64_t> chosen;
  for (int64_t v : *idx)
    if (v < 0 || v >= n || !chosen.insert(v).second) return false;
  if (static_cast<int64_t>(idx->size()) > p.at("k").get<int64_t>()) return false;
  std::vector<char> dominated(uz(n), 0);
  for (int64_t v : chosen) dominated[uz(v)] = 1;
  for (const auto& e : p.at("edges")) {
    int64_t u = e[0].get<int64_t>(), v = e[1].get<int64_t>();
    if (chosen.count(u)) dominated[uz(v)] = 1;
    if (chosen.count(v)) dominated[uz(u)] = 1;
  }
  for (int64_t u = 0; u < n; ++u)
    if (!dominated[uz(u)]) return false;
  return true;
}

bool check_three_dm(const Json& p, const Json& c) {
  if (!c.is_array()) return false;
  std::vector<std::array<int64_t, 3>> chosen;
  for (const auto& tj : c) {
    auto t = as_ints(tj);
    if (!t || t->size() != 3) return false;
    chosen.push_back({(*t)[0], (*t)[1], (*t)[2]});
  }
  std::set<std::array<int64_t, 3>> pool;
  for (const auto& tj : p.at("triples"))
    pool.insert({tj[0].get<int64_t>(), tj[1].get<int64_t>(), tj[2].get<int64_t>()});
  for (const auto& t : chosen)
    if (!pool.count(t)) return false;
  if (static_cast<int64_t>(chosen.size()) != p.at("n").get<int64_t>()) return false;
  std::set<int64_t> xs, ys, zs;
  for (const auto& t : chosen) {
    xs.insert(t[0]);
    ys.insert(t[1]);
    zs.insert(t[2]);
  }
  return xs.size() == chosen.size() && ys.size() == chosen.size() &&
         zs.size() == chosen.size();
}

bool check_set_splitting(const Json& p, const Json& c) {
  auto labels = as_ints(c);
  if (!labels ||
      static_cast<int64_t>(labels->size()) != p.at("num_elements").get<int64_t>())
    return false;
  for (int64_t l : *labels)
    if (l != 0 && l != 1) return false;
  for (const auto& subset : p.at("subsets")) {
    bool side0 = false, side1 = false;
    for (const auto& ej : subset)
      ((*labels)[uz(ej.get<int64_t>())] == 0 ? side0 : side1) = true;
    if (!side0 || !side1) return false;
  }
  return true;
}

bool check_set_packing(const Json& p, const Json& c) {
  auto idx = as_ints(c);
  if (!idx || static_cast<int64_t>(idx->size()) != p.at("k").get<int64_t>())
    return false;
  const Json& subsets = p.at("subsets");
  std::set<int64_t> chosen;
  for (int64_t i : *idx)
    if (i < 0 || i >= static_cast<int64_t>(subsets.size()) || !chosen.insert(i).second)
      return false;
  std::set<int64_t> used;
  for (int64_t i : chosen)
    for (const auto& ej : subsets[uz(i)])
      if (!used.insert(ej.get<int64_t>()).second) return false;
  return true;
}

bool check_x3c(const Json& p, const Json& c) {
  auto idx = as_ints(c);
  const int64_t universe = p.at("num_elements").get<int64_t>();
  if (!idx || static_cast<int64_t>(idx->size()) != universe / 3) return false;
  const Json& subsets = p.at("subsets");
  std::set<int64_t> chosen;
  for (int64_t i : *idx)
    if (i < 0 || i >= static_cast<int64_t>(subsets.size()) || !chosen.insert(i).second)
      return false;
  std::vector<char> covered(uz(universe), 0);
  for (int64_t i : chosen)
    for (const auto& ej : subsets[uz(i)]) {
      size_t e = uz(ej.get<int64_t>());
      if (covered[e]) return false;
      covered[e] = 1;
    }
  return true;
}

bool check_minimum_cover(const Json& p, const Json& c) {
  auto idx = as_ints(c);
  if (!idx || static_cast<int64_t>(idx->size()) > p.at("k").get<int64_t>())
    return false;
  const int64_t n = p.at("num_elements").get<int64_t>();
  const Json& sets = p.at("sets");
  std::set<int64_t> chosen;
  for (int64_t i : *idx)
    if (i < 0 || i >= static_cast<int64_t>(sets.size()) || !chosen.insert(i).second)
      return false;
  std::vector<char> covered(uz(n), 0);
  for (int64_t i : chosen)
    for (const auto& ej : sets[uz(i)]) covered[uz(ej.get<int64_t>())] = 1;
  for (int64_t e = 0; e < n; ++e)
    if (!covered[uz(e)]) return false;
  return true;
}

bool check_tsp(const Json& p, const Json& c) {
  auto idx = as_ints(c);
  const int64_t n = p.at("num_cities").get<int64_t>();
  if (!idx || static_cast<int64_t>(idx->size()) != n) return false;
  for (int64_t v : *idx)
    if (v < 0 || v >= n) return false;
  if (static_cast<int64_t>(std::set<int64_t>(idx->begin(), idx->end()).size()) != n)
    return false;
  const Json& dist = p.at("distances");
  __int128 length = 0;
  for (int64_t i = 0; i < n; ++i)
    length += dist[uz((*idx)[uz(i)])][uz((*idx)[uz((i + 1) % n)])].get<int64_t>();
  return length <= p.at("target_length").get<int64_t>();
}

bool check_hamiltonian_cycle(const Json& p, const Json& c) {
  auto idx = as_ints(c);
  if (!idx) return false;
  const int64_t n = p.at("num_nodes").get<int64_t>();
  const bool directed = p.at("directed").get<bool>();
  std::vector<int64_t> path = *idx;
  if (static_cast<int64_t>(path.size()) == n + 1) {
    if (path.front() != path.back()) return false;
    path.pop_back();
  }
  if (static_cast<int64_t>(path.size()) != n) return false;
  if (std::set<int64_t>(path.begin(), path.end()).size() != path.size()) return false;
  for (int64_t v : path)
    if (v < 0 || v >= n) return false;
  auto edges = payload_edges(p.at("edges"));
  for (int64_t i = 0; i < n; ++i) {
    int64_t u = path[uz(i)], v = path[uz((i + 1) % n)];
    bool present = directed ? edges.count({u, v}) != 0
                            : edges.count({std::min(u, v), std::max(u, v)}) != 0;
    if (!present) return false;
  }
  return true;
}

bool check_three_col(const Json& p, const Json& c) {
  auto colors = as_ints(c);
  const int64_t n = p.at("num_nodes").get<int64_t>();
  if (!colors || static_cast<int64_t>(colors->size()) != n) return false;
  for (int64_t col : *colors)
    if (col < 0 || col > 2) return false;
  for (const auto& e : p.at("edges"))
    if ((*colors)[uz(e[0].get<int64_t>())] == (*colors)[uz(e[1].get<int64_t>())])
      return false;
  return true;
}

bool check_bandwidth(const Json& p, const Json& c) {
  auto layout = as_ints(c);
  const int64_t n = p.at("num_nodes").get<int64_t>();
  if (!layout || static_cast<int64_t>(layout->size()) != n) return false;
  std::vector<char> used(uz(n), 0);
  for (int64_t f : *layout) {
    if (f < 0 || f >= n || used[uz(f)]) return false;
    used[uz(f)] = 1;
  }
  const int64_t bw = p.at("bandwidth").get<int64_t>();
  for (const auto& e : p.at("edges"))
    if (std::llabs((*layout)[uz(e[0].get<int64_t>())] -
                   (*layout)[uz(e[1].get<int64_t>())]) > bw)
      return false;
  return true;
}

bool check_max_leaf_span_tree(const Json& p, const Json& c) {
  auto parent = as_ints(c);
  const int64_t n = p.at("num_nodes").get<int64_t>();
  if (!parent || static_cast<int64_t>(parent->size()) != n) return false;
  auto edges = payload_edges(p.at("edges"));
  int64_t root = -1, roots = 0;
  for (int64_t v = 0; v < n; ++v) {
    int64_t pa = (*parent)[uz(v)];
    if (pa == -1) {
      ++roots;
      root = v;
      continue;
    }
    if (pa < 0 || pa >= n || pa == v ||
        !edges.count({std::min(v, pa), std::max(v, pa)}))
      return false;
  }
  if (roots != 1) return false;
  std::vector<std::vector<int64_t>> children(uz(n));
  for (int64_t v = 0; v < n; ++v)
    if ((*parent)[uz(v)] != -1) children[uz((*parent)[uz(v)])].push_back(v);
  std::vector<int64_t> stack{root};
  std::vector<char> reached(uz(n), 0);
  reached[uz(root)] = 1;
  int64_t count = 1;
  while (!stack.empty()) {
    int64_t v = stack.back();
    stack.pop_back();
    for (int64_t ch : children[uz(v)]) {
      if (reached[uz(ch)]) continue;
      reached[uz(ch)] = 1;
      ++count;
      stack.push_back(ch);
    }
  }
  if (count != n) return false;
  int64_t leaves = 0;
  for (int64_t v = 0; v < n; ++v) {
    int64_t degree = static_cast<int64_t>(children[uz(v)].size()) +
                     ((*parent)[uz(v)] != -1 ? 1 : 0);
    if (degree == 1) ++leaves;
  }
  return leaves >= p.at("target_leaves").get<int64_t>();
}

bool check_qde(const Json& p, const Json& c) {
  auto xy = as_ints(c);
  if (!xy || xy->size() != 2) return false;
  const int64_t x = (*xy)[0], y = (*xy)[1];
  if (x <= 0 || y <= 0) return false;
  if (x > 3'037'000'499LL) return false;  // x^2 must stay within 64 bits
  const __int128 lhs = static_cast<__int128>(p.at("a").get<int64_t>()) * (x * x) +
                       static_cast<__int128>(p.at("b").get<int64_t>()) * y;
  return lhs == p.at("c").get<int64_t>();
}

bool check_quadratic_congruences(const Json& p, const Json& c) {
  auto xv = as_int(c);
  if (!xv) return false;
  const int64_t x = *xv;
  if (x <= 0 || x >= p.at("c").get<int64_t>()) return false;
  return static_cast<__int128>(x) * x % p.at("b").get<int64_t>() ==
         p.at("a").get<int64_t>();
}

bool check_partition(const Json& p, const Json& c) {
  auto labels = as_ints(c);
  const Json& sizes = p.at("sizes");
  if (!labels || labels->size() != sizes.size()) return false;
  for (int64_t l : *labels)
    if (l != 0 && l != 1) return false;
  __int128 sums[2] = {0, 0};
  for (size_t i = 0; i < labels->size(); ++i)
    sums[(*labels)[i]] += sizes[i].get<int64_t>();
  return sums[0] == sums[1];
}

bool check_subset_sum(const Json& p, const Json& c) {
  auto idx = as_ints(c);
  if (!idx) return false;
  const Json& sizes = p.at("sizes");
  std::set<int64_t> chosen;
  for (int64_t i : *idx)
    if (i < 0 || i >= static_cast<int64_t>(sizes.size()) || !chosen.insert(i).second)
      return false;
  __int128 sum = 0;
  for (int64_t i : chosen) sum += sizes[uz(i)].get<int64_t>();
  return sum == p.at("target").get<int64_t>();
}

bool check_min_sum_squares(const Json& p, const Json& c) {
  auto idx = as_ints(c);
  const Json& sizes = p.at("sizes");
  if (!idx || idx->size() != sizes.size()) return false;
  const int64_t k = p.at("k").get<int64_t>();
  for (int64_t s : *idx)
    if (s < 0 || s >= k) return false;
  std::vector<__int128> loads(uz(k), 0);
  for (size_t i = 0; i < idx->size(); ++i)
    loads[uz((*idx)[i])] += sizes[i].get<int64_t>();
  __int128 total = 0;
  for (__int128 load : loads) total += load * load;
  return total <= p.at("J").get<int64_t>();
}

bool check_bin_packing(const Json& p, const Json& c) {
  auto idx = as_ints(c);
  const Json& sizes = p.at("sizes");
  if (!idx || idx->size() != sizes.size()) return false;
  const int64_t k = p.at("num_bins").get<int64_t>();
  for (int64_t b : *idx)
    if (b < 0 || b >= k) return false;
  std::vector<__int128> totals(uz(k), 0);
  for (size_t i = 0; i < idx->size(); ++i)
    totals[uz((*idx)[i])] += sizes[i].get<int64_t>();
  const int64_t capacity = p.at("bin_capacity").get<int64_t>();
  for (__int128 t : totals)
    if (t > capacity) return false;
  return true;
}

bool check_superstring(const Json& p, const Json& c) {
  auto w = as_str(c);
  if (!w || static_cast<int64_t>(w->size()) > p.at("max_length").get<int64_t>())
    return false;
  for (const auto& sj : p.at("strings"))
    if (w->find(sj.get<std::string>()) == std::string::npos) return false;
  return true;
}

bool check_betweenness(const Json& p, const Json& c) {
  auto f = as_ints(c);
  const int64_t n = p.at("num_elements").get<int64_t>();
  if (!f || static_cast<int64_t>(f->size()) != n) return false;
  std::vector<char> used(uz(n), 0);
  for (int64_t v : *f) {
    if (v < 0 || v >= n || used[uz(v)]) return false;
    used[uz(v)] = 1;
  }
  for (const auto& tj : p.at("triples")) {
    const int64_t fa = (*f)[uz(tj[0].get<int64_t>())];
    const int64_t fb = (*f)[uz(tj[1].get<int64_t>())];
    const int64_t fc = (*f)[uz(tj[2].get<int64_t>())];
    if (!((fa < fb && fb < fc) || (fc < fb && fb < fa))) return false;
  }
  return true;
}

bool check_clustering(const Json& p, const Json& c) {
  auto labels = as_ints(c);
  const int64_t n = p.at("num_elements").get<int64_t>();
  if (!labels || static_cast<int64_t>(labels->size()) != n) return false;
  for (int64_t l : *labels)
    if (l < 0 || l > 2) return false;
  const Json& dist = p.at("distances");
  const int64_t bound = p.at("B").get<int64_t>();
  for (int64_t u = 0; u < n; ++u)
    for (int64_t v = u + 1; v < n; ++v)
      if ((*labels)[uz(u)] == (*labels)[uz(v)] &&
          dist[uz(u)][uz(v)].get<int64_t>() > bound)
        return false;
  return true;
}

}  // namespace

bool check_solution(const Instance& inst, const SolutionJson& candidate) {
  try {
    switch (inst.problem) {
      case Problem::three_sat: return check_three_sat(inst.payload, candidate);
      case Problem::vertex_cover: return check_vertex_cover(inst.payload, candidate);
      case Problem::three_dm: return check_three_dm(inst.payload, candidate);
      case Problem::tsp: return check_tsp(inst.payload, candidate);
      case Problem::hamiltonian_cycle:
        return check_hamiltonian_cycle(inst.payload, candidate);
      case Problem::three_col: return check_three_col(inst.payload, candidate);
      case Problem::bin_packing: return check_bin_packing(inst.payload, candidate);
      case Problem::max_leaf_span_tree:
        return check_max_leaf_span_tree(inst.payload, candidate);
      case Problem::qde: return check_qde(inst.payload, candidate);
      case Problem::min_sum_squares:
        return check_min_sum_squares(inst.payload, candidate);
      case Problem::superstring: return check_superstring(inst.payload, candidate);
      case Problem::bandwidth: return check_bandwidth(inst.payload, candidate);
      case Problem::clique: return check_clique(inst.payload, candidate);
      case Problem::independent_set:
        return check_independent_set(inst.payload, candidate);
      case Problem::dominating_set:
        return check_dominating_set(inst.payload, candidate);
      case Problem::set_splitting:
        return check_set_splitting(inst.payload, candidate);
      case Problem::set_packing: return check_set_packing(inst.payload, candidate);
      case Problem::x3c: return check_x3c(inst.payload, candidate);
      case Problem::minimum_cover:
        return check_minimum_cover(inst.payload, candidate);
      case Problem::partition: return check_partition(inst.payload, candidate);
      case Problem::subset_sum: return check_subset_sum(inst.payload, candidate);
      case Problem::hitting_string:
        return check_hitting_string(inst.payload, candidate);
      case Problem::quadratic_congruences:
        return check_quadratic_congruences(inst.payload, candidate);
      case Problem::betweenness: return check_betweenness(inst.payload, candidate);
      case Problem::clustering: return check_clustering(inst.payload, candidate);
    }
  } catch (const Json::exception&) {
    return false;  // malformed payload can never certify a candidate
  }
  return false;
}

}  // namespace nppc::oracle
