#include <algorithm>

#include "problems.hpp"

namespace nppc::gym::detail {

void schema_fail(const std::string& where, const std::string& why) {
  fail(Errc::schema_violation, where + ": " + why);
}

void infeasible(const std::string& why) {
  fail(Errc::infeasible_config, why);
}

const Json& req_field(const Json& payload, const char* key) {
  if (!payload.is_object()) schema_fail("payload", "not a JSON object");
  auto it = payload.find(key);
  if (it == payload.end()) schema_fail(key, "missing required field");
  return *it;
}

int64_t as_checked_int(const Json& v, const std::string& where, int64_t lo,
                       int64_t hi) {
  if (!v.is_number_integer() && !v.is_number_unsigned())
    schema_fail(where, "not an integer");
  int64_t x = v.get<int64_t>();
  if (x < lo || x > hi)
    schema_fail(where, "value " + std::to_string(x) + " outside [" +
                           std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return x;
}

int64_t req_int(const Json& payload, const char* key, int64_t lo, int64_t hi) {
  return as_checked_int(req_field(payload, key), key, lo, hi);
}

bool req_bool(const Json& payload, const char* key) {
  const Json& v = req_field(payload, key);
  if (!v.is_boolean()) schema_fail(key, "not a boolean");
  return v.get<bool>();
}

const Json& req_array(const Json& payload, const char* key) {
  const Json& v = req_field(payload, key);
  if (!v.is_array()) schema_fail(key, "not an array");
  return v;
}

std::string req_string(const Json& payload, const char* key) {
  const Json& v = req_field(payload, key);
  if (!v.is_string()) schema_fail(key, "not a string");
  return v.get<std::string>();
}

std::optional<std::vector<int64_t>> cand_int_list(const Json& c) {
  if (!c.is_array()) return std::nullopt;
  std::vector<int64_t> out;
  out.reserve(c.size());
  for (const auto& v : c) {
    if (!v.is_number_integer() && !v.is_number_unsigned()) return std::nullopt;
    out.push_back(v.get<int64_t>());
  }
  return out;
}

std::optional<std::vector<bool>> cand_bool_list(const Json& c) {
  if (!c.is_array()) return std::nullopt;
  std::vector<bool> out;
  out.reserve(c.size());
  for (const auto& v : c) {
    if (!v.is_boolean()) return std::nullopt;
    out.push_back(v.get<bool>());
  }
  return out;
}

std::optional<std::string> cand_string(const Json& c) {
  if (!c.is_string()) return std::nullopt;
  return c.get<std::string>();
}

std::optional<int64_t> cand_int(const Json& c) {
  if (!c.is_number_integer() && !c.is_number_unsigned()) return std::nullopt;
  return c.get<int64_t>();
}

std::vector<Edge> undirected_pairs(int64_t n) {
  std::vector<Edge> pairs;
  pairs.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int64_t u = 0; u < n; ++u)
    for (int64_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

Json edges_json(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  Json arr = Json::array();
  for (const auto& [u, v] : edges) arr.push_back(Json::array({u, v}));
  return arr;
}

std::vector<Edge> edges_of(const Json& arr) {
  std::vector<Edge> edges;
  edges.reserve(arr.size());
  for (const auto& e : arr)
    edges.emplace_back(e[0].get<int64_t>(), e[1].get<int64_t>());
  return edges;
}

Json int_list_json(const std::vector<int64_t>& v) {
  Json arr = Json::array();
  for (int64_t x : v) arr.push_back(x);
  return arr;
}

std::vector<int64_t> int_list(const Json& arr) {
  std::vector<int64_t> v;
  v.reserve(arr.size());
  for (const auto& x : arr) v.push_back(x.get<int64_t>());
  return v;
}

std::vector<Edge> sample_edges(std::vector<Edge> pool, size_t t, Rng& rng) {
  if (t > pool.size()) t = pool.size();
  rng.partial_shuffle(pool, t);
  pool.resize(t);
  return pool;
}

std::vector<int64_t> sample_indices(int64_t limit, size_t n, Rng& rng) {
  std::vector<int64_t> all(static_cast<size_t>(limit));
  for (int64_t i = 0; i < limit; ++i) all[static_cast<size_t>(i)] = i;
  rng.partial_shuffle(all, n);
  all.resize(n);
  return all;
}

std::vector<int64_t> random_composition(int64_t total, int64_t parts, Rng& rng) {
  // parts distinct cut points over [1, total-1] give positive parts.
  if (parts <= 0 || total < parts)
    infeasible("cannot split " + std::to_string(total) + " into " +
               std::to_string(parts) + " positive parts");
  std::vector<int64_t> cuts(static_cast<size_t>(total - 1));
  for (int64_t i = 0; i < total - 1; ++i) cuts[static_cast<size_t>(i)] = i + 1;
  rng.partial_shuffle(cuts, static_cast<size_t>(parts - 1));
  cuts.resize(static_cast<size_t>(parts - 1));
  std::sort(cuts.begin(), cuts.end());
  std::vector<int64_t> out;
  out.reserve(static_cast<size_t>(parts));
  int64_t prev = 0;
  for (int64_t c : cuts) {
    out.push_back(c - prev);
    prev = c;
  }
  out.push_back(total - prev);
  return out;
}

void validate_edges(const Json& arr, int64_t n, const char* key, bool directed) {
  if (!arr.is_array()) schema_fail(key, "not an array");
  Edge prev{-1, -1};
  size_t i = 0;
  for (const auto& e : arr) {
    std::string where = std::string(key) + "[" + std::to_string(i++) + "]";
    if (!e.is_array() || e.size() != 2)
      schema_fail(where, "edge must be a pair [u, v]");
    int64_t u = as_checked_int(e[0], where, 0, n - 1);
    int64_t v = as_checked_int(e[1], where, 0, n - 1);
    if (directed ? (u == v) : (u >= v))
      schema_fail(where, directed ? "self-loops are not allowed"
                                  : "undirected edges require u < v");
    Edge cur{u, v};
    if (!(prev < cur)) schema_fail(where, "edges must be strictly ascending");
    prev = cur;
  }
}

void validate_matrix(const Json& arr, int64_t n, int64_t max_entry,
                     const char* key) {
  if (!arr.is_array() || static_cast<int64_t>(arr.size()) != n)
    schema_fail(key, "expected " + std::to_string(n) + " rows");
  for (int64_t r = 0; r < n; ++r) {
    const Json& row = arr[static_cast<size_t>(r)];
    std::string rw = std::string(key) + "[" + std::to_string(r) + "]";
    if (!row.is_array() || static_cast<int64_t>(row.size()) != n)
      schema_fail(rw, "expected " + std::to_string(n) + " columns");
    for (int64_t c = 0; c < n; ++c) {
      std::string where = rw + "[" + std::to_string(c) + "]";
      int64_t x = as_checked_int(row[static_cast<size_t>(c)], where,
                                 r == c ? 0 : 1, r == c ? 0 : max_entry);
      if (r < c) {
        int64_t mirror = as_checked_int(arr[static_cast<size_t>(c)][static_cast<size_t>(r)],
                                        where, 1, max_entry);
        if (mirror != x) schema_fail(where, "matrix must be symmetric");
      }
    }
  }
}

void validate_subset(const Json& arr, int64_t n, const std::string& where,
                     bool nonempty) {
  if (!arr.is_array()) schema_fail(where, "not an array");
  if (nonempty && arr.empty()) schema_fail(where, "subset must not be empty");
  int64_t prev = -1;
  for (const auto& v : arr) {
    int64_t x = as_checked_int(v, where, 0, n - 1);
    if (x <= prev) schema_fail(where, "subset entries must be strictly ascending");
    prev = x;
  }
}

Json matrix_json(const std::vector<std::vector<int64_t>>& m) {
  Json rows = Json::array();
  for (const auto& row : m) rows.push_back(int_list_json(row));
  return rows;
}

std::vector<std::vector<int64_t>> matrix_of(const Json& arr) {
  std::vector<std::vector<int64_t>> m;
  m.reserve(arr.size());
  for (const auto& row : arr) m.push_back(int_list(row));
  return m;
}

VerifyOutcome ok_outcome() { return VerifyOutcome{true, std::nullopt, ""}; }

VerifyOutcome verification_error(std::string message) {
  return VerifyOutcome{false,
                       ErrorCode{ErrorCategory::verification_error, 0},
                       std::move(message)};
}

VerifyOutcome problem_error(Problem p, int code) {
  const auto& texts = error_descriptions(p);
  std::string message = (code >= 1 && code <= static_cast<int>(texts.size()))
                            ? texts[static_cast<size_t>(code - 1)]
                            : "semantic check failed";
  return VerifyOutcome{false, ErrorCode{ErrorCategory::problem_error, code},
                       std::move(message)};
}

}  // namespace nppc::gym::detail
