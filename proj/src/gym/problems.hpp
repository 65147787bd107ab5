#pragma once

// Internal gym surface: per-problem generators/verifiers/validators plus the
// helpers they share. Everything here is private to src/gym.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nppc/config.hpp"
#include "nppc/error.hpp"
#include "nppc/instance.hpp"
#include "nppc/outcome.hpp"
#include "nppc/rng.hpp"

namespace nppc::gym::detail {

// Rejection-sampling steps try this often before giving up on the config.
inline constexpr int kRetryBudget = 1000;

// Schema bounds. Counts cover nodes/elements/clauses/etc.; item values cover
// sizes, distances and similar weights; kMaxValue covers derived magnitudes
// (targets, J, the c of a Diophantine equation).
inline constexpr int64_t kMaxCount = 1'000'000;
inline constexpr int64_t kMaxItemValue = 1'000'000'000;
inline constexpr int64_t kMaxValue = 100'000'000'000'000'000;

[[noreturn]] void schema_fail(const std::string& where, const std::string& why);
[[noreturn]] void infeasible(const std::string& why);

// ---- payload accessors (instance side; throw schema_violation) ----
const Json& req_field(const Json& payload, const char* key);
int64_t req_int(const Json& payload, const char* key, int64_t lo, int64_t hi);
bool req_bool(const Json& payload, const char* key);
const Json& req_array(const Json& payload, const char* key);
std::string req_string(const Json& payload, const char* key);
int64_t as_checked_int(const Json& v, const std::string& where, int64_t lo,
                       int64_t hi);

// ---- candidate accessors (solution side; lenient, never throw) ----
std::optional<std::vector<int64_t>> cand_int_list(const Json& c);
std::optional<std::vector<bool>> cand_bool_list(const Json& c);
std::optional<std::string> cand_string(const Json& c);
std::optional<int64_t> cand_int(const Json& c);

// ---- graph / list utilities ----
using Edge = std::pair<int64_t, int64_t>;  // u < v for undirected graphs

std::vector<Edge> undirected_pairs(int64_t n);
Json edges_json(std::vector<Edge> edges);  // sorted [[u,v],...]
std::vector<Edge> edges_of(const Json& arr);
Json int_list_json(const std::vector<int64_t>& v);
std::vector<int64_t> int_list(const Json& arr);

// Uniform sample of t distinct entries from the pool (consumes the pool).
std::vector<Edge> sample_edges(std::vector<Edge> pool, size_t t, Rng& rng);

// n distinct values drawn from [0, limit).
std::vector<int64_t> sample_indices(int64_t limit, size_t n, Rng& rng);

// Uniform composition of total into parts positive integers.
std::vector<int64_t> random_composition(int64_t total, int64_t parts, Rng& rng);

// Canonical edge-list check: entries [u, v] over nodes 0..n-1, strictly
// ascending lexicographic order (so no duplicates). Undirected lists require
// u < v; directed lists only u != v.
void validate_edges(const Json& arr, int64_t n, const char* key, bool directed);

// Symmetric n x n matrix, zero diagonal, off-diagonal entries in [1, max_entry].
void validate_matrix(const Json& arr, int64_t n, int64_t max_entry,
                     const char* key);

// Subset entries in [0, n), strictly ascending (distinct, sorted).
void validate_subset(const Json& arr, int64_t n, const std::string& where,
                     bool nonempty);

Json matrix_json(const std::vector<std::vector<int64_t>>& m);
std::vector<std::vector<int64_t>> matrix_of(const Json& arr);

// ---- outcomes ----
VerifyOutcome ok_outcome();
VerifyOutcome verification_error(std::string message);
VerifyOutcome problem_error(Problem p, int code);  // message from the error table

// ---- descriptor text (descriptions.cpp) ----
struct ProblemText {
  const char* display_name;
  const char* description;
  const char* instance_schema;
  const char* solution_schema;
};
const ProblemText& problem_text(Problem p);
const std::vector<std::string>& error_descriptions(Problem p);

// ---- per-problem ops ----
struct Ops {
  Json (*generate)(const GenConfig&, uint64_t seed, SolutionJson& planted);
  VerifyOutcome (*verify)(const Json& payload, const Json& candidate);
  void (*validate)(const Json& payload);
};
const Ops& ops(Problem p);

// Family entry points, one triple per problem.
#define NPPC_DECLARE_PROBLEM(ident)                                         \
  Json gen_##ident(const GenConfig&, uint64_t seed, SolutionJson& planted); \
  VerifyOutcome verify_##ident(const Json& payload, const Json& candidate); \
  void validate_##ident(const Json& payload);

NPPC_DECLARE_PROBLEM(three_sat)
NPPC_DECLARE_PROBLEM(vertex_cover)
NPPC_DECLARE_PROBLEM(three_dm)
NPPC_DECLARE_PROBLEM(tsp)
NPPC_DECLARE_PROBLEM(hamiltonian_cycle)
NPPC_DECLARE_PROBLEM(three_col)
NPPC_DECLARE_PROBLEM(bin_packing)
NPPC_DECLARE_PROBLEM(max_leaf_span_tree)
NPPC_DECLARE_PROBLEM(qde)
NPPC_DECLARE_PROBLEM(min_sum_squares)
NPPC_DECLARE_PROBLEM(superstring)
NPPC_DECLARE_PROBLEM(bandwidth)
NPPC_DECLARE_PROBLEM(clique)
NPPC_DECLARE_PROBLEM(independent_set)
NPPC_DECLARE_PROBLEM(dominating_set)
NPPC_DECLARE_PROBLEM(set_splitting)
NPPC_DECLARE_PROBLEM(set_packing)
NPPC_DECLARE_PROBLEM(x3c)
NPPC_DECLARE_PROBLEM(minimum_cover)
NPPC_DECLARE_PROBLEM(partition)
NPPC_DECLARE_PROBLEM(subset_sum)
NPPC_DECLARE_PROBLEM(hitting_string)
NPPC_DECLARE_PROBLEM(quadratic_congruences)
NPPC_DECLARE_PROBLEM(betweenness)
NPPC_DECLARE_PROBLEM(clustering)

#undef NPPC_DECLARE_PROBLEM

}  // namespace nppc::gym::detail
