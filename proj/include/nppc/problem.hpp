#pragma once

#include <optional>
#include <string>
#include <vector>

namespace nppc {

enum class Problem {
  three_sat,
  vertex_cover,
  three_dm,
  tsp,
  hamiltonian_cycle,
  three_col,
  bin_packing,
  max_leaf_span_tree,
  qde,
  min_sum_squares,
  superstring,
  bandwidth,
  clique,
  independent_set,
  dominating_set,
  set_splitting,
  set_packing,
  x3c,
  minimum_cover,
  partition,
  subset_sum,
  hitting_string,
  quadratic_congruences,
  betweenness,
  clustering,
};

inline constexpr int kProblemCount = 25;
inline constexpr int kCoreProblemCount = 12;

// Core problems first, in the published order, then the extension set.
const std::vector<Problem>& all_problems();

// Canonical short name ("3SAT", "Vertex Cover", ...).
const std::string& problem_name(Problem p);

bool is_core(Problem p);

// Accepts the canonical short name or a published long form
// ("3-Satisfiability (3SAT)", "Travelling Salesman (TSP)", ...).
std::optional<Problem> try_parse_problem(const std::string& name);
Problem parse_problem(const std::string& name);  // throws unknown_problem

}  // namespace nppc
