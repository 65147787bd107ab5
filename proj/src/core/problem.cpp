#include "nppc/problem.hpp"

#include <array>
#include <map>

#include "nppc/error.hpp"

namespace nppc {

namespace {

struct ProblemNames {
  Problem id;
  const char* canonical;
  std::vector<const char*> aliases;  // published long forms
};

const std::array<ProblemNames, kProblemCount>& name_table() {
  static const std::array<ProblemNames, kProblemCount> table{{
      {Problem::three_sat,
       "3SAT",
       {"3-Satisfiability (3SAT)", "3-Satisfiability (3-SAT)", "3-SAT"}},
      {Problem::vertex_cover, "Vertex Cover", {}},
      {Problem::three_dm, "3DM", {"3-Dimensional Matching (3DM)"}},
      {Problem::tsp, "TSP", {"Travelling Salesman (TSP)", "Travelling Salesman"}},
      {Problem::hamiltonian_cycle, "Hamiltonian Cycle", {}},
      {Problem::three_col,
       "3-COL",
       {"Graph 3-Colourability (3-COL)", "Graph 3-Colourability"}},
      {Problem::bin_packing, "Bin Packing", {}},
      {Problem::max_leaf_span_tree,
       "Max Leaf Spanning Tree",
       {"Maximum Leaf Spanning Tree", "Max Leaf Span Tree"}},
      {Problem::qde,
       "QDE",
       {"Quadratic Diophantine Equations (QDE)", "Quadratic Diophantine Equations"}},
      {Problem::min_sum_squares,
       "Min Sum of Squares",
       {"Minimum Sum of Squares", "Min Sum Square"}},
      {Problem::superstring, "Superstring", {"Shortest Common Superstring"}},
      {Problem::bandwidth, "Bandwidth", {}},
      {Problem::clique, "Clique", {}},
      {Problem::independent_set, "Independent Set", {}},
      {Problem::dominating_set, "Dominating Set", {}},
      {Problem::set_splitting, "Set Splitting", {}},
      {Problem::set_packing, "Set Packing", {}},
      {Problem::x3c, "X3C", {"Exact Cover by 3-Sets (X3C)"}},
      {Problem::minimum_cover, "Minimum Cover", {}},
      {Problem::partition, "Partition", {}},
      {Problem::subset_sum, "Subset Sum", {}},
      {Problem::hitting_string, "Hitting String", {}},
      {Problem::quadratic_congruences, "Quadratic Congruences", {}},
      {Problem::betweenness, "Betweenness", {}},
      {Problem::clustering, "Clustering", {}},
  }};
  return table;
}

const std::map<std::string, Problem>& lookup_table() {
  static const std::map<std::string, Problem> table = [] {
    std::map<std::string, Problem> t;
    for (const auto& row : name_table()) {
      t.emplace(row.canonical, row.id);
      for (const char* alias : row.aliases) t.emplace(alias, row.id);
    }
    return t;
  }();
  return table;
}

}  // namespace

const std::vector<Problem>& all_problems() {
  static const std::vector<Problem> order = [] {
    std::vector<Problem> v;
    v.reserve(kProblemCount);
    for (const auto& row : name_table()) v.push_back(row.id);
    return v;
  }();
  return order;
}

const std::string& problem_name(Problem p) {
  static const std::map<Problem, std::string> names = [] {
    std::map<Problem, std::string> t;
    for (const auto& row : name_table()) t.emplace(row.id, row.canonical);
    return t;
  }();
  return names.at(p);
}

bool is_core(Problem p) {
  return static_cast<int>(p) < kCoreProblemCount;
}

std::optional<Problem> try_parse_problem(const std::string& name) {
  const auto& table = lookup_table();
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

Problem parse_problem(const std::string& name) {
  auto p = try_parse_problem(name);
  if (!p) fail(Errc::unknown_problem, "unknown problem: " + name);
  return *p;
}

}  // namespace nppc
