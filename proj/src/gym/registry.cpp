#include <array>
#include <string>
#include <vector>

#include "nppc/gym.hpp"
#include "nppc/ladder.hpp"
#include "problems.hpp"

namespace nppc::gym {

namespace {

std::vector<ProblemDescriptor> build_descriptors() {
  std::vector<ProblemDescriptor> out;
  out.reserve(kProblemCount);
  for (Problem p : all_problems()) {
    const detail::ProblemText& text = detail::problem_text(p);
    ProblemDescriptor d;
    d.id = p;
    d.name = problem_name(p);
    d.display_name = text.display_name;
    d.core = is_core(p);
    d.description = text.description;
    d.instance_schema = text.instance_schema;
    d.solution_schema = text.solution_schema;
    d.error_codes = detail::error_descriptions(p);
    out.push_back(std::move(d));
  }
  return out;
}

// Generators accept exactly the parameter names their builtin ladder uses.
void check_config_keys(Problem p, const GenConfig& config) {
  const GenConfig& reference = builtin_ladders().at(p).at(1);
  for (const auto& [key, value] : config.params) {
    (void)value;
    if (!reference.params.count(key))
      fail(Errc::config_mismatch,
           "unknown parameter '" + key + "' for " + problem_name(p));
  }
  for (const auto& [key, value] : reference.params) {
    (void)value;
    if (!config.params.count(key))
      fail(Errc::config_mismatch,
           "missing parameter '" + key + "' for " + problem_name(p));
  }
}

}  // namespace

const std::vector<ProblemDescriptor>& list_problems() {
  static const std::vector<ProblemDescriptor> table = build_descriptors();
  return table;
}

const ProblemDescriptor& descriptor(Problem p) {
  const auto& table = list_problems();
  const size_t i = static_cast<size_t>(p);
  if (i >= table.size()) fail(Errc::unknown_problem, "unknown problem id");
  return table[i];
}

GeneratedPair generate_instance(Problem p, const GenConfig& config, uint64_t seed) {
  check_config_keys(p, config);
  const detail::Ops& o = detail::ops(p);
  GeneratedPair pair;
  pair.instance.problem = p;
  pair.instance.level = 0;
  pair.instance.seed = seed;
  pair.instance.payload = o.generate(config, seed, pair.planted);
  o.validate(pair.instance.payload);  // generators must meet their own schema
  return pair;
}

VerifyOutcome verify_solution(const Instance& inst, const SolutionJson& candidate) {
  try {
    const detail::Ops& o = detail::ops(inst.problem);
    o.validate(inst.payload);
    return o.verify(inst.payload, candidate);
  } catch (const std::exception& e) {
    return VerifyOutcome{false,
                         ErrorCode{ErrorCategory::verification_error, 0},
                         std::string("instance rejected: ") + e.what()};
  }
}

void validate_instance(const Instance& inst) {
  detail::ops(inst.problem).validate(inst.payload);
}

}  // namespace nppc::gym

namespace nppc::gym::detail {

const Ops& ops(Problem p) {
  static const std::array<Ops, kProblemCount> table = {{
      {gen_three_sat, verify_three_sat, validate_three_sat},
      {gen_vertex_cover, verify_vertex_cover, validate_vertex_cover},
      {gen_three_dm, verify_three_dm, validate_three_dm},
      {gen_tsp, verify_tsp, validate_tsp},
      {gen_hamiltonian_cycle, verify_hamiltonian_cycle, validate_hamiltonian_cycle},
      {gen_three_col, verify_three_col, validate_three_col},
      {gen_bin_packing, verify_bin_packing, validate_bin_packing},
      {gen_max_leaf_span_tree, verify_max_leaf_span_tree, validate_max_leaf_span_tree},
      {gen_qde, verify_qde, validate_qde},
      {gen_min_sum_squares, verify_min_sum_squares, validate_min_sum_squares},
      {gen_superstring, verify_superstring, validate_superstring},
      {gen_bandwidth, verify_bandwidth, validate_bandwidth},
      {gen_clique, verify_clique, validate_clique},
      {gen_independent_set, verify_independent_set, validate_independent_set},
      {gen_dominating_set, verify_dominating_set, validate_dominating_set},
      {gen_set_splitting, verify_set_splitting, validate_set_splitting},
      {gen_set_packing, verify_set_packing, validate_set_packing},
      {gen_x3c, verify_x3c, validate_x3c},
      {gen_minimum_cover, verify_minimum_cover, validate_minimum_cover},
      {gen_partition, verify_partition, validate_partition},
      {gen_subset_sum, verify_subset_sum, validate_subset_sum},
      {gen_hitting_string, verify_hitting_string, validate_hitting_string},
      {gen_quadratic_congruences, verify_quadratic_congruences,
       validate_quadratic_congruences},
      {gen_betweenness, verify_betweenness, validate_betweenness},
      {gen_clustering, verify_clustering, validate_clustering},
  }};
  const size_t i = static_cast<size_t>(p);
  if (i >= table.size()) fail(Errc::unknown_problem, "unknown problem id");
  return table[i];
}

}  // namespace nppc::gym::detail
