#include "nppc/ladder.hpp"

#include <initializer_list>

#include "nppc/error.hpp"

namespace nppc {

namespace {

GenConfig cfg(std::initializer_list<std::pair<const char*, ConfigValue>> kv) {
  GenConfig c;
  for (const auto& [name, value] : kv) c.params.emplace(name, value);
  return c;
}

constexpr int64_t operator""_i(unsigned long long v) {
  return static_cast<int64_t>(v);
}

std::map<Problem, DifficultyLadder> build_builtin() {
  std::map<Problem, DifficultyLadder> t;

  t[Problem::three_sat] = {
      {1, cfg({{"num_variables", 5_i}, {"num_clauses", 5_i}})},
      {2, cfg({{"num_variables", 15_i}, {"num_clauses", 15_i}})},
      {3, cfg({{"num_variables", 20_i}, {"num_clauses", 20_i}})},
      {4, cfg({{"num_variables", 25_i}, {"num_clauses", 25_i}})},
      {5, cfg({{"num_variables", 30_i}, {"num_clauses", 30_i}})},
      {6, cfg({{"num_variables", 40_i}, {"num_clauses", 40_i}})},
      {7, cfg({{"num_variables", 50_i}, {"num_clauses", 50_i}})},
      {8, cfg({{"num_variables", 60_i}, {"num_clauses", 60_i}})},
      {9, cfg({{"num_variables", 70_i}, {"num_clauses", 70_i}})},
      {10, cfg({{"num_variables", 80_i}, {"num_clauses", 80_i}})},
  };

  t[Problem::vertex_cover] = {
      {1, cfg({{"num_nodes", 4_i}, {"cover_size", 2_i}})},
      {2, cfg({{"num_nodes", 8_i}, {"cover_size", 3_i}})},
      {3, cfg({{"num_nodes", 12_i}, {"cover_size", 4_i}})},
      {4, cfg({{"num_nodes", 16_i}, {"cover_size", 5_i}})},
      {5, cfg({{"num_nodes", 20_i}, {"cover_size", 10_i}})},
      {6, cfg({{"num_nodes", 24_i}, {"cover_size", 12_i}})},
      {7, cfg({{"num_nodes", 28_i}, {"cover_size", 14_i}})},
      {8, cfg({{"num_nodes", 32_i}, {"cover_size", 16_i}})},
      {9, cfg({{"num_nodes", 36_i}, {"cover_size", 18_i}})},
      {10, cfg({{"num_nodes", 40_i}, {"cover_size", 20_i}})},
  };

  t[Problem::clique] = {
      {1, cfg({{"num_nodes", 4_i}, {"clique_size", 2_i}})},
      {2, cfg({{"num_nodes", 8_i}, {"clique_size", 4_i}})},
      {3, cfg({{"num_nodes", 12_i}, {"clique_size", 6_i}})},
      {4, cfg({{"num_nodes", 14_i}, {"clique_size", 7_i}})},
      {5, cfg({{"num_nodes", 16_i}, {"clique_size", 8_i}})},
      {6, cfg({{"num_nodes", 18_i}, {"clique_size", 9_i}})},
      {7, cfg({{"num_nodes", 20_i}, {"clique_size", 10_i}})},
      {8, cfg({{"num_nodes", 22_i}, {"clique_size", 11_i}})},
      {9, cfg({{"num_nodes", 24_i}, {"clique_size", 12_i}})},
      {10, cfg({{"num_nodes", 26_i}, {"clique_size", 13_i}})},
      {11, cfg({{"num_nodes", 28_i}, {"clique_size", 14_i}})},
      {12, cfg({{"num_nodes", 30_i}, {"clique_size", 15_i}})},
      {13, cfg({{"num_nodes", 40_i}, {"clique_size", 20_i}})},
  };

  t[Problem::independent_set] = {
      {1, cfg({{"num_nodes", 4_i}, {"ind_set_size", 2_i}})},
      {2, cfg({{"num_nodes", 8_i}, {"ind_set_size", 4_i}})},
      {3, cfg({{"num_nodes", 12_i}, {"ind_set_size", 6_i}})},
      {4, cfg({{"num_nodes", 16_i}, {"ind_set_size", 8_i}})},
      {5, cfg({{"num_nodes", 20_i}, {"ind_set_size", 10_i}})},
      {6, cfg({{"num_nodes", 24_i}, {"ind_set_size", 12_i}})},
      {7, cfg({{"num_nodes", 26_i}, {"ind_set_size", 13_i}})},
      {8, cfg({{"num_nodes", 28_i}, {"ind_set_size", 14_i}})},
      {9, cfg({{"num_nodes", 30_i}, {"ind_set_size", 15_i}})},
      {10, cfg({{"num_nodes", 32_i}, {"ind_set_size", 16_i}})},
      {11, cfg({{"num_nodes", 34_i}, {"ind_set_size", 17_i}})},
      {12, cfg({{"num_nodes", 36_i}, {"ind_set_size", 18_i}})},
      {13, cfg({{"num_nodes", 48_i}, {"ind_set_size", 24_i}})},
  };

  t[Problem::partition] = {
      {1, cfg({{"n", 2_i}, {"max_value", 1_i}})},
      {2, cfg({{"n", 4_i}, {"max_value", 40_i}})},
      {3, cfg({{"n", 10_i}, {"max_value", 100_i}})},
      {4, cfg({{"n", 20_i}, {"max_value", 200_i}})},
      {5, cfg({{"n", 30_i}, {"max_value", 300_i}})},
      {6, cfg({{"n", 40_i}, {"max_value", 400_i}})},
      {7, cfg({{"n", 50_i}, {"max_value", 500_i}})},
      {8, cfg({{"n", 55_i}, {"max_value", 550_i}})},
      {9, cfg({{"n", 60_i}, {"max_value", 600_i}})},
      {10, cfg({{"n", 65_i}, {"max_value", 650_i}})},
      {11, cfg({{"n", 70_i}, {"max_value", 700_i}})},
      {12, cfg({{"n", 75_i}, {"max_value", 750_i}})},
      {13, cfg({{"n", 80_i}, {"max_value", 800_i}})},
  };

  t[Problem::subset_sum] = {
      {1, cfg({{"num_elements", 5_i}, {"max_value", 100_i}})},
      {2, cfg({{"num_elements", 10_i}, {"max_value", 100_i}})},
      {3, cfg({{"num_elements", 20_i}, {"max_value", 200_i}})},
      {4, cfg({{"num_elements", 40_i}, {"max_value", 400_i}})},
      {5, cfg({{"num_elements", 80_i}, {"max_value", 800_i}})},
      {6, cfg({{"num_elements", 100_i}, {"max_value", 1000_i}})},
      {7, cfg({{"num_elements", 120_i}, {"max_value", 1200_i}})},
      {8, cfg({{"num_elements", 160_i}, {"max_value", 1000_i}})},
      {9, cfg({{"num_elements", 160_i}, {"max_value", 1600_i}})},
      {10, cfg({{"num_elements", 200_i}, {"max_value", 2000_i}})},
      {11, cfg({{"num_elements", 200_i}, {"max_value", 1000_i}})},
      {12, cfg({{"num_elements", 400_i}, {"max_value", 2000_i}})},
      {13, cfg({{"num_elements", 600_i}, {"max_value", 2000_i}})},
  };

  t[Problem::set_packing] = {
      {1, cfg({{"num_elements", 10_i}, {"num_subsets", 10_i}, {"num_disjoint_sets", 2_i}})},
      {2, cfg({{"num_elements", 40_i}, {"num_subsets", 40_i}, {"num_disjoint_sets", 8_i}})},
      {3, cfg({{"num_elements", 100_i}, {"num_subsets", 200_i}, {"num_disjoint_sets", 50_i}})},
      {4, cfg({{"num_elements", 100_i}, {"num_subsets", 400_i}, {"num_disjoint_sets", 30_i}})},
      {5, cfg({{"num_elements", 100_i}, {"num_subsets", 500_i}, {"num_disjoint_sets", 30_i}})},
      {6, cfg({{"num_elements", 100_i}, {"num_subsets", 600_i}, {"num_disjoint_sets", 30_i}})},
      {7, cfg({{"num_elements", 100_i}, {"num_subsets", 800_i}, {"num_disjoint_sets", 30_i}})},
      {8, cfg({{"num_elements", 100_i}, {"num_subsets", 1000_i}, {"num_disjoint_sets", 30_i}})},
      {9, cfg({{"num_elements", 200_i}, {"num_subsets", 400_i}, {"num_disjoint_sets", 60_i}})},
      {10, cfg({{"num_elements", 200_i}, {"num_subsets", 800_i}, {"num_disjoint_sets", 60_i}})},
      {11, cfg({{"num_elements", 400_i}, {"num_subsets", 1000_i}, {"num_disjoint_sets", 200_i}})},
  };

  t[Problem::set_splitting] = {
      {1, cfg({{"num_elements", 5_i}, {"num_subsets", 5_i}})},
      {2, cfg({{"num_elements", 10_i}, {"num_subsets", 10_i}})},
      {3, cfg({{"num_elements", 10_i}, {"num_subsets", 50_i}})},
      {4, cfg({{"num_elements", 10_i}, {"num_subsets", 100_i}})},
      {5, cfg({{"num_elements", 10_i}, {"num_subsets", 200_i}})},
      {6, cfg({{"num_elements", 100_i}, {"num_subsets", 100_i}})},
      {7, cfg({{"num_elements", 100_i}, {"num_subsets", 200_i}})},
      {8, cfg({{"num_elements", 10_i}, {"num_subsets", 500_i}})},
      {9, cfg({{"num_elements", 10_i}, {"num_subsets", 1000_i}})},
      {10, cfg({{"num_elements", 15_i}, {"num_subsets", 500_i}})},
      {11, cfg({{"num_elements", 20_i}, {"num_subsets", 500_i}})},
  };

  t[Problem::superstring] = {
      {1, cfg({{"n", 10_i}, {"k", 5_i}})},
      {2, cfg({{"n", 20_i}, {"k", 10_i}})},
      {3, cfg({{"n", 40_i}, {"k", 20_i}})},
      {4, cfg({{"n", 80_i}, {"k", 40_i}})},
      {5, cfg({{"n", 100_i}, {"k", 50_i}})},
      {6, cfg({{"n", 100_i}, {"k", 100_i}})},
      {7, cfg({{"n", 100_i}, {"k", 200_i}})},
      {8, cfg({{"n", 200_i}, {"k", 200_i}})},
      {9, cfg({{"n", 300_i}, {"k", 400_i}})},
      {10, cfg({{"n", 300_i}, {"k", 600_i}})},
  };

  t[Problem::qde] = {
      {1, cfg({{"low", 1_i}, {"high", 50_i}})},
      {2, cfg({{"low", 1_i}, {"high", 100_i}})},
      {3, cfg({{"low", 1_i}, {"high", 500_i}})},
      {4, cfg({{"low", 1_i}, {"high", 1000_i}})},
      {5, cfg({{"low", 1_i}, {"high", 5000_i}})},
      {6, cfg({{"low", 1_i}, {"high", 10000_i}})},
      {7, cfg({{"low", 1_i}, {"high", 50000_i}})},
      {8, cfg({{"low", 1_i}, {"high", 80000_i}})},
      {9, cfg({{"low", 1_i}, {"high", 100000_i}})},
      {10, cfg({{"low", 1_i}, {"high", 200000_i}})},
  };

  t[Problem::quadratic_congruences] = {
      {1, cfg({{"min_value", 1_i}, {"max_value", 100_i}})},
      {2, cfg({{"min_value", 1_i}, {"max_value", 1000_i}})},
      {3, cfg({{"min_value", 1_i}, {"max_value", 10000_i}})},
      {4, cfg({{"min_value", 1_i}, {"max_value", 50000_i}})},
      {5, cfg({{"min_value", 1_i}, {"max_value", 100000_i}})},
      {6, cfg({{"min_value", 1_i}, {"max_value", 300000_i}})},
      {7, cfg({{"min_value", 1_i}, {"max_value", 500000_i}})},
      {8, cfg({{"min_value", 1_i}, {"max_value", 800000_i}})},
      {9, cfg({{"min_value", 1_i}, {"max_value", 1000000_i}})},
      {10, cfg({{"min_value", 1_i}, {"max_value", 3000000_i}})},
  };

  t[Problem::three_dm] = {
      {1, cfg({{"n", 4_i}})},  {2, cfg({{"n", 8_i}})},
      {3, cfg({{"n", 12_i}})}, {4, cfg({{"n", 15_i}})},
      {5, cfg({{"n", 20_i}})}, {6, cfg({{"n", 25_i}})},
      {7, cfg({{"n", 30_i}})}, {8, cfg({{"n", 40_i}})},
      {9, cfg({{"n", 50_i}})}, {10, cfg({{"n", 60_i}})},
  };

  t[Problem::tsp] = {
      {1, cfg({{"num_cities", 5_i}, {"target_length", 100_i}})},
      {2, cfg({{"num_cities", 8_i}, {"target_length", 100_i}})},
      {3, cfg({{"num_cities", 10_i}, {"target_length", 100_i}})},
      {4, cfg({{"num_cities", 12_i}, {"target_length", 100_i}})},
      {5, cfg({{"num_cities", 15_i}, {"target_length", 100_i}})},
      {6, cfg({{"num_cities", 17_i}, {"target_length", 200_i}})},
      {7, cfg({{"num_cities", 20_i}, {"target_length", 200_i}})},
      {8, cfg({{"num_cities", 25_i}, {"target_length", 200_i}})},
      {9, cfg({{"num_cities", 30_i}, {"target_length", 200_i}})},
      {10, cfg({{"num_cities", 40_i}, {"target_length", 300_i}})},
  };

  const Rational p03 = make_rational(3, 10);
  const Rational p02 = make_rational(1, 5);
  t[Problem::dominating_set] = {
      {1, cfg({{"num_nodes", 10_i}, {"k", 5_i}, {"edge_prob", p03}})},
      {2, cfg({{"num_nodes", 15_i}, {"k", 5_i}, {"edge_prob", p03}})},
      {3, cfg({{"num_nodes", 30_i}, {"k", 15_i}, {"edge_prob", p03}})},
      {4, cfg({{"num_nodes", 50_i}, {"k", 20_i}, {"edge_prob", p03}})},
      {5, cfg({{"num_nodes", 70_i}, {"k", 20_i}, {"edge_prob", p03}})},
      {6, cfg({{"num_nodes", 100_i}, {"k", 20_i}, {"edge_prob", p03}})},
      {7, cfg({{"num_nodes", 70_i}, {"k", 20_i}, {"edge_prob", p02}})},
      {8, cfg({{"num_nodes", 80_i}, {"k", 20_i}, {"edge_prob", p02}})},
      {9, cfg({{"num_nodes", 100_i}, {"k", 20_i}, {"edge_prob", p02}})},
      {10, cfg({{"num_nodes", 150_i}, {"k", 20_i}, {"edge_prob", p02}})},
      {11, cfg({{"num_nodes", 160_i}, {"k", 15_i}, {"edge_prob", p02}})},
      {12, cfg({{"num_nodes", 180_i}, {"k", 15_i}, {"edge_prob", p02}})},
  };

  t[Problem::hitting_string] = {
      {1, cfg({{"n", 5_i}, {"m", 10_i}})},  {2, cfg({{"n", 5_i}, {"m", 20_i}})},
      {3, cfg({{"n", 10_i}, {"m", 20_i}})}, {4, cfg({{"n", 10_i}, {"m", 30_i}})},
      {5, cfg({{"n", 10_i}, {"m", 40_i}})}, {6, cfg({{"n", 10_i}, {"m", 45_i}})},
      {7, cfg({{"n", 10_i}, {"m", 50_i}})}, {8, cfg({{"n", 10_i}, {"m", 55_i}})},
      {9, cfg({{"n", 10_i}, {"m", 60_i}})}, {10, cfg({{"n", 10_i}, {"m", 70_i}})},
  };

  t[Problem::hamiltonian_cycle] = {
      {1, cfg({{"num_nodes", 5_i}, {"directed", false}})},
      {2, cfg({{"num_nodes", 8_i}, {"directed", false}})},
      {3, cfg({{"num_nodes", 10_i}, {"directed", false}})},
      {4, cfg({{"num_nodes", 12_i}, {"directed", false}})},
      {5, cfg({{"num_nodes", 16_i}, {"directed", false}})},
      {6, cfg({{"num_nodes", 18_i}, {"directed", false}})},
      {7, cfg({{"num_nodes", 20_i}, {"directed", false}})},
      {8, cfg({{"num_nodes", 22_i}, {"directed", false}})},
      {9, cfg({{"num_nodes", 25_i}, {"directed", false}})},
      {10, cfg({{"num_nodes", 30_i}, {"directed", false}})},
  };

  t[Problem::bin_packing] = {
      {1, cfg({{"num_items", 10_i}, {"bin_capacity", 20_i}, {"num_bins", 3_i}})},
      {2, cfg({{"num_items", 20_i}, {"bin_capacity", 30_i}, {"num_bins", 3_i}})},
      {3, cfg({{"num_items", 30_i}, {"bin_capacity", 30_i}, {"num_bins", 3_i}})},
      {4, cfg({{"num_items", 40_i}, {"bin_capacity", 30_i}, {"num_bins", 3_i}})},
      {5, cfg({{"num_items", 50_i}, {"bin_capacity", 50_i}, {"num_bins", 5_i}})},
      {6, cfg({{"num_items", 60_i}, {"bin_capacity", 50_i}, {"num_bins", 5_i}})},
      {7, cfg({{"num_items", 70_i}, {"bin_capacity", 50_i}, {"num_bins", 5_i}})},
      {8, cfg({{"num_items", 80_i}, {"bin_capacity", 50_i}, {"num_bins", 5_i}})},
      {9, cfg({{"num_items", 80_i}, {"bin_capacity", 30_i}, {"num_bins", 10_i}})},
      {10, cfg({{"num_items", 100_i}, {"bin_capacity", 50_i}, {"num_bins", 10_i}})},
  };

  t[Problem::x3c] = {
      {1, cfg({{"num_elements", 3_i}, {"num_subsets", 6_i}})},
      {2, cfg({{"num_elements", 4_i}, {"num_subsets", 8_i}})},
      {3, cfg({{"num_elements", 5_i}, {"num_subsets", 10_i}})},
      {4, cfg({{"num_elements", 7_i}, {"num_subsets", 14_i}})},
      {5, cfg({{"num_elements", 8_i}, {"num_subsets", 16_i}})},
      {6, cfg({{"num_elements", 10_i}, {"num_subsets", 20_i}})},
      {7, cfg({{"num_elements", 15_i}, {"num_subsets", 30_i}})},
      {8, cfg({{"num_elements", 20_i}, {"num_subsets", 40_i}})},
      {9, cfg({{"num_elements", 25_i}, {"num_subsets", 50_i}})},
      {10, cfg({{"num_elements", 30_i}, {"num_subsets", 60_i}})},
  };

  t[Problem::minimum_cover] = {
      {1, cfg({{"num_elements", 5_i}, {"num_sets", 10_i}, {"k", 3_i}})},
      {2, cfg({{"num_elements", 10_i}, {"num_sets", 20_i}, {"k", 5_i}})},
      {3, cfg({{"num_elements", 10_i}, {"num_sets", 30_i}, {"k", 5_i}})},
      {4, cfg({{"num_elements", 15_i}, {"num_sets", 20_i}, {"k", 8_i}})},
      {5, cfg({{"num_elements", 15_i}, {"num_sets", 30_i}, {"k", 10_i}})},
      {6, cfg({{"num_elements", 20_i}, {"num_sets", 40_i}, {"k", 10_i}})},
      {7, cfg({{"num_elements", 25_i}, {"num_sets", 50_i}, {"k", 10_i}})},
      {8, cfg({{"num_elements", 30_i}, {"num_sets", 60_i}, {"k", 10_i}})},
      {9, cfg({{"num_elements", 35_i}, {"num_sets", 70_i}, {"k", 10_i}})},
      {10, cfg({{"num_elements", 40_i}, {"num_sets", 80_i}, {"k", 10_i}})},
      {11, cfg({{"num_elements", 45_i}, {"num_sets", 90_i}, {"k", 10_i}})},
      {12, cfg({{"num_elements", 50_i}, {"num_sets", 100_i}, {"k", 10_i}})},
      {13, cfg({{"num_elements", 55_i}, {"num_sets", 110_i}, {"k", 10_i}})},
      {14, cfg({{"num_elements", 60_i}, {"num_sets", 120_i}, {"k", 10_i}})},
      {15, cfg({{"num_elements", 65_i}, {"num_sets", 130_i}, {"k", 10_i}})},
      {16, cfg({{"num_elements", 70_i}, {"num_sets", 140_i}, {"k", 10_i}})},
  };

  t[Problem::three_col] = {
      {1, cfg({{"num_nodes", 5_i}, {"num_edges", 8_i}})},
      {2, cfg({{"num_nodes", 8_i}, {"num_edges", 12_i}})},
      {3, cfg({{"num_nodes", 10_i}, {"num_edges", 20_i}})},
      {4, cfg({{"num_nodes", 15_i}, {"num_edges", 25_i}})},
      {5, cfg({{"num_nodes", 15_i}, {"num_edges", 30_i}})},
      {6, cfg({{"num_nodes", 15_i}, {"num_edges", 40_i}})},
      {7, cfg({{"num_nodes", 20_i}, {"num_edges", 40_i}})},
      {8, cfg({{"num_nodes", 20_i}, {"num_edges", 45_i}})},
      {9, cfg({{"num_nodes", 30_i}, {"num_edges", 60_i}})},
      {10, cfg({{"num_nodes", 30_i}, {"num_edges", 80_i}})},
  };

  t[Problem::clustering] = {
      {1, cfg({{"num_elements", 6_i}, {"b", 10_i}})},
      {2, cfg({{"num_elements", 10_i}, {"b", 10_i}})},
      {3, cfg({{"num_elements", 15_i}, {"b", 10_i}})},
      {4, cfg({{"num_elements", 18_i}, {"b", 10_i}})},
      {5, cfg({{"num_elements", 20_i}, {"b", 10_i}})},
      {6, cfg({{"num_elements", 30_i}, {"b", 10_i}})},
      {7, cfg({{"num_elements", 40_i}, {"b", 10_i}})},
      {8, cfg({{"num_elements", 50_i}, {"b", 10_i}})},
      {9, cfg({{"num_elements", 60_i}, {"b", 10_i}})},
      {10, cfg({{"num_elements", 70_i}, {"b", 10_i}})},
  };

  t[Problem::betweenness] = {
      {1, cfg({{"num_element", 3_i}, {"num_triples", 1_i}})},
      {2, cfg({{"num_element", 4_i}, {"num_triples", 2_i}})},
      {3, cfg({{"num_element", 5_i}, {"num_triples", 3_i}})},
      {4, cfg({{"num_element", 6_i}, {"num_triples", 4_i}})},
      {5, cfg({{"num_element", 7_i}, {"num_triples", 5_i}})},
      {6, cfg({{"num_element", 8_i}, {"num_triples", 6_i}})},
  };

  t[Problem::min_sum_squares] = {
      {1, cfg({{"num_elements", 10_i}, {"k", 5_i}})},
      {2, cfg({{"num_elements", 50_i}, {"k", 8_i}})},
      {3, cfg({{"num_elements", 100_i}, {"k", 8_i}})},
      {4, cfg({{"num_elements", 100_i}, {"k", 5_i}})},
      {5, cfg({{"num_elements", 100_i}, {"k", 4_i}})},
      {6, cfg({{"num_elements", 100_i}, {"k", 3_i}})},
      {7, cfg({{"num_elements", 200_i}, {"k", 10_i}})},
      {8, cfg({{"num_elements", 200_i}, {"k", 4_i}})},
      {9, cfg({{"num_elements", 200_i}, {"k", 3_i}})},
      {10, cfg({{"num_elements", 300_i}, {"k", 3_i}})},
  };

  t[Problem::bandwidth] = {
      {1, cfg({{"num_nodes", 3_i}, {"bandwidth", 2_i}})},
      {2, cfg({{"num_nodes", 4_i}, {"bandwidth", 2_i}})},
      {3, cfg({{"num_nodes", 5_i}, {"bandwidth", 3_i}})},
      {4, cfg({{"num_nodes", 6_i}, {"bandwidth", 3_i}})},
      {5, cfg({{"num_nodes", 5_i}, {"bandwidth", 2_i}})},
      {6, cfg({{"num_nodes", 7_i}, {"bandwidth", 3_i}})},
      {7, cfg({{"num_nodes", 6_i}, {"bandwidth", 2_i}})},
      {8, cfg({{"num_nodes", 8_i}, {"bandwidth", 3_i}})},
      {9, cfg({{"num_nodes", 7_i}, {"bandwidth", 2_i}})},
      {10, cfg({{"num_nodes", 8_i}, {"bandwidth", 2_i}})},
  };

  t[Problem::max_leaf_span_tree] = {
      {1, cfg({{"num_nodes", 5_i}, {"target_leaves", 2_i}})},
      {2, cfg({{"num_nodes", 10_i}, {"target_leaves", 5_i}})},
      {3, cfg({{"num_nodes", 20_i}, {"target_leaves", 10_i}})},
      {4, cfg({{"num_nodes", 30_i}, {"target_leaves", 20_i}})},
      {5, cfg({{"num_nodes", 40_i}, {"target_leaves", 30_i}})},
      {6, cfg({{"num_nodes", 60_i}, {"target_leaves", 50_i}})},
      {7, cfg({{"num_nodes", 70_i}, {"target_leaves", 60_i}})},
      {8, cfg({{"num_nodes", 80_i}, {"target_leaves", 65_i}})},
      {9, cfg({{"num_nodes", 90_i}, {"target_leaves", 75_i}})},
      {10, cfg({{"num_nodes", 100_i}, {"target_leaves", 80_i}})},
  };

  return t;
}

}  // namespace

const std::map<Problem, DifficultyLadder>& builtin_ladders() {
  static const std::map<Problem, DifficultyLadder> table = build_builtin();
  return table;
}

Ladders::Ladders() : table_(builtin_ladders()) {}

void Ladders::apply_overrides(const Json& doc) {
  if (!doc.is_object())
    fail(Errc::parse_error, "ladder override document must be a JSON object");
  for (const auto& [name, levels] : doc.items()) {
    Problem p = parse_problem(name);
    if (!levels.is_object())
      fail(Errc::parse_error, "ladder for " + name + " must map levels to configs");
    DifficultyLadder& ladder = table_[p];
    for (const auto& [level_text, config] : levels.items()) {
      int level = 0;
      try {
        size_t used = 0;
        level = std::stoi(level_text, &used);
        if (used != level_text.size()) throw std::invalid_argument(level_text);
      } catch (const std::logic_error&) {
        fail(Errc::parse_error, "bad ladder level for " + name + ": " + level_text);
      }
      if (level < 1)
        fail(Errc::parse_error, "ladder levels start at 1, got " + level_text);
      ladder[level] = config_from_json(config);
    }
    // Levels must stay contiguous from 1.
    int expected = 1;
    for (const auto& [level, config] : ladder) {
      (void)config;
      if (level != expected)
        fail(Errc::parse_error, "ladder for " + name + " is missing level " +
                                    std::to_string(expected));
      ++expected;
    }
  }
}

const DifficultyLadder& Ladders::ladder(Problem p) const {
  auto it = table_.find(p);
  if (it == table_.end())
    fail(Errc::unknown_problem, "no ladder for problem " + problem_name(p));
  return it->second;
}

const GenConfig& Ladders::level_config(Problem p, int level) const {
  const DifficultyLadder& l = ladder(p);
  auto it = l.find(level);
  if (it == l.end())
    fail(Errc::unknown_level,
         "problem " + problem_name(p) + " has no level " + std::to_string(level) +
             " (valid range: 1.." + std::to_string(l.rbegin()->first) + ")");
  return it->second;
}

int Ladders::max_level(Problem p) const {
  const DifficultyLadder& l = ladder(p);
  return l.empty() ? 0 : l.rbegin()->first;
}

}  // namespace nppc
