#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "nppc/error.hpp"
#include "nppc/gym.hpp"
#include "nppc/instance.hpp"
#include "nppc/json.hpp"
#include "nppc/ladder.hpp"
#include "nppc/outcome.hpp"
#include "nppc/problem.hpp"

using namespace nppc;

namespace {

Instance make_inst(Problem p, Json payload) {
  Instance inst;
  inst.problem = p;
  inst.level = 1;
  inst.seed = 0;
  inst.payload = std::move(payload);
  return inst;
}

void expect_ok(const Instance& inst, const Json& candidate) {
  VerifyOutcome out = gym::verify_solution(inst, candidate);
  CAPTURE(out.message);
  CHECK(out.ok);
}

void expect_code(const Instance& inst, const Json& candidate, int code) {
  VerifyOutcome out = gym::verify_solution(inst, candidate);
  REQUIRE_FALSE(out.ok);
  REQUIRE(out.error.has_value());
  CHECK(out.error->category == ErrorCategory::problem_error);
  CHECK(out.error->code == code);
  CHECK_FALSE(out.message.empty());
}

void expect_format(const Instance& inst, const Json& candidate) {
  VerifyOutcome out = gym::verify_solution(inst, candidate);
  REQUIRE_FALSE(out.ok);
  REQUIRE(out.error.has_value());
  CHECK(out.error->category == ErrorCategory::verification_error);
}

}  // namespace

TEST_CASE("descriptors cover all problems in registry order") {
  const auto& all = gym::list_problems();
  REQUIRE(all.size() == 25);
  CHECK(all[0].name == "3SAT");
  CHECK(all[0].display_name == "3-Satisfiability (3SAT)");
  CHECK(all[3].name == "TSP");
  CHECK(all[3].display_name == "Travelling Salesman");
  for (size_t i = 0; i < all.size(); ++i) {
    const auto& d = all[i];
    CHECK(d.id == all_problems()[i]);
    CHECK(d.name == problem_name(d.id));
    CHECK(d.core == is_core(d.id));
    CHECK(d.description.find("- Name: ") != std::string::npos);
    CHECK(d.description.find("- Input: ") != std::string::npos);
    CHECK(d.description.find("- Question: ") != std::string::npos);
    CHECK_FALSE(d.instance_schema.empty());
    CHECK_FALSE(d.solution_schema.empty());
    CHECK_FALSE(d.error_codes.empty());
  }
}

TEST_CASE("error code tables have the published shapes and strings") {
  auto codes = [](Problem p) { return gym::descriptor(p).error_codes; };
  CHECK(codes(Problem::three_sat).size() == 2);
  CHECK(codes(Problem::vertex_cover).size() == 5);
  CHECK(codes(Problem::three_dm).size() == 3);
  CHECK(codes(Problem::tsp).size() == 4);
  CHECK(codes(Problem::hamiltonian_cycle).size() == 5);
  CHECK(codes(Problem::three_col).size() == 1);
  CHECK(codes(Problem::bin_packing).size() == 3);
  CHECK(codes(Problem::max_leaf_span_tree).size() == 5);
  CHECK(codes(Problem::qde).size() == 3);
  CHECK(codes(Problem::min_sum_squares).size() == 3);
  CHECK(codes(Problem::superstring).size() == 3);
  CHECK(codes(Problem::bandwidth).size() == 3);

  CHECK(codes(Problem::three_sat)[0] ==
        "The solution length mismatches the number of variables.");
  CHECK(codes(Problem::three_sat)[1] == "Some clauses are not satisfied.");
  CHECK(codes(Problem::vertex_cover)[0] == "Wrong solution format.");
  CHECK(codes(Problem::vertex_cover)[4] == "Some edges are not covered.");
  // Two published strings lack the trailing period; keep them verbatim.
  CHECK(codes(Problem::three_dm)[1] == "The size of matching is wrong");
  CHECK(codes(Problem::three_col)[0] ==
        "The two nodes of an edge have the same color");
  CHECK(codes(Problem::tsp)[3] == "Tour length exceeds target length.");
  CHECK(codes(Problem::hamiltonian_cycle)[1] == "Path does not return to start.");
}

TEST_CASE("every ladder level generates a verifiable instance, deterministically") {
  for (const auto& [p, ladder] : builtin_ladders()) {
    const auto& d = gym::descriptor(p);
    for (const auto& [level, cfg] : ladder) {
      for (uint64_t seed : {11u, 22u, 33u}) {
        CAPTURE(d.name);
        CAPTURE(level);
        CAPTURE(seed);
        gym::GeneratedPair pair = gym::generate_instance(p, cfg, seed);
        pair.instance.level = level;
        VerifyOutcome out = gym::verify_solution(pair.instance, pair.planted);
        CAPTURE(out.message);
        REQUIRE(out.ok);

        // Same inputs give the same bytes.
        gym::GeneratedPair again = gym::generate_instance(p, cfg, seed);
        again.instance.level = level;
        std::string bytes = canonical_serialize(pair.instance);
        CHECK(bytes == canonical_serialize(again.instance));
        CHECK(canonical_dump(pair.planted) == canonical_dump(again.planted));

        // Full record round-trip is byte-stable.
        Instance back = canonical_parse(bytes);
        CHECK(back.problem == p);
        CHECK(back.level == level);
        CHECK(back.seed == seed);
        CHECK(canonical_serialize(back) == bytes);
      }
    }
  }
}

TEST_CASE("different seeds give different instances") {
  const GenConfig& cfg = builtin_ladders().at(Problem::three_sat).at(5);
  auto a = gym::generate_instance(Problem::three_sat, cfg, 1);
  auto b = gym::generate_instance(Problem::three_sat, cfg, 2);
  CHECK(canonical_dump(a.instance.payload) != canonical_dump(b.instance.payload));
}

TEST_CASE("3SAT instances have the requested shape") {
  GenConfig cfg;
  cfg.params["num_variables"] = int64_t{5};
  cfg.params["num_clauses"] = int64_t{5};
  auto pair = gym::generate_instance(Problem::three_sat, cfg, 42);
  const Json& payload = pair.instance.payload;
  CHECK(payload.at("num_variables") == 5);
  REQUIRE(payload.at("clauses").size() == 5);
  for (const auto& clause : payload.at("clauses")) {
    REQUIRE(clause.size() == 3);
    std::set<int64_t> vars;
    for (const auto& lit : clause) {
      int64_t l = lit.get<int64_t>();
      CHECK(l != 0);
      CHECK(std::abs(l) <= 5);
      vars.insert(std::abs(l));
    }
    CHECK(vars.size() == 3);
  }
  REQUIRE(pair.planted.is_array());
  CHECK(pair.planted.size() == 5);
}

TEST_CASE("edge-exact generators honor the requested count or refuse") {
  GenConfig cfg;
  cfg.params["num_nodes"] = int64_t{5};
  cfg.params["num_edges"] = int64_t{8};
  auto pair = gym::generate_instance(Problem::three_col, cfg, 7);
  CHECK(pair.instance.payload.at("edges").size() == 8);

  GenConfig tight;
  tight.params["num_nodes"] = int64_t{3};
  tight.params["num_edges"] = int64_t{4};  // a 3-node 3-coloured graph caps at 3
  CHECK_THROWS_AS(gym::generate_instance(Problem::three_col, tight, 7), Error);
  try {
    gym::generate_instance(Problem::three_col, tight, 7);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::infeasible_config);
  }
}

TEST_CASE("generation gives up after the retry budget") {
  // Length-1 hitting strings admit only one distinct pattern.
  GenConfig cfg;
  cfg.params["n"] = int64_t{1};
  cfg.params["m"] = int64_t{2};
  try {
    gym::generate_instance(Problem::hitting_string, cfg, 3);
    FAIL("expected infeasible_config");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::infeasible_config);
  }
}

TEST_CASE("config keys are checked both ways") {
  GenConfig extra;
  extra.params["num_variables"] = int64_t{5};
  extra.params["num_clauses"] = int64_t{5};
  extra.params["bogus"] = int64_t{1};
  GenConfig missing;
  missing.params["num_variables"] = int64_t{5};
  for (const GenConfig* cfg : {&extra, &missing}) {
    try {
      gym::generate_instance(Problem::three_sat, *cfg, 1);
      FAIL("expected config_mismatch");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::config_mismatch);
    }
  }
}

TEST_CASE("3SAT verification") {
  Instance inst = make_inst(
      Problem::three_sat,
      Json{{"num_variables", 3}, {"clauses", Json::array({{1, 2, 3}})}});
  expect_ok(inst, Json::array({true, false, false}));
  expect_code(inst, Json::array({true, true}), 1);
  expect_code(inst, Json::array({false, false, false}), 2);
  expect_format(inst, "x");
  expect_format(inst, Json::array({1, 0, 1}));
}

TEST_CASE("vertex cover verification") {
  Instance inst = make_inst(Problem::vertex_cover,
                            Json{{"num_nodes", 3},
                                 {"cover_size", 1},
                                 {"edges", Json::array({{0, 1}, {0, 2}})}});
  expect_ok(inst, Json::array({0}));
  expect_code(inst, "x", 1);
  expect_code(inst, Json::array(), 2);
  expect_code(inst, Json::array({5}), 3);
  expect_code(inst, Json::array({1, 2}), 4);
  expect_code(inst, Json::array({0, 0}), 4);  // raw length, duplicates count
  expect_code(inst, Json::array({1}), 5);
}

TEST_CASE("3DM verification") {
  Instance inst = make_inst(
      Problem::three_dm,
      Json{{"n", 2},
           {"triples", Json::array({{0, 2, 4}, {1, 3, 5}, {0, 3, 5}})}});
  expect_ok(inst, Json::array({{0, 2, 4}, {1, 3, 5}}));
  expect_code(inst, Json::array({{0, 2, 4}, {1, 3, 4}}), 1);  // not in M
  expect_code(inst, Json::array({{0, 2, 4}}), 2);
  expect_code(inst, Json::array({{0, 2, 4}, {0, 3, 5}}), 3);  // x reused
  expect_format(inst, Json::array({{0, 2}, {1, 3}}));
  expect_format(inst, "x");
}

TEST_CASE("TSP verification") {
  Json dist = Json::array({{0, 1, 2}, {1, 0, 3}, {2, 3, 0}});
  Instance inst = make_inst(
      Problem::tsp,
      Json{{"num_cities", 3}, {"target_length", 6}, {"distances", dist}});
  expect_ok(inst, Json::array({0, 1, 2}));  // 1 + 3 + 2 = 6
  expect_code(inst, Json::array({0, 1}), 1);
  expect_code(inst, Json::array({0, 1, 5}), 2);
  expect_code(inst, Json::array({0, 1, 1}), 3);
  expect_format(inst, "x");

  Instance tighter = make_inst(
      Problem::tsp,
      Json{{"num_cities", 3}, {"target_length", 5}, {"distances", dist}});
  expect_code(tighter, Json::array({0, 1, 2}), 4);
}

TEST_CASE("hamiltonian cycle verification") {
  Instance tri = make_inst(Problem::hamiltonian_cycle,
                           Json{{"num_nodes", 3},
                                {"directed", false},
                                {"edges", Json::array({{0, 1}, {0, 2}, {1, 2}})}});
  expect_ok(tri, Json::array({0, 1, 2}));
  expect_ok(tri, Json::array({0, 1, 2, 0}));  // closed form accepted
  expect_code(tri, Json::array({0, 1, 2, 1}), 2);
  expect_code(tri, Json::array({0, 1}), 1);
  expect_code(tri, Json::array({0, 1, 1}), 3);
  expect_code(tri, Json::array({0, 1, 3}), 4);
  expect_format(tri, Json::array({true, false, true}));

  Instance path = make_inst(Problem::hamiltonian_cycle,
                            Json{{"num_nodes", 3},
                                 {"directed", false},
                                 {"edges", Json::array({{0, 1}, {1, 2}})}});
  expect_code(path, Json::array({0, 1, 2}), 5);

  Instance ring = make_inst(Problem::hamiltonian_cycle,
                            Json{{"num_nodes", 3},
                                 {"directed", true},
                                 {"edges", Json::array({{0, 1}, {1, 2}, {2, 0}})}});
  expect_ok(ring, Json::array({0, 1, 2}));
  expect_ok(ring, Json::array({1, 2, 0}));
  expect_code(ring, Json::array({0, 2, 1}), 5);  // against the arrows
}

TEST_CASE("3-COL verification") {
  Instance inst = make_inst(
      Problem::three_col,
      Json{{"num_nodes", 3}, {"edges", Json::array({{0, 1}, {1, 2}})}});
  expect_ok(inst, Json::array({0, 1, 0}));
  expect_code(inst, Json::array({0, 0, 1}), 1);
  expect_format(inst, Json::array({0, 1}));
  expect_format(inst, Json::array({0, 1, 3}));
  expect_format(inst, "x");
}

TEST_CASE("bin packing verification") {
  Instance inst = make_inst(Problem::bin_packing,
                            Json{{"sizes", Json::array({2, 3, 5})},
                                 {"bin_capacity", 5},
                                 {"num_bins", 2}});
  expect_ok(inst, Json::array({0, 0, 1}));
  expect_code(inst, Json::array({0, 0}), 1);
  expect_code(inst, Json::array({0, 2, 1}), 2);
  expect_code(inst, Json::array({0, 1, 1}), 3);
  expect_format(inst, "x");
}

TEST_CASE("max leaf spanning tree verification") {
  Instance star = make_inst(
      Problem::max_leaf_span_tree,
      Json{{"num_nodes", 4},
           {"target_leaves", 3},
           {"edges", Json::array({{0, 1}, {0, 2}, {0, 3}})}});
  expect_ok(star, Json::array({-1, 0, 0, 0}));
  expect_code(star, Json::array({-1, 0, 0}), 1);
  expect_code(star, Json::array({-1, 0, 0, 1}), 2);  // (3,1) is not an edge
  expect_code(star, Json::array({1, 0, 0, 0}), 3);   // no root
  expect_code(star, Json::array({-1, 0, 0, -1}), 3);

  Instance ring = make_inst(
      Problem::max_leaf_span_tree,
      Json{{"num_nodes", 4},
           {"target_leaves", 2},
           {"edges", Json::array({{0, 1}, {0, 3}, {1, 2}, {2, 3}})}});
  expect_ok(ring, Json::array({-1, 0, 1, 0}));
  expect_code(ring, Json::array({-1, 0, 3, 2}), 4);  // 2 <-> 3 detached cycle

  Instance path = make_inst(
      Problem::max_leaf_span_tree,
      Json{{"num_nodes", 4},
           {"target_leaves", 3},
           {"edges", Json::array({{0, 1}, {1, 2}, {2, 3}})}});
  expect_code(path, Json::array({-1, 0, 1, 2}), 5);  // a path has 2 leaves
  expect_format(path, "x");
}

TEST_CASE("quadratic diophantine verification") {
  Instance inst =
      make_inst(Problem::qde, Json{{"a", 1}, {"b", 1}, {"c", 5}});
  expect_ok(inst, Json::array({1, 4}));  // 1*1 + 4 = 5
  expect_ok(inst, Json::array({2, 1}));  // 4 + 1 = 5
  expect_code(inst, Json::array({1}), 1);
  expect_code(inst, Json::array({0, 5}), 2);
  expect_code(inst, Json::array({-1, 6}), 2);
  expect_code(inst, Json::array({2, 2}), 3);
  expect_code(inst, Json::array({4000000000, 1}), 3);  // x^2 would overflow
  expect_format(inst, "x");
}

TEST_CASE("minimum sum of squares verification") {
  Instance inst = make_inst(Problem::min_sum_squares,
                            Json{{"sizes", Json::array({3, 4, 5})},
                                 {"k", 2},
                                 {"J", 74}});
  expect_ok(inst, Json::array({0, 0, 1}));  // 49 + 25
  expect_code(inst, Json::array({0, 1}), 1);
  expect_code(inst, Json::array({0, 2, 0}), 2);
  expect_code(inst, Json::array({0, 1, 0}), 3);  // 64 + 16 = 80 > 74
  expect_format(inst, "x");
}

TEST_CASE("superstring verification") {
  Instance inst = make_inst(
      Problem::superstring,
      Json{{"strings", Json::array({"ab", "bc"})}, {"max_length", 3}});
  expect_ok(inst, "abc");
  expect_code(inst, 42, 1);
  expect_code(inst, "abcd", 2);
  expect_code(inst, "abx", 3);
}

TEST_CASE("bandwidth verification") {
  Instance inst = make_inst(Problem::bandwidth,
                            Json{{"num_nodes", 3},
                                 {"bandwidth", 1},
                                 {"edges", Json::array({{0, 1}, {1, 2}})}});
  expect_ok(inst, Json::array({0, 1, 2}));
  expect_code(inst, Json::array({0, 1}), 1);
  expect_code(inst, Json::array({0, 0, 1}), 2);
  expect_code(inst, Json::array({0, 1, 3}), 2);
  expect_code(inst, Json::array({1, 0, 2}), 3);  // edge (1,2) stretches to 2
  expect_format(inst, "x");
}

TEST_CASE("clique verification") {
  Instance inst = make_inst(
      Problem::clique,
      Json{{"num_nodes", 3}, {"k", 2}, {"edges", Json::array({{0, 1}})}});
  expect_ok(inst, Json::array({0, 1}));
  expect_code(inst, "x", 1);
  expect_code(inst, Json::array({0}), 2);
  expect_code(inst, Json::array({0, 3}), 3);
  expect_code(inst, Json::array({0, 0}), 3);
  expect_code(inst, Json::array({0, 2}), 4);
}

TEST_CASE("independent set verification") {
  Instance inst = make_inst(
      Problem::independent_set,
      Json{{"num_nodes", 3}, {"k", 2}, {"edges", Json::array({{0, 1}})}});
  expect_ok(inst, Json::array({0, 2}));
  expect_ok(inst, Json::array({1, 2}));
  expect_code(inst, "x", 1);
  expect_code(inst, Json::array({0}), 2);
  expect_code(inst, Json::array({0, 9}), 3);
  expect_code(inst, Json::array({1, 1}), 3);
  expect_code(inst, Json::array({0, 1}), 4);
}

TEST_CASE("dominating set verification") {
  Instance inst = make_inst(Problem::dominating_set,
                            Json{{"num_nodes", 3},
                                 {"k", 1},
                                 {"edges", Json::array({{0, 1}, {0, 2}})}});
  expect_ok(inst, Json::array({0}));
  expect_code(inst, "x", 1);
  expect_code(inst, Json::array(), 2);
  expect_code(inst, Json::array({5}), 3);
  expect_code(inst, Json::array({1, 2}), 4);
  expect_code(inst, Json::array({1}), 5);
}

TEST_CASE("set splitting verification") {
  Instance inst = make_inst(
      Problem::set_splitting,
      Json{{"num_elements", 4},
           {"subsets", Json::array({{0, 2}, {1, 3}, {0, 3}})}});
  expect_ok(inst, Json::array({0, 0, 1, 1}));
  expect_code(inst, Json::array({0, 0, 1}), 1);
  expect_code(inst, Json::array({0, 2, 1, 1}), 2);
  expect_code(inst, Json::array({0, 1, 0, 1}), 3);  // {0,2} lands on one side
  expect_format(inst, "x");
}

TEST_CASE("set packing verification") {
  Instance inst = make_inst(
      Problem::set_packing,
      Json{{"num_elements", 4},
           {"k", 2},
           {"subsets", Json::array({{0, 1}, {2, 3}, {1, 2}})}});
  expect_ok(inst, Json::array({0, 1}));
  expect_code(inst, "x", 1);
  expect_code(inst, Json::array({0}), 2);
  expect_code(inst, Json::array({0, 5}), 3);
  expect_code(inst, Json::array({0, 0}), 3);
  expect_code(inst, Json::array({0, 2}), 4);
}

TEST_CASE("exact cover by 3-sets verification") {
  Instance inst = make_inst(
      Problem::x3c,
      Json{{"num_elements", 6},
           {"subsets", Json::array({{0, 1, 2}, {3, 4, 5}, {0, 3, 4}})}});
  expect_ok(inst, Json::array({0, 1}));
  expect_code(inst, "x", 1);
  expect_code(inst, Json::array({0}), 2);
  expect_code(inst, Json::array({0, 9}), 3);
  expect_code(inst, Json::array({0, 2}), 4);  // element 0 covered twice
}

TEST_CASE("minimum cover verification") {
  Instance inst = make_inst(
      Problem::minimum_cover,
      Json{{"num_elements", 4},
           {"k", 2},
           {"sets", Json::array({{0, 1}, {2, 3}, {0, 2}})}});
  expect_ok(inst, Json::array({0, 1}));
  expect_code(inst, "x", 1);
  expect_code(inst, Json::array({0, 1, 2}), 2);
  expect_code(inst, Json::array({0, 9}), 3);
  expect_code(inst, Json::array({0, 0}), 3);
  expect_code(inst, Json::array({0, 2}), 4);  // element 3 uncovered
}

TEST_CASE("partition verification") {
  Instance inst =
      make_inst(Problem::partition, Json{{"sizes", Json::array({1, 2, 3})}});
  expect_ok(inst, Json::array({0, 0, 1}));
  expect_ok(inst, Json::array({1, 1, 0}));
  expect_code(inst, Json::array({0, 1}), 1);
  expect_code(inst, Json::array({0, 2, 1}), 2);
  expect_code(inst, Json::array({0, 1, 1}), 3);
  expect_format(inst, "x");
}

TEST_CASE("subset sum verification") {
  Instance inst = make_inst(
      Problem::subset_sum,
      Json{{"sizes", Json::array({1, 2, 3})}, {"target", 4}});
  expect_ok(inst, Json::array({0, 2}));
  expect_code(inst, "x", 1);
  expect_code(inst, Json::array({0, 9}), 2);
  expect_code(inst, Json::array({0, 0}), 2);
  expect_code(inst, Json::array({0, 1}), 3);
}

TEST_CASE("hitting string verification") {
  Instance inst = make_inst(
      Problem::hitting_string,
      Json{{"n", 2}, {"strings", Json::array({"0*", "*1"})}});
  expect_ok(inst, "01");
  expect_code(inst, "0", 1);
  expect_code(inst, "0x", 2);
  expect_code(inst, "11", 3);  // "0*" matches nowhere; '*' never matches
  expect_format(inst, 42);
}

TEST_CASE("quadratic congruences verification") {
  Instance inst = make_inst(Problem::quadratic_congruences,
                            Json{{"a", 1}, {"b", 2}, {"c", 5}});
  expect_ok(inst, 1);
  expect_ok(inst, 3);  // 9 mod 2 = 1
  expect_code(inst, 0, 1);
  expect_code(inst, -2, 1);
  expect_code(inst, 7, 2);
  expect_code(inst, 4, 3);  // 16 mod 2 = 0 != 1
  expect_format(inst, "x");
}

TEST_CASE("betweenness verification") {
  Instance inst = make_inst(
      Problem::betweenness,
      Json{{"num_elements", 3}, {"triples", Json::array({{0, 1, 2}})}});
  expect_ok(inst, Json::array({0, 1, 2}));
  expect_ok(inst, Json::array({2, 1, 0}));  // reversed order also works
  expect_code(inst, Json::array({0, 1}), 1);
  expect_code(inst, Json::array({0, 0, 1}), 2);
  expect_code(inst, Json::array({0, 1, 5}), 2);
  expect_code(inst, Json::array({1, 0, 2}), 3);
  expect_format(inst, "x");
}

TEST_CASE("clustering verification") {
  Json dist = Json::array({{0, 1, 5}, {1, 0, 5}, {5, 5, 0}});
  Instance inst = make_inst(
      Problem::clustering,
      Json{{"num_elements", 3}, {"B", 2}, {"distances", dist}});
  expect_ok(inst, Json::array({0, 0, 1}));
  expect_code(inst, Json::array({0, 0}), 1);
  expect_code(inst, Json::array({0, 0, 5}), 2);
  expect_code(inst, Json::array({0, 1, 1}), 3);
  expect_format(inst, "x");
}

TEST_CASE("verification is total over junk candidates") {
  std::vector<Json> junk = {
      Json(),  // null
      Json(1.5),
      Json(true),
      Json::object(),
      Json::object({{"answer", 1}}),
      Json::array({Json::object()}),
      Json::array({Json::array({Json::array({1})})}),
      Json::array({1, "two", 3}),
      Json::array({1.0, 2.0}),
      Json("\xf0\x9f\x8c\x8d"),
  };
  for (const auto& [p, ladder] : builtin_ladders()) {
    auto pair = gym::generate_instance(p, ladder.at(1), 99);
    for (const Json& cand : junk) {
      CAPTURE(problem_name(p));
      CAPTURE(cand.dump());
      VerifyOutcome out = gym::verify_solution(pair.instance, cand);
      CHECK_FALSE(out.ok);
      REQUIRE(out.error.has_value());
      // Junk never passes, and the error renders as a stable string.
      std::string text = format_error(*out.error, p);
      CHECK_FALSE(text.empty());
    }
  }
}

TEST_CASE("verification rejects broken instances instead of throwing") {
  Instance inst = make_inst(Problem::three_sat,
                            Json{{"num_variables", 0}, {"clauses", Json::array()}});
  VerifyOutcome out = gym::verify_solution(inst, Json::array());
  CHECK_FALSE(out.ok);
  CHECK(out.message.find("instance rejected") != std::string::npos);
}

TEST_CASE("canonical records reject tampering") {
  auto pair = gym::generate_instance(
      Problem::three_sat, builtin_ladders().at(Problem::three_sat).at(1), 5);
  pair.instance.level = 1;
  std::string bytes = canonical_serialize(pair.instance);

  Json doc = canonical_parse_json(bytes);
  CHECK(doc.size() == 4);  // problem, level, seed, payload and nothing else

  Json unknown = doc;
  unknown["problem"] = "4SAT";
  CHECK_THROWS_AS(canonical_parse(unknown.dump()), Error);

  Json extra = doc;
  extra["note"] = "hi";
  CHECK_THROWS_AS(canonical_parse(extra.dump()), Error);

  Json missing = doc;
  missing.erase("seed");
  CHECK_THROWS_AS(canonical_parse(missing.dump()), Error);

  Json negative = doc;
  negative["level"] = -1;
  CHECK_THROWS_AS(canonical_parse(negative.dump()), Error);

  Json bad_seed = doc;
  bad_seed["seed"] = -7;
  CHECK_THROWS_AS(canonical_parse(bad_seed.dump()), Error);

  // Seeds above INT64_MAX are legitimate uint64 values, not negatives.
  Json big_seed = doc;
  big_seed["seed"] = uint64_t{0xfedcba9876543210ULL};
  CHECK(canonical_parse(canonical_dump(big_seed)).seed ==
        uint64_t{0xfedcba9876543210ULL});

  Json corrupt = doc;
  corrupt["payload"]["num_variables"] = 0;
  CHECK_THROWS_AS(canonical_parse(corrupt.dump()), Error);

  CHECK_THROWS_AS(canonical_parse("not json at all"), Error);
}

TEST_CASE("verifier cost stays flat at the top of every ladder") {
  // Verifying a planted solution at the hardest published level must be
  // effectively instant; a generous wall-clock bound catches accidental
  // exponential checks.
  for (const auto& [p, ladder] : builtin_ladders()) {
    const int top = static_cast<int>(ladder.size());
    auto pair = gym::generate_instance(p, ladder.at(top), 3);
    auto start = std::chrono::steady_clock::now();
    VerifyOutcome out = gym::verify_solution(pair.instance, pair.planted);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    CAPTURE(problem_name(p));
    CHECK(out.ok);
    CHECK(elapsed < 1000);
  }
}
