#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "nppc/error.hpp"
#include "nppc/gym.hpp"
#include "nppc/instance.hpp"
#include "nppc/json.hpp"
#include "nppc/ladder.hpp"
#include "nppc/oracle.hpp"
#include "nppc/outcome.hpp"
#include "nppc/problem.hpp"

using namespace nppc;
using oracle::OracleBudget;
using oracle::OracleResult;
using oracle::OracleStatus;

namespace {

Instance make_inst(Problem p, Json payload) {
  Instance inst;
  inst.problem = p;
  inst.level = 1;
  inst.seed = 0;
  inst.payload = std::move(payload);
  return inst;
}

// Shape-directed tweaks of a known-good solution. Each mutant may or may not
// still verify; the point is that both judges say the same thing about it.
std::vector<Json> mutants_of(const Json& sol) {
  std::vector<Json> out;
  if (sol.is_string()) {
    std::string s = sol.get<std::string>();
    if (!s.empty()) {
      std::string t = s;
      t[0] = t[0] == '0' ? '1' : (t[0] == 'a' ? 'b' : '0');
      out.push_back(t);
      out.push_back(s.substr(0, s.size() - 1));
    }
    out.push_back(s + "0");
  } else if (sol.is_number_integer()) {
    int64_t x = sol.get<int64_t>();
    out.push_back(x + 1);
    out.push_back(x - 1);
    out.push_back(-x);
    out.push_back(0);
  } else if (sol.is_array() && !sol.empty()) {
    if (sol[0].is_boolean()) {
      Json flipped = sol;
      flipped[0] = !flipped[0].get<bool>();
      out.push_back(flipped);
    } else if (sol[0].is_number_integer()) {
      Json bump = sol;
      bump[0] = bump[0].get<int64_t>() + 1;
      out.push_back(bump);
      Json drop = sol;
      drop.erase(drop.size() - 1);
      out.push_back(drop);
      Json dup = sol;
      dup.push_back(sol[0]);
      out.push_back(dup);
      if (sol.size() >= 2) {
        Json swapped = sol;
        std::swap(swapped[0], swapped[1]);
        out.push_back(swapped);
      }
    } else if (sol[0].is_array()) {  // list of triples
      Json drop = sol;
      drop.erase(drop.size() - 1);
      out.push_back(drop);
      Json dup = sol;
      dup.push_back(sol[0]);
      out.push_back(dup);
      Json tweak = sol;
      tweak[0][0] = tweak[0][0].get<int64_t>() + 1;
      out.push_back(tweak);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("oracle finds verifying solutions at the easy levels of every problem") {
  for (const auto& [p, ladder] : builtin_ladders()) {
    for (int level : {1, 2}) {
      for (uint64_t seed : {3u, 14u}) {
        auto pair = gym::generate_instance(p, ladder.at(level), seed);
        pair.instance.level = level;
        CAPTURE(problem_name(p));
        CAPTURE(level);
        CAPTURE(seed);
        OracleResult res = oracle::solve_exact(pair.instance);
        REQUIRE(res.status == OracleStatus::found);
        CHECK(res.states > 0);
        VerifyOutcome out = gym::verify_solution(pair.instance, res.solution);
        CAPTURE(out.message);
        CAPTURE(res.solution.dump());
        CHECK(out.ok);
        CHECK(oracle::check_solution(pair.instance, res.solution));
      }
    }
  }
}

TEST_CASE("oracle is deterministic across repeated calls") {
  auto pair = gym::generate_instance(
      Problem::three_col, builtin_ladders().at(Problem::three_col).at(2), 77);
  OracleResult a = oracle::solve_exact(pair.instance);
  OracleResult b = oracle::solve_exact(pair.instance);
  REQUIRE(a.status == OracleStatus::found);
  CHECK(b.status == a.status);
  CHECK(a.solution.dump() == b.solution.dump());
  CHECK(a.states == b.states);
}

TEST_CASE("full 8-clause family over 3 variables comes back unsatisfiable") {
  Json clauses = Json::array();
  for (int mask = 0; mask < 8; ++mask)
    clauses.push_back(Json::array({(mask & 1) ? 1 : -1, (mask & 2) ? 2 : -2,
                                   (mask & 4) ? 3 : -3}));
  Instance inst = make_inst(Problem::three_sat,
                            Json{{"num_variables", 3}, {"clauses", clauses}});
  OracleResult res = oracle::solve_exact(inst);
  CHECK(res.status == OracleStatus::no_solution);
  CHECK(res.states > 0);

  // same family minus one clause flips back to satisfiable
  clauses.erase(0);
  Instance sat = make_inst(Problem::three_sat,
                           Json{{"num_variables", 3}, {"clauses", clauses}});
  OracleResult res2 = oracle::solve_exact(sat);
  REQUIRE(res2.status == OracleStatus::found);
  CHECK(gym::verify_solution(sat, res2.solution).ok);
}

TEST_CASE("a starved state budget reports exhausted, not unsatisfiable") {
  Json clauses = Json::array();
  for (int mask = 0; mask < 8; ++mask)
    clauses.push_back(Json::array({(mask & 1) ? 1 : -1, (mask & 2) ? 2 : -2,
                                   (mask & 4) ? 3 : -3}));
  Instance inst = make_inst(Problem::three_sat,
                            Json{{"num_variables", 3}, {"clauses", clauses}});
  OracleBudget tiny;
  tiny.max_states = 5;
  OracleResult res = oracle::solve_exact(inst, tiny);
  CHECK(res.status == OracleStatus::exhausted);
  CHECK(res.states > 5);  // the stopping tick itself is counted

  // with the default budget the same search settles the question
  OracleResult full = oracle::solve_exact(inst);
  CHECK(full.status == OracleStatus::no_solution);
  CHECK(full.states < OracleBudget{}.max_states);
}

TEST_CASE("non-positive budgets are rejected") {
  auto pair = gym::generate_instance(
      Problem::three_sat, builtin_ladders().at(Problem::three_sat).at(1), 1);
  OracleBudget bad;
  bad.max_states = 0;
  CHECK_THROWS_AS(oracle::solve_exact(pair.instance, bad), Error);
  bad.max_states = 100;
  bad.max_millis = -1;
  CHECK_THROWS_AS(oracle::solve_exact(pair.instance, bad), Error);
}

TEST_CASE("provably oversized instances are refused up front") {
  auto expect_unsupported = [](const Instance& inst) {
    try {
      oracle::solve_exact(inst);
      FAIL_CHECK("expected an unsupported-size refusal");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::unsupported_size);
    }
  };
  expect_unsupported(make_inst(
      Problem::quadratic_congruences,
      Json{{"a", 1}, {"b", 3}, {"c", 30'000'002}}));
  expect_unsupported(make_inst(
      Problem::qde, Json{{"a", 1}, {"b", 1}, {"c", 410'000'000'000'000LL}}));
  Json strings = Json::array();
  for (char a = 'a'; a <= 'z'; ++a)
    for (char b = 'a'; b <= 'b'; ++b)
      strings.push_back(std::string{a, b, 'x'});
  expect_unsupported(make_inst(Problem::superstring,
                               Json{{"strings", strings}, {"max_length", 500}}));
  expect_unsupported(make_inst(
      Problem::clique,
      Json{{"num_nodes", 5000}, {"k", 3}, {"edges", Json::array()}}));
}

TEST_CASE("hand-built no-instances are settled exactly") {
  // triangle-free path cannot close a hamiltonian cycle
  Instance hc = make_inst(
      Problem::hamiltonian_cycle,
      Json{{"num_nodes", 3},
           {"directed", false},
           {"edges", Json::array({Json::array({0, 1}), Json::array({1, 2})})}});
  CHECK(oracle::solve_exact(hc).status == OracleStatus::no_solution);

  // any tour over 4 cities at flat distance 10 costs exactly 40
  Json dist = Json::array();
  for (int i = 0; i < 4; ++i) {
    Json r = Json::array({10, 10, 10, 10});
    r[i] = 0;
    dist.push_back(r);
  }
  Instance tsp = make_inst(Problem::tsp, Json{{"num_cities", 4},
                                              {"target_length", 39},
                                              {"distances", dist}});
  CHECK(oracle::solve_exact(tsp).status == OracleStatus::no_solution);
  tsp.payload["target_length"] = 40;
  OracleResult res = oracle::solve_exact(tsp);
  REQUIRE(res.status == OracleStatus::found);
  CHECK(gym::verify_solution(tsp, res.solution).ok);

  // an odd total cannot split into equal halves
  Instance part = make_inst(Problem::partition,
                            Json{{"sizes", Json::array({1, 1, 1})}});
  CHECK(oracle::solve_exact(part).status == OracleStatus::no_solution);

  // x^2 stays 1 or 0 mod 4, never 3
  Instance qc = make_inst(Problem::quadratic_congruences,
                          Json{{"a", 3}, {"b", 4}, {"c", 5}});
  CHECK(oracle::solve_exact(qc).status == OracleStatus::no_solution);

  // 1 + 2y == 4 has no integer y
  Instance qde =
      make_inst(Problem::qde, Json{{"a", 1}, {"b", 2}, {"c", 4}});
  CHECK(oracle::solve_exact(qde).status == OracleStatus::no_solution);
}

TEST_CASE("hand-built yes-instances produce verifying witnesses") {
  Instance qde = make_inst(Problem::qde, Json{{"a", 2}, {"b", 3}, {"c", 113}});
  OracleResult r1 = oracle::solve_exact(qde);
  REQUIRE(r1.status == OracleStatus::found);
  CHECK(gym::verify_solution(qde, r1.solution).ok);

  Instance qc = make_inst(Problem::quadratic_congruences,
                          Json{{"a", 4}, {"b", 5}, {"c", 4}});
  OracleResult r2 = oracle::solve_exact(qc);
  REQUIRE(r2.status == OracleStatus::found);
  CHECK(r2.solution.get<int64_t>() == 2);
  CHECK(gym::verify_solution(qc, r2.solution).ok);

  Instance ss = make_inst(Problem::subset_sum,
                          Json{{"sizes", Json::array({3, 1, 4, 2})}, {"target", 6}});
  OracleResult r3 = oracle::solve_exact(ss);
  REQUIRE(r3.status == OracleStatus::found);
  CHECK(gym::verify_solution(ss, r3.solution).ok);

  // an edgeless graph still needs a non-empty cover list
  Instance vc = make_inst(Problem::vertex_cover,
                          Json{{"num_nodes", 3},
                               {"cover_size", 1},
                               {"edges", Json::array()}});
  OracleResult r4 = oracle::solve_exact(vc);
  REQUIRE(r4.status == OracleStatus::found);
  CHECK(gym::verify_solution(vc, r4.solution).ok);

  Instance sup = make_inst(
      Problem::superstring,
      Json{{"strings", Json::array({"abc", "bcd", "cde"})}, {"max_length", 5}});
  OracleResult r5 = oracle::solve_exact(sup);
  REQUIRE(r5.status == OracleStatus::found);
  CHECK(r5.solution.get<std::string>() == "abcde");
  sup.payload["max_length"] = 4;
  CHECK(oracle::solve_exact(sup).status == OracleStatus::no_solution);
}

TEST_CASE("the standalone checker agrees with the verifier on planted and mutated answers") {
  for (const auto& [p, ladder] : builtin_ladders()) {
    for (int level : {1, 2}) {
      for (uint64_t seed : {7u, 8u}) {
        auto pair = gym::generate_instance(p, ladder.at(level), seed);
        pair.instance.level = level;
        CAPTURE(problem_name(p));
        CAPTURE(level);
        CAPTURE(seed);

        std::vector<Json> pool{pair.planted};
        for (Json& m : mutants_of(pair.planted)) pool.push_back(std::move(m));
        pool.push_back(Json());
        pool.push_back(Json(42));
        pool.push_back(Json("xyz"));
        pool.push_back(Json::array());
        pool.push_back(Json::object());

        for (const Json& cand : pool) {
          const bool gym_ok = gym::verify_solution(pair.instance, cand).ok;
          const bool oracle_ok = oracle::check_solution(pair.instance, cand);
          CAPTURE(cand.dump());
          CHECK(gym_ok == oracle_ok);
        }
      }
    }
  }
}

TEST_CASE("the checker never throws on junk, whatever the problem") {
  const std::vector<Json> junk = {
      Json(), Json(1.5), Json(true), Json("??"), Json::array({Json::array()}),
      Json{{"k", 1}}, Json::array({1.0, 2.0}), Json::array({Json(nullptr)})};
  for (const auto& [p, ladder] : builtin_ladders()) {
    auto pair = gym::generate_instance(p, ladder.at(1), 19);
    for (const Json& cand : junk) {
      CAPTURE(problem_name(p));
      CAPTURE(cand.dump());
      CHECK_FALSE(oracle::check_solution(pair.instance, cand));
    }
  }
}
