#include <array>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "problems.hpp"

namespace nppc::gym::detail {

// ---- 3SAT ----------------------------------------------------------------
// Plant an assignment, then build every clause from three distinct variables
// with random signs; a clause that misses the assignment gets one uniformly
// chosen literal flipped to agree.

Json gen_three_sat(const GenConfig& config, uint64_t seed, SolutionJson& planted) {
  const int64_t n = config.geti("num_variables");
  const int64_t m = config.geti("num_clauses");
  if (n < 3) infeasible("3SAT clauses need three distinct variables, so num_variables >= 3");
  Rng rng(seed);

  std::vector<bool> alpha(static_cast<size_t>(n));
  for (size_t i = 0; i < alpha.size(); ++i) alpha[i] = rng.coin();

  Json clauses = Json::array();
  for (int64_t c = 0; c < m; ++c) {
    std::vector<int64_t> vars = sample_indices(n, 3, rng);
    std::array<int64_t, 3> lits{};
    bool satisfied = false;
    for (int i = 0; i < 3; ++i) {
      bool positive = rng.coin();
      lits[static_cast<size_t>(i)] = positive ? vars[static_cast<size_t>(i)] + 1
                                              : -(vars[static_cast<size_t>(i)] + 1);
      satisfied = satisfied || (positive == alpha[static_cast<size_t>(vars[static_cast<size_t>(i)])]);
    }
    if (!satisfied) {
      size_t i = static_cast<size_t>(rng.below(3));
      lits[i] = alpha[static_cast<size_t>(vars[i])] ? vars[i] + 1 : -(vars[i] + 1);
    }
    clauses.push_back(Json::array({lits[0], lits[1], lits[2]}));
  }

  Json payload = Json::object();
  payload["num_variables"] = n;
  payload["clauses"] = std::move(clauses);

  planted = Json::array();
  for (bool b : alpha) planted.push_back(b);
  return payload;
}

VerifyOutcome verify_three_sat(const Json& payload, const Json& candidate) {
  auto bits = cand_bool_list(candidate);
  if (!bits) return verification_error("Wrong output format.");
  const int64_t n = payload.at("num_variables").get<int64_t>();
  if (static_cast<int64_t>(bits->size()) != n)
    return problem_error(Problem::three_sat, 1);
  for (const auto& clause : payload.at("clauses")) {
    bool satisfied = false;
    for (const auto& lj : clause) {
      int64_t lit = lj.get<int64_t>();
      size_t var = static_cast<size_t>(std::llabs(lit) - 1);
      if ((lit > 0) == (*bits)[var]) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return problem_error(Problem::three_sat, 2);
  }
  return ok_outcome();
}

void validate_three_sat(const Json& payload) {
  const int64_t n = req_int(payload, "num_variables", 1, kMaxCount);
  const Json& clauses = req_array(payload, "clauses");
  size_t ci = 0;
  for (const auto& clause : clauses) {
    std::string where = "clauses[" + std::to_string(ci++) + "]";
    if (!clause.is_array() || clause.size() != 3)
      schema_fail(where, "a clause lists exactly 3 literals");
    std::set<int64_t> vars;
    for (const auto& lj : clause) {
      int64_t lit = as_checked_int(lj, where, -n, n);
      if (lit == 0) schema_fail(where, "literal 0 is not allowed");
      vars.insert(std::llabs(lit));
    }
    if (vars.size() != 3) schema_fail(where, "clause variables must be distinct");
  }
}

// ---- Hitting String --------------------------------------------------------
// Plant a binary string, then force one uniformly chosen position of every
// pattern to the planted bit so each pattern agrees somewhere.

Json gen_hitting_string(const GenConfig& config, uint64_t seed,
                        SolutionJson& planted) {
  const int64_t n = config.geti("n");
  const int64_t m = config.geti("m");
  Rng rng(seed);

  std::string x;
  for (int64_t i = 0; i < n; ++i) x += rng.coin() ? '1' : '0';

  static const char kSymbols[3] = {'0', '1', '*'};
  std::set<std::string> seen;
  Json strings = Json::array();
  for (int64_t j = 0; j < m; ++j) {
    std::string s;
    int attempts = 0;
    do {
      if (++attempts > kRetryBudget)
        infeasible("cannot draw " + std::to_string(m) +
                   " distinct patterns of length " + std::to_string(n));
      s.clear();
      for (int64_t i = 0; i < n; ++i)
        s += kSymbols[rng.below(3)];
      size_t pos = static_cast<size_t>(rng.below(static_cast<uint64_t>(n)));
      s[pos] = x[pos];
    } while (!seen.insert(s).second);
    strings.push_back(s);
  }

  Json payload = Json::object();
  payload["n"] = n;
  payload["strings"] = std::move(strings);
  planted = x;
  return payload;
}

VerifyOutcome verify_hitting_string(const Json& payload, const Json& candidate) {
  auto s = cand_string(candidate);
  if (!s) return verification_error("Wrong output format.");
  const int64_t n = payload.at("n").get<int64_t>();
  if (static_cast<int64_t>(s->size()) != n)
    return problem_error(Problem::hitting_string, 1);
  for (char ch : *s)
    if (ch != '0' && ch != '1') return problem_error(Problem::hitting_string, 2);
  for (const auto& pj : payload.at("strings")) {
    const std::string pattern = pj.get<std::string>();
    bool agrees = false;
    for (size_t i = 0; i < pattern.size(); ++i) {
      if (pattern[i] == (*s)[i]) {
        agrees = true;
        break;
      }
    }
    if (!agrees) return problem_error(Problem::hitting_string, 3);
  }
  return ok_outcome();
}

void validate_hitting_string(const Json& payload) {
  const int64_t n = req_int(payload, "n", 1, kMaxCount);
  const Json& strings = req_array(payload, "strings");
  size_t si = 0;
  for (const auto& sj : strings) {
    std::string where = "strings[" + std::to_string(si++) + "]";
    if (!sj.is_string()) schema_fail(where, "not a string");
    const std::string s = sj.get<std::string>();
    if (static_cast<int64_t>(s.size()) != n)
      schema_fail(where, "pattern length must equal n");
    for (char ch : s)
      if (ch != '0' && ch != '1' && ch != '*')
        schema_fail(where, "patterns use the alphabet {0, 1, *}");
  }
}

}  // namespace nppc::gym::detail
