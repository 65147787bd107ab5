#pragma once

#include <cstdint>

#include "nppc/instance.hpp"

namespace nppc::oracle {

// Enumeration halts at whichever cap is hit first; both must be positive.
struct OracleBudget {
  int64_t max_states = 20'000'000;
  int64_t max_millis = 10'000;
};

enum class OracleStatus { found, no_solution, exhausted };

struct OracleResult {
  OracleStatus status = OracleStatus::exhausted;
  SolutionJson solution;  // meaningful only when status == found
  int64_t states = 0;     // search nodes examined
};

// Exact brute-force search, independent of the gym verifier: found solutions
// are guaranteed to verify, no_solution means the whole space was ruled out.
// Throws unsupported_size when the enumeration is provably past max_states
// before it starts (flat sweeps and the superstring subset DP).
OracleResult solve_exact(const Instance& inst, const OracleBudget& budget = {});

// Second, independent implementation of each problem's acceptance predicate.
// Shares no code with the gym verifier; total over arbitrary candidates.
bool check_solution(const Instance& inst, const SolutionJson& candidate);

}  // namespace nppc::oracle
