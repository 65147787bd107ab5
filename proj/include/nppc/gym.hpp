#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nppc/config.hpp"
#include "nppc/instance.hpp"
#include "nppc/outcome.hpp"

namespace nppc::gym {

struct ProblemDescriptor {
  Problem id = Problem::three_sat;
  std::string name;          // canonical short name, used by the CLI and error codes
  std::string display_name;  // long form used in problem statements
  bool core = false;
  std::string description;      // statement shown to models (Name/Input/Question)
  std::string instance_schema;  // human-readable wire contract for the payload
  std::string solution_schema;  // wire contract for candidate solutions
  std::vector<std::string> error_codes;  // 1-based semantic error descriptions
};

struct GeneratedPair {
  Instance instance;
  SolutionJson planted;  // one solution that is guaranteed to verify
};

// Registry order: the twelve core problems first, then the extension set.
// Immutable after startup.
const std::vector<ProblemDescriptor>& list_problems();
const ProblemDescriptor& descriptor(Problem p);

// Deterministic in (config, seed). Throws config_mismatch on bad parameter
// names/types and infeasible_config when the requested counts cannot be met.
GeneratedPair generate_instance(Problem p, const GenConfig& config, uint64_t seed);

// Total, never throws: any candidate JSON gets an outcome. Error codes are
// assigned in the order listed in the problem's descriptor, format errors
// first.
VerifyOutcome verify_solution(const Instance& inst, const SolutionJson& candidate);

// Structural payload validation; throws schema_violation with a field path.
void validate_instance(const Instance& inst);

}  // namespace nppc::gym
