#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>

#include "nppc/json.hpp"
#include "nppc/rational.hpp"

namespace nppc {

using ConfigValue = std::variant<int64_t, bool, Rational>;

// One generator parameter set, keyed by the problem's published parameter
// names (num_variables/num_clauses for 3SAT, num_cities/target_length for
// TSP, ...). Integer parameters are >= 1; probabilities are exact rationals
// in (0, 1].
struct GenConfig {
  std::map<std::string, ConfigValue> params;

  bool has(const std::string& name) const;
  int64_t geti(const std::string& name) const;   // throws config_mismatch
  bool getb(const std::string& name) const;      // throws config_mismatch
  Rational getr(const std::string& name) const;  // throws config_mismatch

  bool operator==(const GenConfig&) const = default;
};

Json config_to_json(const GenConfig& cfg);
GenConfig config_from_json(const Json& doc);  // throws parse_error
std::string config_to_string(const GenConfig& cfg);

}  // namespace nppc
