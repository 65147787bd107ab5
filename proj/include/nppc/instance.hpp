#pragma once

#include <cstdint>
#include <string>

#include "nppc/json.hpp"
#include "nppc/problem.hpp"

namespace nppc {

// One generated task instance. The payload is the problem-specific wire
// document (always JSON maps/lists/strings/integers/bools, never floats).
struct Instance {
  Problem problem = Problem::three_sat;
  int level = 0;
  uint64_t seed = 0;
  Json payload;
};

// Solutions travel as bare JSON payloads (list / string / integer).
using SolutionJson = Json;

// Canonical JSON bytes: UTF-8, keys sorted lexicographically, no
// insignificant whitespace, no floating-point numbers anywhere.
std::string canonical_dump(const Json& doc);          // throws schema_violation
Json canonical_parse_json(const std::string& bytes);  // throws parse_error

// Full instance record round-trip; validates the payload against the
// problem's schema on both directions.
std::string canonical_serialize(const Instance& inst);
Instance canonical_parse(const std::string& bytes);

}  // namespace nppc
