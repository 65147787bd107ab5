#pragma once

#include <map>

#include "nppc/config.hpp"
#include "nppc/json.hpp"
#include "nppc/problem.hpp"

namespace nppc {

// Difficulty ladder: level -> generator config, contiguous from 1.
using DifficultyLadder = std::map<int, GenConfig>;

// The published ladders, compiled in verbatim.
const std::map<Problem, DifficultyLadder>& builtin_ladders();

// Builtin ladders plus optional user overrides. Override documents mirror
// the builtin nesting: {"<problem>": {"<level>": {param: value, ...}}};
// overriding replaces whole levels and may extend past the published range
// as long as levels stay contiguous from 1.
class Ladders {
 public:
  Ladders();

  void apply_overrides(const Json& doc);  // throws parse_error/unknown_problem

  const DifficultyLadder& ladder(Problem p) const;
  const GenConfig& level_config(Problem p, int level) const;  // throws unknown_level
  int max_level(Problem p) const;

 private:
  std::map<Problem, DifficultyLadder> table_;
};

}  // namespace nppc
