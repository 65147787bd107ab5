#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace nppc {

enum class Errc {
  unknown_problem,
  unknown_level,
  config_mismatch,
  infeasible_config,
  schema_violation,
  problem_mismatch,
  empty_input,
  missing_gamma,
  empty_stratum,
  insufficient_data,
  unpriced_model,
  unsupported_size,
  io_error,
  parse_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string what)
      : std::runtime_error(std::move(what)), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace nppc
