#pragma once

#include <optional>
#include <string>

#include "nppc/problem.hpp"

namespace nppc {

// json_error: no JSON found in the reply or it failed to parse.
// verification_error: solution shape/type mismatch with no dedicated code.
// problem_error: problem-specific semantic failure, 1-based code.
enum class ErrorCategory { json_error, verification_error, problem_error };

struct ErrorCode {
  ErrorCategory category = ErrorCategory::verification_error;
  int code = 0;  // problem_error only

  bool operator==(const ErrorCode&) const = default;
};

struct VerifyOutcome {
  bool ok = false;
  std::optional<ErrorCode> error;
  std::string message;  // reason when !ok, empty otherwise
};

// Textual forms: "JSON_ERROR", "VERIFICATION_ERROR", "<problem> ERROR <n>".
std::string format_error(const ErrorCode& code,
                         std::optional<Problem> problem = {});

struct ParsedError {
  ErrorCode code;
  std::optional<Problem> problem;
};

ParsedError parse_error_text(const std::string& text);  // throws parse_error

}  // namespace nppc
