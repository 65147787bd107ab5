#include "nppc/outcome.hpp"

#include "nppc/error.hpp"

namespace nppc {

std::string format_error(const ErrorCode& code, std::optional<Problem> problem) {
  switch (code.category) {
    case ErrorCategory::json_error:
      return "JSON_ERROR";
    case ErrorCategory::verification_error:
      return "VERIFICATION_ERROR";
    case ErrorCategory::problem_error:
      break;
  }
  std::string prefix = problem ? problem_name(*problem) : std::string("PROBLEM");
  return prefix + " ERROR " + std::to_string(code.code);
}

ParsedError parse_error_text(const std::string& text) {
  if (text == "JSON_ERROR" || text == "JSON ERROR")
    return {ErrorCode{ErrorCategory::json_error, 0}, std::nullopt};
  if (text == "VERIFICATION_ERROR" || text == "VERIFICATION ERROR")
    return {ErrorCode{ErrorCategory::verification_error, 0}, std::nullopt};

  const std::string marker = " ERROR ";
  auto pos = text.rfind(marker);
  if (pos == std::string::npos)
    fail(Errc::parse_error, "unrecognized error code text: " + text);
  std::string head = text.substr(0, pos);
  std::string tail = text.substr(pos + marker.size());
  int code = 0;
  try {
    size_t used = 0;
    code = std::stoi(tail, &used);
    if (used != tail.size() || code < 1) throw std::invalid_argument(tail);
  } catch (const std::logic_error&) {
    fail(Errc::parse_error, "bad error code number in: " + text);
  }
  std::optional<Problem> problem;
  if (head != "PROBLEM") {
    auto p = try_parse_problem(head);
    if (!p) fail(Errc::parse_error, "unknown problem in error code: " + text);
    problem = p;
  }
  return {ErrorCode{ErrorCategory::problem_error, code}, problem};
}

}  // namespace nppc
