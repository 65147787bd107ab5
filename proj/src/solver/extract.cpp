#include <string>
#include <vector>

#include "nppc/solver.hpp"

// The three fallback patterns, in order:
//   1. ```json\n(.*?)\n```          (dot matches newlines)
//   2. json\s*({[^{}]*})
//   3. \{[^{}]*\}
// The first stage that matches anything wins and its LAST match is taken.
// The scanners below reproduce the left-to-right, non-overlapping match
// semantics of those patterns exactly (including lazy termination in stage 1
// and the bump-along restart after a failed partial match in 2 and 3)
// without a regex engine, which keeps arbitrarily long replies safe.

namespace nppc::solver {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::vector<std::string> fenced_blocks(const std::string& s) {
  static const std::string open = "```json\n";
  static const std::string close = "\n```";
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    size_t a = s.find(open, pos);
    if (a == std::string::npos) break;
    size_t body = a + open.size();
    size_t b = s.find(close, body);  // lazy: shortest body
    if (b == std::string::npos) break;
    out.push_back(s.substr(body, b - body));
    pos = b + close.size();
  }
  return out;
}

// From `start`, skip \s* and accept a {...} run with no nested braces.
// Returns the end position (one past '}') or npos.
size_t brace_object_after(const std::string& s, size_t start,
                          std::string& object) {
  size_t i = start;
  while (i < s.size() && is_space(s[i])) ++i;
  if (i >= s.size() || s[i] != '{') return std::string::npos;
  size_t j = i + 1;
  while (j < s.size() && s[j] != '{' && s[j] != '}') ++j;
  if (j >= s.size() || s[j] != '}') return std::string::npos;
  object = s.substr(i, j - i + 1);
  return j + 1;
}

std::vector<std::string> prefixed_objects(const std::string& s) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    size_t a = s.find("json", pos);
    if (a == std::string::npos) break;
    std::string obj;
    size_t end = brace_object_after(s, a + 4, obj);
    if (end == std::string::npos) {
      pos = a + 1;  // failed attempt: resume at the next position
    } else {
      out.push_back(std::move(obj));
      pos = end;  // non-overlapping: resume after the full match
    }
  }
  return out;
}

std::vector<std::string> bare_objects(const std::string& s) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    size_t a = s.find('{', pos);
    if (a == std::string::npos) break;
    size_t j = a + 1;
    while (j < s.size() && s[j] != '{' && s[j] != '}') ++j;
    if (j < s.size() && s[j] == '}') {
      out.push_back(s.substr(a, j - a + 1));
      pos = j + 1;
    } else if (j < s.size()) {
      pos = j;  // inner '{': the next attempt starts there
    } else {
      break;
    }
  }
  return out;
}

}  // namespace

std::string strip_json_comments(const std::string& text) {
  // Plain text edits, blind to string literals, applied in this order.
  std::string s = text;
  size_t pos = 0;
  while ((pos = s.find("//", pos)) != std::string::npos) {
    size_t eol = s.find('\n', pos);
    if (eol == std::string::npos) eol = s.size();
    s.erase(pos, eol - pos);
  }
  pos = 0;
  while ((pos = s.find("/*", pos)) != std::string::npos) {
    size_t end = s.find("*/", pos + 2);  // lazy: nearest terminator
    if (end == std::string::npos) break;
    s.erase(pos, end + 2 - pos);
  }
  return s;
}

Extraction extract_solution(const std::string& response_text) {
  std::vector<std::string> matches = fenced_blocks(response_text);
  if (matches.empty()) matches = prefixed_objects(response_text);
  if (matches.empty()) matches = bare_objects(response_text);
  if (matches.empty()) return {std::nullopt, "No JSON found in the text."};

  const std::string json_str = strip_json_comments(matches.back());
  Json data = Json::parse(json_str, nullptr, /*allow_exceptions=*/false);
  if (data.is_discarded())
    return {std::nullopt,
            "Error parsing JSON or answer field: invalid JSON"};
  if (!data.is_object() || !data.contains("solution"))
    return {std::nullopt, "Error parsing JSON or answer field: 'solution'"};
  return {data.at("solution"), ""};
}

}  // namespace nppc::solver
