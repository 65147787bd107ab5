#include <cctype>

#include "nppc/solver.hpp"

namespace nppc::solver {

namespace {

bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

char lower(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

}  // namespace

int count_aha(const std::string& reasoning_text,
              const std::vector<std::string>& lexicon) {
  int count = 0;
  for (const std::string& word : lexicon) {
    if (word.empty()) continue;
    for (size_t pos = 0; pos + word.size() <= reasoning_text.size(); ++pos) {
      bool hit = true;
      for (size_t i = 0; i < word.size(); ++i)
        if (lower(reasoning_text[pos + i]) != lower(word[i])) {
          hit = false;
          break;
        }
      if (!hit) continue;
      if (pos > 0 && word_char(reasoning_text[pos - 1])) continue;
      size_t end = pos + word.size();
      if (end < reasoning_text.size() && word_char(reasoning_text[end]))
        continue;
      ++count;
      pos = end - 1;  // matches never overlap
    }
  }
  return count;
}

}  // namespace nppc::solver
