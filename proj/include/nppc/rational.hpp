#pragma once

#include <cstdint>
#include <string>

namespace nppc {

// Exact rational in lowest terms, den > 0. Generator configs store
// probabilities this way so configs stay hashable and serialization stays
// canonical (no floating point anywhere in configs or payloads).
struct Rational {
  int64_t num = 0;
  int64_t den = 1;

  bool operator==(const Rational&) const = default;
  bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
};

Rational make_rational(int64_t num, int64_t den);

// Exact conversion of short decimal literals: 0.3 -> 3/10, 0.25 -> 1/4.
// Rejects doubles that are not <= 9 decimal digit literals.
Rational rational_from_decimal(double v);

std::string to_string(const Rational& r);
double as_double(const Rational& r);

}  // namespace nppc
