#include "nppc/rational.hpp"

#include <cmath>
#include <numeric>

#include "nppc/error.hpp"

namespace nppc {

Rational make_rational(int64_t num, int64_t den) {
  if (den == 0) fail(Errc::parse_error, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

Rational rational_from_decimal(double v) {
  double scale = 1.0;
  for (int digits = 0; digits <= 9; ++digits, scale *= 10.0) {
    double scaled = v * scale;
    double rounded = std::round(scaled);
    if (std::abs(scaled - rounded) <= 1e-9 * std::max(1.0, std::abs(scaled))) {
      int64_t den = 1;
      for (int i = 0; i < digits; ++i) den *= 10;
      return make_rational(static_cast<int64_t>(rounded), den);
    }
  }
  fail(Errc::parse_error,
       "probability is not a short decimal literal: " + std::to_string(v));
}

std::string to_string(const Rational& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

double as_double(const Rational& r) {
  return static_cast<double>(r.num) / static_cast<double>(r.den);
}

}  // namespace nppc
