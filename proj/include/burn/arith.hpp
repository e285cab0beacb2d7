#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace burn {

/// Lattice-point counts. All arithmetic on counts is overflow-checked.
using Count = std::int64_t;

Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);
Count checked_pow(Count base, int exponent);

/// C(n, k); zero when k < 0 or k > n.
Count binomial(std::int64_t n, std::int64_t k);

std::int64_t isqrt_floor(std::int64_t x);
std::int64_t isqrt_ceil(std::int64_t x);

std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

/// Exact ratio of two small integers, kept reduced with a positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);

  /// Accepts "3", "-2", "3/2", "1.6", "0.125".
  static Rational parse(std::string_view text);
  static Rational from_double(double value);

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

bool operator<(const Rational& a, const Rational& b);
inline bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
Rational operator*(const Rational& a, const Rational& b);

/// floor(c * x^p) for c >= 0, x >= 0, p > 0. Exact whenever the comparison
/// m^b * c.den^b <=> c.num^b * x^a fits in 128 bits (p = a/b); otherwise long double.
std::int64_t floor_scaled_power(const Rational& c, std::int64_t x, const Rational& p);
std::int64_t ceil_scaled_power(const Rational& c, std::int64_t x, const Rational& p);

/// Decimal expansion of num/den (0 <= num <= den) truncated to `digits` places.
std::string ratio_decimal(Count num, Count den, int digits);

}  // namespace burn
