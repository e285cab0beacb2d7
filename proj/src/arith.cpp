#include "burn/arith.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <optional>

#include "burn/error.hpp"

namespace burn {

namespace {

__extension__ using u128 = unsigned __int128;
__extension__ using i128 = __int128;

std::optional<u128> mul128(u128 a, u128 b) {
  if (a != 0 && b > static_cast<u128>(-1) / a) return std::nullopt;
  return a * b;
}

std::optional<u128> pow128(u128 base, std::int64_t exponent) {
  u128 result = 1;
  for (std::int64_t i = 0; i < exponent; ++i) {
    auto next = mul128(result, base);
    if (!next) return std::nullopt;
    result = *next;
  }
  return result;
}

// Sign of m^b * cd^b - cn^b * x^a.
int compare_power(std::int64_t m, const Rational& c, std::int64_t x, const Rational& p) {
  const std::int64_t a = p.num;
  const std::int64_t b = p.den;
  auto lhs_m = pow128(static_cast<u128>(m), b);
  auto lhs_d = pow128(static_cast<u128>(c.den), b);
  auto rhs_c = pow128(static_cast<u128>(c.num), b);
  auto rhs_x = pow128(static_cast<u128>(x), a);
  std::optional<u128> lhs, rhs;
  if (lhs_m && lhs_d) lhs = mul128(*lhs_m, *lhs_d);
  if (rhs_c && rhs_x) rhs = mul128(*rhs_c, *rhs_x);
  if (lhs && rhs) return *lhs < *rhs ? -1 : (*lhs > *rhs ? 1 : 0);
  if (lhs && !rhs) return -1;
  if (!lhs && rhs) return 1;
  // Both sides beyond 128 bits; compare logarithms.
  const long double l = b * (std::log(static_cast<long double>(m)) +
                             std::log(static_cast<long double>(c.den)));
  const long double r = b * std::log(static_cast<long double>(c.num)) +
                        a * std::log(static_cast<long double>(x));
  return l < r ? -1 : (l > r ? 1 : 0);
}

}  // namespace

Count checked_add(Count a, Count b) {
  Count out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("count addition overflow");
  return out;
}

Count checked_mul(Count a, Count b) {
  Count out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("count multiplication overflow");
  return out;
}

Count checked_pow(Count base, int exponent) {
  Count out = 1;
  for (int i = 0; i < exponent; ++i) out = checked_mul(out, base);
  return out;
}

Count binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  i128 c = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > INT64_MAX) throw OverflowError("binomial overflow");
  }
  return static_cast<Count>(c);
}

std::int64_t isqrt_floor(std::int64_t x) {
  if (x < 0) throw ConfigError("isqrt of negative value");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(x)));
  while (r > 0 && static_cast<i128>(r) * r > x) --r;
  while (static_cast<i128>(r + 1) * (r + 1) <= x) ++r;
  return r;
}

std::int64_t isqrt_ceil(std::int64_t x) {
  const std::int64_t r = isqrt_floor(x);
  return r * r == x ? r : r + 1;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw ConfigError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
      throw ConfigError("cannot parse number '" + std::string(text) + "'");
    return v;
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    const bool negative = !whole.empty() && whole.front() == '-';
    if (negative) whole.remove_prefix(1);
    if (frac.size() > 15) frac = frac.substr(0, 15);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::int64_t w = whole.empty() ? 0 : parse_int(whole);
    const std::int64_t f = frac.empty() ? 0 : parse_int(frac);
    const std::int64_t n = checked_add(checked_mul(w, scale), f);
    return Rational(negative ? -n : n, scale);
  }
  return Rational(parse_int(text));
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw ConfigError("non-finite rational");
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
  if (ec != std::errc{}) throw ConfigError("cannot format number");
  return parse(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<i128>(a.num) * b.den < static_cast<i128>(b.num) * a.den;
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
}

std::int64_t floor_scaled_power(const Rational& c, std::int64_t x, const Rational& p) {
  if (c.num < 0 || x < 0 || p.num <= 0) throw ConfigError("scaled power needs c >= 0, x >= 0, p > 0");
  if (c.num == 0 || x == 0) return 0;
  const long double approx =
      c.to_double() * std::pow(static_cast<long double>(x), static_cast<long double>(p.to_double()));
  if (!(approx < 9.0e18L)) throw OverflowError("scaled power exceeds 64 bits");
  auto m = static_cast<std::int64_t>(std::floor(approx));
  while (m > 0 && compare_power(m, c, x, p) > 0) --m;
  while (compare_power(m + 1, c, x, p) <= 0) ++m;
  return m;
}

std::int64_t ceil_scaled_power(const Rational& c, std::int64_t x, const Rational& p) {
  const std::int64_t m = floor_scaled_power(c, x, p);
  if (c.num == 0 || x == 0) return 0;
  return compare_power(m, c, x, p) == 0 ? m : m + 1;
}

std::string ratio_decimal(Count num, Count den, int digits) {
  if (den <= 0 || num < 0 || num > den) throw ConfigError("ratio_decimal needs 0 <= num <= den");
  std::string out = num == den ? "1." : "0.";
  i128 rem = num == den ? 0 : num;
  for (int i = 0; i < digits; ++i) {
    rem *= 10;
    out.push_back(static_cast<char>('0' + static_cast<int>(rem / den)));
    rem %= den;
  }
  return out;
}

}  // namespace burn
