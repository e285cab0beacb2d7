#include "burn/growth.hpp"

#include <bit>

#include "burn/error.hpp"

namespace burn {

namespace {

std::int64_t floor_log2(std::int64_t n) { return 63 - std::countl_zero(static_cast<std::uint64_t>(n)); }

}  // namespace

Schedule Schedule::linear(Rational c) {
  if (c < Rational(1)) throw ConfigError("linear growth needs c >= 1");
  Schedule s;
  s.kind_ = Kind::linear;
  s.c_ = c;
  return s;
}

Schedule Schedule::power(Rational c, Rational p) {
  if (c.num <= 0 || p.num <= 0) throw ConfigError("power growth needs c > 0 and p > 0");
  Schedule s;
  s.kind_ = Kind::power;
  s.c_ = c;
  s.p_ = p;
  return s;
}

Schedule Schedule::step_log2() {
  Schedule s;
  s.kind_ = Kind::step_log2;
  return s;
}

Schedule Schedule::double_exp_pow(Rational p) {
  if (p.num <= 0) throw ConfigError("double_exp_pow needs p > 0");
  Schedule s;
  s.kind_ = Kind::double_exp_pow;
  s.p_ = p;
  return s;
}

Schedule Schedule::table(std::vector<std::int64_t> values) {
  if (values.empty()) throw ConfigError("empty growth table");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0) throw ConfigError("growth table entries must be nonnegative");
    if (i && values[i] < values[i - 1]) throw ConfigError("growth table must be nondecreasing");
  }
  Schedule s;
  s.kind_ = Kind::table;
  s.values_ = std::move(values);
  return s;
}

Schedule Schedule::constant(std::int64_t value) {
  if (value < 0) throw ConfigError("constant wall must be nonnegative");
  Schedule s;
  s.kind_ = Kind::constant;
  s.value_ = value;
  return s;
}

std::int64_t Schedule::at(std::int64_t n) const {
  if (n < 0) throw ConfigError("schedule evaluated at negative time");
  switch (kind_) {
    case Kind::linear:
      return ceil_div(checked_mul(c_.num, n), c_.den);
    case Kind::power:
      return ceil_scaled_power(c_, n, p_);
    case Kind::step_log2:
      return n == 0 ? 0 : std::int64_t{1} << floor_log2(n);
    case Kind::double_exp_pow: {
      if (n < 2) return 0;
      const std::int64_t j = floor_log2(floor_log2(n));
      const std::int64_t base = std::int64_t{1} << (std::int64_t{1} << j);
      return floor_scaled_power(Rational(1), base, p_);
    }
    case Kind::table:
      if (static_cast<std::size_t>(n) >= values_.size())
        throw ConfigError("growth table exhausted at n=" + std::to_string(n));
      return values_[static_cast<std::size_t>(n)];
    case Kind::constant:
      return value_;
  }
  return 0;
}

std::string Schedule::describe() const {
  switch (kind_) {
    case Kind::linear: return "linear(" + c_.str() + ")";
    case Kind::power: return "power(" + c_.str() + "," + p_.str() + ")";
    case Kind::step_log2: return "step_log2";
    case Kind::double_exp_pow: return "double_exp_pow(" + p_.str() + ")";
    case Kind::table: return "table[" + std::to_string(values_.size()) + "]";
    case Kind::constant: return "constant(" + std::to_string(value_) + ")";
  }
  return "?";
}

GrowthSpec GrowthSpec::symmetric_box(std::size_t d, Schedule f) {
  if (d < 1) throw ConfigError("growth dimension must be >= 1");
  GrowthSpec g;
  g.axes.assign(d, AxisGrowth{f, f});
  g.symmetric = true;
  return g;
}

GrowthSpec GrowthSpec::quadrant(std::size_t d, Schedule f) {
  if (d < 1) throw ConfigError("growth dimension must be >= 1");
  GrowthSpec g;
  g.axes.assign(d, AxisGrowth{Schedule::constant(0), f});
  g.symmetric = false;
  return g;
}

Box box_at(const GrowthSpec& growth, std::int64_t n) {
  if (n < 0) throw ConfigError("box_at: negative time");
  std::vector<Interval> axes;
  axes.reserve(growth.dim());
  for (const auto& ax : growth.axes) axes.push_back(Interval{-ax.lower.at(n), ax.upper.at(n)});
  return Box(std::move(axes));
}

bool free_spread_certificate(const GrowthSpec& growth, std::int64_t n0, std::int64_t n1) {
  if (n0 < 1) throw ConfigError("free_spread_certificate needs n0 >= 1");
  auto side_ok = [&](const Schedule& s) {
    bool always_grows = true;
    bool never_moves = true;
    for (std::int64_t n = n0; n <= n1; ++n) {
      const std::int64_t prev = s.at(n - 1);
      const std::int64_t cur = s.at(n);
      if (cur < prev + 1) always_grows = false;
      if (cur != prev) never_moves = false;
      if (!always_grows && !never_moves) return false;
    }
    return true;
  };
  for (const auto& ax : growth.axes)
    if (!side_ok(ax.lower) || !side_ok(ax.upper)) return false;
  return true;
}

}  // namespace burn
