#pragma once

// Grid-extent schedules f(n) and the boxes they generate.

#include <cstdint>
#include <string>
#include <vector>

#include "burn/arith.hpp"
#include "burn/lattice.hpp"

namespace burn {

class Schedule {
 public:
  enum class Kind { linear, power, step_log2, double_exp_pow, table, constant };

  /// ceil(c n), c >= 1.
  static Schedule linear(Rational c);
  /// ceil(c n^p), c > 0, p > 0.
  static Schedule power(Rational c, Rational p);
  /// 2^floor(log2 n); 0 at n = 0.
  static Schedule step_log2();
  /// floor((2^(2^floor(log2 log2 n)))^p); 0 for n < 2.
  static Schedule double_exp_pow(Rational p);
  /// values[n]; exhausting the table is an error.
  static Schedule table(std::vector<std::int64_t> values);
  /// A fixed wall.
  static Schedule constant(std::int64_t value);

  std::int64_t at(std::int64_t n) const;

  Kind kind() const { return kind_; }
  const Rational& c() const { return c_; }
  const Rational& p() const { return p_; }
  const std::vector<std::int64_t>& values() const { return values_; }
  std::int64_t value() const { return value_; }
  std::string describe() const;

  friend bool operator==(const Schedule&, const Schedule&) = default;

 private:
  Kind kind_ = Kind::constant;
  Rational c_{1};
  Rational p_{1};
  std::vector<std::int64_t> values_;
  std::int64_t value_ = 0;
};

/// One axis spans [-lower(n), upper(n)].
struct AxisGrowth {
  Schedule lower;
  Schedule upper;
  friend bool operator==(const AxisGrowth&, const AxisGrowth&) = default;
};

struct GrowthSpec {
  std::vector<AxisGrowth> axes;
  bool symmetric = true;

  /// [-f(n), f(n)]^d.
  static GrowthSpec symmetric_box(std::size_t d, Schedule f);
  /// [0, f(n)]^d, the quadrant grids Q_n.
  static GrowthSpec quadrant(std::size_t d, Schedule f);

  std::size_t dim() const { return axes.size(); }
  friend bool operator==(const GrowthSpec&, const GrowthSpec&) = default;
};

/// The grid at time n. Throws ConfigError when a table schedule is exhausted.
Box box_at(const GrowthSpec& growth, std::int64_t n);

/// True iff on every axis side over [n0, n1] the wall either moves out by at
/// least one cell at every step or never moves. Under this condition, and with
/// every activator inside its box, B_n is the union of the clipped balls
/// B_1(v_k, n - k) ∩ box_n.
bool free_spread_certificate(const GrowthSpec& growth, std::int64_t n0, std::int64_t n1);

}  // namespace burn
