#include "burn/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "burn/error.hpp"

namespace burn {

std::string Point::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coords[i]);
  }
  return s + ")";
}

Box::Box(std::vector<Interval> a) : axes(std::move(a)) {
  for (const auto& iv : axes)
    if (iv.empty()) throw ConfigError("box axis with lo > hi");
}

Box Box::cube(std::size_t d, std::int64_t lo, std::int64_t hi) {
  return Box(std::vector<Interval>(d, Interval{lo, hi}));
}

Count Box::cells() const {
  Count n = 1;
  for (const auto& iv : axes) n = checked_mul(n, iv.length());
  return n;
}

bool Box::contains(const Point& p) const {
  if (p.dim() != dim()) throw DimensionError("point/box dimension mismatch");
  for (std::size_t i = 0; i < axes.size(); ++i)
    if (!axes[i].contains(p[i])) return false;
  return true;
}

bool Box::contains(const Box& other) const {
  if (other.dim() != dim()) throw DimensionError("box dimension mismatch");
  for (std::size_t i = 0; i < axes.size(); ++i)
    if (other.axes[i].lo < axes[i].lo || other.axes[i].hi > axes[i].hi) return false;
  return true;
}

std::string Box::str() const {
  std::string s;
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (i) s += "x";
    s += "[" + std::to_string(axes[i].lo) + "," + std::to_string(axes[i].hi) + "]";
  }
  return s;
}

Count l1_distance(const Point& p, const Point& q) {
  if (p.dim() != q.dim()) throw DimensionError("l1_distance: dimension mismatch");
  Count s = 0;
  for (std::size_t i = 0; i < p.dim(); ++i) s = checked_add(s, std::llabs(p[i] - q[i]));
  return s;
}

Count l1_norm(const Point& p) { return l1_distance(p, Point::origin(p.dim())); }

// Choose which k coordinates are nonzero, their signs, and a composition of r
// (or of at most r) into k positive parts.
Count ball_cardinality(int d, Count r) {
  if (d < 1 || r < 0) throw ConfigError("ball_cardinality needs d >= 1, r >= 0");
  Count total = 0;
  for (int k = 0; k <= d && k <= r; ++k) {
    Count term = checked_mul(checked_mul(Count{1} << k, binomial(d, k)), binomial(r, k));
    total = checked_add(total, term);
  }
  return total;
}

Count sphere_cardinality(int d, Count r) {
  if (d < 0 || r < 0) throw ConfigError("sphere_cardinality needs d >= 0, r >= 0");
  if (r == 0) return 1;
  Count total = 0;
  for (int k = 1; k <= d && k <= r; ++k) {
    Count term = checked_mul(checked_mul(Count{1} << k, binomial(d, k)), binomial(r - 1, k - 1));
    total = checked_add(total, term);
  }
  return total;
}

namespace {

Count ball_box_axis(const Point& c, Count r, const Box& box, std::size_t axis) {
  const Interval& iv = box.axes[axis];
  const std::int64_t lo = std::max(iv.lo, c[axis] - r);
  const std::int64_t hi = std::min(iv.hi, c[axis] + r);
  if (lo > hi) return 0;
  if (axis + 1 == box.dim()) return hi - lo + 1;
  Count total = 0;
  for (std::int64_t x = lo; x <= hi; ++x)
    total = checked_add(total, ball_box_axis(c, r - std::llabs(x - c[axis]), box, axis + 1));
  return total;
}

}  // namespace

Count ball_box_count(const Point& center, Count r, const Box& box) {
  if (center.dim() != box.dim()) throw DimensionError("ball_box_count: dimension mismatch");
  if (r < 0) return 0;
  return ball_box_axis(center, r, box, 0);
}

Point round_toward_origin(const RealPoint& p) {
  if (p.dim() != 2) throw DimensionError("round_toward_origin is planar");
  if (!std::isfinite(p.coords[0]) || !std::isfinite(p.coords[1]))
    throw ConfigError("round_toward_origin: non-finite coordinate");
  const double norm = std::fabs(p.coords[0]) + std::fabs(p.coords[1]);
  // Truncating both coordinates is feasible and lies within distance < 2, so
  // the minimizer has |q_i - p_i| < 2 on each axis.
  const auto x0 = static_cast<std::int64_t>(std::floor(p.coords[0]));
  const auto y0 = static_cast<std::int64_t>(std::floor(p.coords[1]));
  Point best;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::int64_t x = x0 - 1; x <= x0 + 2; ++x) {
    for (std::int64_t y = y0 - 1; y <= y0 + 2; ++y) {
      if (static_cast<double>(std::llabs(x) + std::llabs(y)) > norm) continue;
      const double dist = std::fabs(static_cast<double>(x) - p.coords[0]) +
                          std::fabs(static_cast<double>(y) - p.coords[1]);
      // Loops run in lexicographic order, so strict improvement keeps the smallest tie.
      if (dist < best_dist) {
        best_dist = dist;
        best = Point{x, y};
      }
    }
  }
  return best;
}

Point sample_sphere_uniform(int d, Count r, Rng& rng, bool allow_zero) {
  if (d < 1) throw ConfigError("sample_sphere_uniform needs d >= 1");
  if (r < 0 || (r == 0 && !allow_zero)) throw ConfigError("sample_sphere_uniform needs r >= 1");
  Point out = Point::origin(static_cast<std::size_t>(d));
  Count remaining = r;
  for (int axis = 0; axis < d; ++axis) {
    const int dims_left = d - axis;
    const Count total = sphere_cardinality(dims_left, remaining);
    auto rank = static_cast<Count>(rng.below(static_cast<std::uint64_t>(total)));
    // Walk |v_axis| = a upward; value a has weight (a ? 2 : 1) * S(dims_left - 1, remaining - a),
    // negative half first.
    for (Count a = 0; a <= remaining; ++a) {
      const Count tail = sphere_cardinality(dims_left - 1, remaining - a);
      const Count weight = a == 0 ? tail : 2 * tail;
      if (rank < weight) {
        out[static_cast<std::size_t>(axis)] = (a == 0 || rank < tail) ? -a : a;
        remaining -= a;
        break;
      }
      rank -= weight;
    }
  }
  return out;
}

namespace {

void enumerate_sphere(std::vector<std::int64_t>& cur, std::size_t axis, Count left, const Point& p,
                      Count y, Count& hits) {
  const std::size_t d = cur.size();
  if (axis + 1 == d) {
    for (std::int64_t v : {-left, left}) {
      cur[axis] = v;
      Count dist = 0;
      for (std::size_t i = 0; i < d; ++i) dist += std::llabs(cur[i] - p[i]);
      if (dist <= y) ++hits;
      if (left == 0) break;
    }
    return;
  }
  for (std::int64_t v = -left; v <= left; ++v) {
    cur[axis] = v;
    enumerate_sphere(cur, axis + 1, left - std::llabs(v), p, y, hits);
  }
}

}  // namespace

Count sphere_ball_intersection_count(Count x, const Point& p, Count y, Count budget) {
  if (x < 0 || y < 0) throw ConfigError("sphere_ball_intersection_count needs x, y >= 0");
  if (p.dim() < 1) throw DimensionError("sphere_ball_intersection_count needs d >= 1");
  if (sphere_cardinality(static_cast<int>(p.dim()), x) > budget)
    throw BudgetExceeded("sphere enumeration exceeds budget");
  std::vector<std::int64_t> cur(p.dim(), 0);
  Count hits = 0;
  enumerate_sphere(cur, 0, x, p, y, hits);
  return hits;
}

}  // namespace burn
