#pragma once

// Exact geometry of L1 balls, spheres and boxes in Z^d.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "burn/arith.hpp"
#include "burn/rng.hpp"

namespace burn {

struct Point {
  std::vector<std::int64_t> coords;

  Point() = default;
  Point(std::initializer_list<std::int64_t> c) : coords(c) {}
  explicit Point(std::vector<std::int64_t> c) : coords(std::move(c)) {}

  static Point origin(std::size_t d) { return Point(std::vector<std::int64_t>(d, 0)); }

  std::size_t dim() const { return coords.size(); }
  std::int64_t operator[](std::size_t i) const { return coords[i]; }
  std::int64_t& operator[](std::size_t i) { return coords[i]; }

  std::string str() const;

  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Closed integer interval [lo, hi].
struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = -1;

  bool empty() const { return hi < lo; }
  Count length() const { return empty() ? 0 : hi - lo + 1; }
  bool contains(std::int64_t x) const { return lo <= x && x <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Axis-aligned box: one closed interval per axis.
struct Box {
  std::vector<Interval> axes;

  Box() = default;
  explicit Box(std::vector<Interval> a);

  /// [lo, hi]^d.
  static Box cube(std::size_t d, std::int64_t lo, std::int64_t hi);

  std::size_t dim() const { return axes.size(); }
  Count cells() const;
  bool contains(const Point& p) const;
  bool contains(const Box& other) const;
  std::string str() const;

  friend bool operator==(const Box&, const Box&) = default;
};

struct RealPoint {
  std::vector<double> coords;
  RealPoint() = default;
  RealPoint(std::initializer_list<double> c) : coords(c) {}
  std::size_t dim() const { return coords.size(); }
};

Count l1_distance(const Point& p, const Point& q);
Count l1_norm(const Point& p);

/// |B_1(0, r)| in Z^d.
Count ball_cardinality(int d, Count r);

/// |S_1(0, r)| in Z^d. d = 0 is accepted (1 if r = 0, else 0) for recursive use.
Count sphere_cardinality(int d, Count r);

/// |B_1(center, r) ∩ box|, by slab recursion (per-row intervals in the plane).
Count ball_box_count(const Point& center, Count r, const Box& box);

/// The P* rounding: among lattice points q with |q|_1 <= |p|_1, one minimizing
/// d_1(p, q); ties go to the lexicographically smallest q. Planar only.
Point round_toward_origin(const RealPoint& p);

/// Uniform point of S_1(0, r) by exact unranking, one coordinate at a time.
/// r = 0 is rejected unless `allow_zero`.
Point sample_sphere_uniform(int d, Count r, Rng& rng, bool allow_zero = false);

/// |S_1(0, x) ∩ B_1(p, y)| by enumerating the sphere. Throws BudgetExceeded
/// when the sphere has more than `budget` points.
Count sphere_ball_intersection_count(Count x, const Point& p, Count y, Count budget = 50'000'000);

}  // namespace burn
