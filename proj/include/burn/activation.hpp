#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "burn/lattice.hpp"

namespace burn {

/// One step of an activator sequence: a lattice point, or a skip (•).
struct Activation {
  std::int64_t time = 0;
  std::optional<Point> point;

  static Activation skip(std::int64_t t) { return Activation{t, std::nullopt}; }
  static Activation at(std::int64_t t, Point p) { return Activation{t, std::move(p)}; }

  bool is_skip() const { return !point.has_value(); }

  friend bool operator==(const Activation&, const Activation&) = default;
};

using History = std::vector<Activation>;

/// True iff v is at L1 distance >= n - k + 1 from every earlier activator v_k,
/// i.e. v lies outside every ball B_1(v_k, n - k). Under the free-spread
/// certificate this is exactly v ∉ N[B_{n-1}]. Throws OutsideGrid when v is not
/// in `box` (the grid at time n).
bool is_valid_activation(std::span<const Activation> history, const Point& v, std::int64_t n,
                         const Box& box);

}  // namespace burn
