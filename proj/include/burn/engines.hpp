#pragma once

// Burned-set counting engines. Each kernel here is OpenMP-parallel; the
// matching single-threaded versions live in burn/serial.hpp and the two must
// agree exactly for any thread count.

#include <cstdint>
#include <span>
#include <vector>

#include "burn/activation.hpp"
#include "burn/lattice.hpp"
#include "burn/rng.hpp"

namespace burn {

/// Exact-engine cell budget: BURN_BUDGET_CELLS if set, else 1e8.
Count cell_budget();

/// |⋃_k B_1(v_k, n - k) ∩ box| in the plane. Balls become axis-aligned squares
/// under (u, w) = (x + y, x - y); the count is a sweep over u with a segment tree
/// on w that tracks covered even and odd w separately (lattice points have
/// u ≡ w mod 2). Skips are ignored. O(A log A + U log A), U = swept u-range.
Count union_count_2d(std::span<const Activation> activations, std::int64_t n, const Box& box);

/// Same union in any dimension, by iterating the (d-1)-coordinate prefixes of
/// the box and merging per-ball intervals on the last axis. Throws
/// BudgetExceeded when cells * A > budget.
Count union_count_slab(std::span<const Activation> activations, std::int64_t n, const Box& box,
                       Count budget = cell_budget());

/// Sorted, disjoint, non-adjacent intervals along axis 0.
using IntervalList = std::vector<Interval>;

/// Exact burned set B_n as one interval list (along axis 0) per line of the
/// box, lines indexed by the remaining coordinates in row-major order.
class FrontierState {
 public:
  FrontierState() = default;
  /// Empty burned set on `box` at time `time`.
  FrontierState(Box box, std::int64_t time);

  const Box& box() const { return box_; }
  std::int64_t time() const { return time_; }
  Count burned() const { return burned_; }
  std::size_t line_count() const { return lines_.size(); }
  const IntervalList& line(std::size_t index) const { return lines_[index]; }

  bool contains(const Point& p) const;
  /// p ∈ N[B] (closed neighbourhood in the lattice; p may lie outside the box).
  bool touches(const Point& p) const;

  /// Line index for a point's coordinates 1..d-1, or -1 when outside the box.
  std::int64_t line_index(const Point& p) const;

  /// Adds a single cell; used for the initial activator. The cell must be unburned.
  void ignite(const Point& p);

  // Internal construction used by the step kernels.
  FrontierState(Box box, std::int64_t time, std::vector<IntervalList> lines);

 private:
  Box box_;
  std::int64_t time_ = 0;
  std::vector<IntervalList> lines_;
  Count burned_ = 0;
};

/// B_{n+1} = N_{G_{n+1}}[B_n] ∪ {v_{n+1}}. `new_box` must contain the old box.
/// Throws InvalidActivation when the activator is already in N[B_n] and
/// OutsideGrid when it is outside `new_box`.
FrontierState frontier_step(const FrontierState& state, const Box& new_box, const Activation& activation);

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

/// Unbiased estimate of |⋃ B_1(v_k, n-k) ∩ box| / |box| from `samples` uniform
/// cells. Cells are drawn serially from `rng`; membership tests run in parallel.
McEstimate estimate_density_mc(std::span<const Activation> activations, std::int64_t n, const Box& box,
                               Count samples, Rng& rng);

}  // namespace burn
