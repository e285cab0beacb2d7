#pragma once

// Kernel bodies shared by the parallel engines and their serial references.

#include <cstdint>
#include <span>
#include <vector>

#include "burn/engines.hpp"

namespace burn::detail {

/// A ball B_1(v, r) as the square [u0,u1] x [w0,w1] in (u, w) = (x+y, x-y),
/// already clipped to the box's u- and w-extents.
struct Rect {
  std::int64_t u0, u1, w0, w1;
};

/// Rotated squares for the non-skip activations; balls missing the box are dropped.
std::vector<Rect> rotated_rects(std::span<const Activation> activations, std::int64_t n, const Box& box);

/// Sorted, deduplicated half-open w boundaries of the rects.
std::vector<std::int64_t> w_boundaries(const std::vector<Rect>& rects);

/// Lattice points (u ≡ w mod 2) inside the union of rects and the box, for u in [u_lo, u_hi].
Count sweep_rotated(const std::vector<Rect>& rects, const std::vector<std::int64_t>& wb, const Box& box,
                    std::int64_t u_lo, std::int64_t u_hi);

void check_activations(std::span<const Activation> activations, std::int64_t n, std::size_t d);

/// Flattened ball centres and radii for the membership and slab kernels.
struct BallSet {
  std::size_t d = 0;
  std::vector<std::int64_t> centers;  // size A * d
  std::vector<std::int64_t> radii;

  std::size_t size() const { return radii.size(); }
  bool covers(const std::int64_t* p) const;
};

BallSet collect_balls(std::span<const Activation> activations, std::int64_t n, std::size_t d);

/// Burned cells on one line of the slab engine (prefix = axes 0..d-2).
Count slab_line(const BallSet& balls, const Box& box, std::int64_t line, std::vector<Interval>& scratch);

std::int64_t slab_line_count(const Box& box);

void merge_sorted_intervals(std::vector<Interval>& v);

/// One line of the frontier step.
IntervalList frontier_line(const FrontierState& state, const Box& new_box, std::int64_t new_line);

/// Shared validation for frontier_step; returns the new line holding the activator, or -1.
std::int64_t frontier_prepare(const FrontierState& state, const Box& new_box, const Activation& activation);

void insert_cell(IntervalList& list, std::int64_t x);

}  // namespace burn::detail
