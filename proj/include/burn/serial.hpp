#pragma once

// Single-threaded reference kernels. The parallel engines in burn/engines.hpp
// are tested against these; the benchmark compares the two.

#include <cstdint>
#include <span>
#include <vector>

#include "burn/engines.hpp"
#include "burn/growth.hpp"

namespace burn::serial {

Count union_count_2d(std::span<const Activation> activations, std::int64_t n, const Box& box);

Count union_count_slab(std::span<const Activation> activations, std::int64_t n, const Box& box,
                       Count budget = cell_budget());

FrontierState frontier_step(const FrontierState& state, const Box& new_box, const Activation& activation);

McEstimate estimate_density_mc(std::span<const Activation> activations, std::int64_t n, const Box& box,
                               Count samples, Rng& rng);

/// Cell-by-cell scan of the union of clipped balls.
Count brute_force_union(std::span<const Activation> activations, std::int64_t n, const Box& box);

/// Dense-grid simulation of the burning process over every step 0..horizon,
/// straight from the definition. Returns |B_n| for n = 0..horizon. Any
/// dimension; intended for small grids.
std::vector<Count> dense_burn_counts(std::span<const Activation> activations, const GrowthSpec& growth,
                                     std::int64_t horizon);

}  // namespace burn::serial
