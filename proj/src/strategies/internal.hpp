#pragma once

#include <memory>

#include "burn/strategies.hpp"

namespace burn::strategies {

std::unique_ptr<Strategy> make_origin_only(int d);
std::unique_ptr<Strategy> make_all_skip(int d);
std::unique_ptr<Strategy> make_nearest_top(int skip_at);
std::unique_ptr<Strategy> make_skinny_triangle(const Rational& rho);
std::unique_ptr<Strategy> make_layer_cake(std::int64_t period);
std::unique_ptr<Strategy> make_quadrant_composition(const Rational& epsilon);
std::unique_ptr<Strategy> make_rotating_sqrt_gap(const Rational& c);
/// Same walker with an irrational height factor; heights are ceil(d n) in double.
std::unique_ptr<Strategy> make_rotating_sqrt_gap_real(double d);
std::unique_ptr<Strategy> make_polar_spiral(double c);
std::unique_ptr<Strategy> make_epoch_random(int d, std::int64_t n1, std::uint64_t seed);

}  // namespace burn::strategies
