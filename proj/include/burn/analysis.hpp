#pragma once

// Windowed density statistics and the closed-form bounds, as executable checks.

#include <cstdint>
#include <vector>

#include "burn/arith.hpp"
#include "burn/trace.hpp"

namespace burn {

/// Finite-window estimate of liminf / limsup / limit of the density.
struct TailStats {
  std::size_t window = 0;
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  std::int64_t first_n = 0;
  std::int64_t last_n = 0;
};

/// Statistics over the last `window` checkpoints. Throws ConfigError when the
/// trace is shorter than the window or the window is 0.
TailStats tail_stats(const BurnTrace& trace, std::size_t window = 10);

/// (n+2)(n+1)/2 + (2 + log2 n)(n+1), n >= 1.
double bound_lemma21(std::int64_t n);

/// 2^d C(n+d+1, d+1).
Count bound_thm41(int d, std::int64_t n);

struct SphereBounds {
  Rational lower;
  Rational upper;
};

/// 2^d/(d-1)! * max(0, r-d+1)^(d-1) and 2^d/(d-1)! * (r+d-1)^(d-1), d >= 2.
SphereBounds lemma41_sphere_bounds(int d, std::int64_t r);

/// ((x+y-r)/2 - d)^(d-1) / (d-1)!. Requires r <= x+y and r+x >= y.
double lemma42_bound(int d, std::int64_t x, std::int64_t y, std::int64_t r);

/// 1 - exp(-d / ((d+1) 2^(5d-3))), d >= 2.
double lambda_lower_bound(int d);

struct OscillationRow {
  int k = 0;
  Count burned_before = 0;  // at n = 2^k - 1
  Count cells_before = 0;
  Count burned_at = 0;  // at n = 2^k
  Count cells_at = 0;
  double density_before = 0.0;
  double density_at = 0.0;
  double gap = 0.0;
};

/// Origin-only burning on step_log2 growth with the frontier engine, measured
/// at n = 2^k - 1 and n = 2^k for k in [k_lo, k_hi].
std::vector<OscillationRow> oscillation_probe(int k_lo, int k_hi);

struct ChiSquare {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 0.0;
};

/// Pearson goodness of fit of `counts` against the uniform distribution.
ChiSquare chi_square_uniform(const std::vector<Count>& counts);

}  // namespace burn
