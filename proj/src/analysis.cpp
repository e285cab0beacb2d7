#include "burn/analysis.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/special_functions/gamma.hpp>

#include "burn/error.hpp"

namespace burn {

TailStats tail_stats(const BurnTrace& trace, std::size_t window) {
  if (window == 0) throw ConfigError("tail window must be positive");
  if (trace.records.size() < window)
    throw ConfigError("trace has " + std::to_string(trace.records.size()) + " checkpoints, window needs " +
                      std::to_string(window));
  const auto first = trace.records.end() - static_cast<std::ptrdiff_t>(window);
  TailStats s;
  s.window = window;
  s.min = s.max = first->density;
  double sum = 0.0;
  for (auto it = first; it != trace.records.end(); ++it) {
    s.min = std::min(s.min, it->density);
    s.max = std::max(s.max, it->density);
    sum += it->density;
  }
  s.mean = std::clamp(sum / static_cast<double>(window), s.min, s.max);
  s.first_n = first->n;
  s.last_n = trace.records.back().n;
  return s;
}

double bound_lemma21(std::int64_t n) {
  if (n < 1) throw ConfigError("bound_lemma21 needs n >= 1");
  const double nd = static_cast<double>(n);
  return (nd + 2.0) * (nd + 1.0) / 2.0 + (2.0 + std::log2(nd)) * (nd + 1.0);
}

Count bound_thm41(int d, std::int64_t n) {
  if (d < 1 || n < 0) throw ConfigError("bound_thm41 needs d >= 1 and n >= 0");
  return checked_mul(checked_pow(2, d), binomial(n + d + 1, d + 1));
}

SphereBounds lemma41_sphere_bounds(int d, std::int64_t r) {
  if (d < 2 || r < 0) throw ConfigError("lemma41_sphere_bounds needs d >= 2 and r >= 0");
  Count fact = 1;
  for (int i = 2; i < d; ++i) fact = checked_mul(fact, i);
  const Count scale = checked_pow(2, d);
  const Count lo_base = std::max<std::int64_t>(0, r - d + 1);
  return {Rational(checked_mul(scale, checked_pow(lo_base, d - 1)), fact),
          Rational(checked_mul(scale, checked_pow(r + d - 1, d - 1)), fact)};
}

double lemma42_bound(int d, std::int64_t x, std::int64_t y, std::int64_t r) {
  if (d < 2) throw ConfigError("lemma42_bound needs d >= 2");
  if (r > x + y || r + x < y) throw ConfigError("lemma42_bound needs r <= x + y and r + x >= y");
  double fact = 1.0;
  for (int i = 2; i < d; ++i) fact *= i;
  const double base = 0.5 * static_cast<double>(x + y - r) - d;
  return std::pow(base, d - 1) / fact;
}

double lambda_lower_bound(int d) {
  if (d < 2) throw ConfigError("lambda_lower_bound needs d >= 2");
  const double denom = (d + 1.0) * std::ldexp(1.0, 5 * d - 3);
  return -std::expm1(-static_cast<double>(d) / denom);
}

std::vector<OscillationRow> oscillation_probe(int k_lo, int k_hi) {
  if (k_lo < 1 || k_hi < k_lo || k_hi > 30) throw ConfigError("oscillation_probe needs 1 <= k_lo <= k_hi <= 30");
  StrategySpec spec;
  spec.kind = StrategySpec::Kind::origin_only;
  TraceOptions opt;
  opt.horizon = std::int64_t{1} << k_hi;
  opt.engine = EngineKind::frontier;
  for (int k = k_lo; k <= k_hi; ++k) {
    opt.checkpoints.push_back((std::int64_t{1} << k) - 1);
    opt.checkpoints.push_back(std::int64_t{1} << k);
  }
  const BurnTrace trace = run_trace(spec, GrowthSpec::symmetric_box(2, Schedule::step_log2()), opt);
  std::vector<OscillationRow> rows;
  for (int k = k_lo; k <= k_hi; ++k) {
    const auto& before = trace.at((std::int64_t{1} << k) - 1);
    const auto& at = trace.at(std::int64_t{1} << k);
    OscillationRow row;
    row.k = k;
    row.burned_before = before.burned;
    row.cells_before = before.grid_cells;
    row.burned_at = at.burned;
    row.cells_at = at.grid_cells;
    row.density_before = before.density;
    row.density_at = at.density;
    row.gap = before.density - at.density;
    rows.push_back(row);
  }
  return rows;
}

ChiSquare chi_square_uniform(const std::vector<Count>& counts) {
  if (counts.size() < 2) throw ConfigError("chi-square needs at least two categories");
  double total = 0.0;
  for (const auto c : counts) total += static_cast<double>(c);
  const double expected = total / static_cast<double>(counts.size());
  ChiSquare out;
  for (const auto c : counts) {
    const double diff = static_cast<double>(c) - expected;
    out.statistic += diff * diff / expected;
  }
  out.dof = static_cast<int>(counts.size()) - 1;
  out.p_value = boost::math::gamma_q(out.dof / 2.0, out.statistic / 2.0);
  return out;
}

}  // namespace burn
