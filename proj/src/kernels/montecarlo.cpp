#include <cmath>

#include "burn/error.hpp"
#include "burn/serial.hpp"
#include "detail.hpp"

namespace burn {

namespace {

// Samples are drawn serially so the estimate depends only on the seed.
std::vector<std::int64_t> draw_cells(const Box& box, Count samples, Rng& rng) {
  if (samples <= 0) throw ConfigError("Monte Carlo needs a positive sample count");
  const std::size_t d = box.dim();
  std::vector<std::int64_t> cells(static_cast<std::size_t>(samples) * d);
  for (Count s = 0; s < samples; ++s)
    for (std::size_t i = 0; i < d; ++i)
      cells[static_cast<std::size_t>(s) * d + i] = rng.uniform(box.axes[i].lo, box.axes[i].hi);
  return cells;
}

McEstimate finish(Count hits, Count samples) {
  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(samples))};
}

}  // namespace

McEstimate estimate_density_mc(std::span<const Activation> activations, std::int64_t n, const Box& box,
                               Count samples, Rng& rng) {
  const auto balls = detail::collect_balls(activations, n, box.dim());
  const auto cells = draw_cells(box, samples, rng);
  const std::size_t d = box.dim();
  Count hits = 0;
#pragma omp parallel for reduction(+ : hits) schedule(static)
  for (Count s = 0; s < samples; ++s)
    if (balls.covers(cells.data() + static_cast<std::size_t>(s) * d)) ++hits;
  return finish(hits, samples);
}

namespace serial {

McEstimate estimate_density_mc(std::span<const Activation> activations, std::int64_t n, const Box& box,
                               Count samples, Rng& rng) {
  const auto balls = detail::collect_balls(activations, n, box.dim());
  const auto cells = draw_cells(box, samples, rng);
  const std::size_t d = box.dim();
  Count hits = 0;
  for (Count s = 0; s < samples; ++s)
    if (balls.covers(cells.data() + static_cast<std::size_t>(s) * d)) ++hits;
  return finish(hits, samples);
}

}  // namespace serial

}  // namespace burn
