#pragma once

// Random valid activation histories, generated against the dense oracle so
// validity does not depend on any engine under test.

#include <vector>

#include "burn/activation.hpp"
#include "burn/engines.hpp"
#include "burn/growth.hpp"
#include "burn/rng.hpp"
#include "burn/serial.hpp"
#include "oracle.hpp"

namespace testing_support {

inline oracle::Rect to_rect(const burn::Box& b) { return {b.axes[0].lo, b.axes[0].hi, b.axes[1].lo, b.axes[1].hi}; }

struct RandomRun {
  burn::History history;
  std::vector<burn::Count> counts;  // dense oracle |B_n|, n = 0..horizon
};

/// Planar only. Each step activates a uniformly chosen free cell with
/// probability `p_fire`, otherwise skips.
inline RandomRun random_run(const burn::GrowthSpec& growth, std::int64_t horizon, burn::Rng& rng,
                            double p_fire = 0.3) {
  oracle::Bfs bfs([&](oracle::i64 n) { return to_rect(burn::box_at(growth, n)); }, horizon);
  RandomRun run;
  for (std::int64_t n = 0; n <= horizon; ++n) {
    const auto g = to_rect(burn::box_at(growth, n));
    oracle::Act act{n, true, 0, 0};
    if (rng.unit() < p_fire || n == 0) {
      std::vector<std::pair<oracle::i64, oracle::i64>> free;
      for (auto y = g.ylo; y <= g.yhi; ++y)
        for (auto x = g.xlo; x <= g.xhi; ++x)
          if (n == 0 || !bfs.touches(x, y)) free.emplace_back(x, y);
      if (!free.empty()) {
        const auto [x, y] = free[rng.below(free.size())];
        act = {n, false, x, y};
      }
    }
    const bool ok = bfs.step(act);
    (void)ok;
    run.history.push_back(act.skip ? burn::Activation::skip(n) : burn::Activation::at(n, {act.x, act.y}));
    run.counts.push_back(bfs.count());
  }
  return run;
}

/// Frontier counts for the same history, one per step.
inline std::vector<burn::Count> frontier_counts(const burn::History& history, const burn::GrowthSpec& growth,
                                                bool serial_kernel) {
  std::vector<burn::Count> out;
  burn::FrontierState state(burn::box_at(growth, 0), 0);
  if (!history.front().is_skip()) state.ignite(*history.front().point);
  out.push_back(state.burned());
  for (std::size_t i = 1; i < history.size(); ++i) {
    const auto box = burn::box_at(growth, static_cast<std::int64_t>(i));
    state = serial_kernel ? burn::serial::frontier_step(state, box, history[i])
                          : burn::frontier_step(state, box, history[i]);
    out.push_back(state.burned());
  }
  return out;
}

}  // namespace testing_support
