// Serial reference kernels against their OpenMP counterparts on the same inputs.
// Run with OMP_NUM_THREADS set to compare thread counts.

#include <benchmark/benchmark.h>

#include <map>

#include "burn/engines.hpp"
#include "burn/serial.hpp"
#include "burn/strategies.hpp"
#include "burn/trace.hpp"

namespace {

using namespace burn;

/// History of the epsilon = 5/8 composition on [-n, n]^2: about n/2 balls.
const History& composition_history(std::int64_t n) {
  static std::map<std::int64_t, History> cache;
  auto& h = cache[n];
  if (h.empty()) {
    StrategySpec s;
    s.kind = StrategySpec::Kind::quadrant_composition;
    s.epsilon = Rational(5, 8);
    TraceOptions opt;
    opt.horizon = n;
    opt.checkpoints = {n};
    h = run_trace(s, GrowthSpec::symmetric_box(2, Schedule::linear(Rational(1))), opt).history;
  }
  return h;
}

const History& cube_history() {
  static const History h = [] {
    History out;
    Rng rng(7);
    for (std::int64_t t = 0; t <= 40; ++t) {
      if (t % 4 != 0) {
        out.push_back(Activation::skip(t));
        continue;
      }
      out.push_back(Activation::at(t, {rng.uniform(-30, 30), rng.uniform(-30, 30), rng.uniform(-30, 30)}));
    }
    return out;
  }();
  return h;
}

template <bool Parallel>
void BM_union_2d(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const auto& h = composition_history(n);
  const Box box = Box::cube(2, -n, n);
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? union_count_2d(h, n, box) : serial::union_count_2d(h, n, box));
}

template <bool Parallel>
void BM_union_slab(benchmark::State& state) {
  const auto& h = cube_history();
  const Box box = Box::cube(3, -40, 40);
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? union_count_slab(h, 40, box) : serial::union_count_slab(h, 40, box));
}

template <bool Parallel>
void BM_frontier(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const auto& h = composition_history(n);
  const auto g = GrowthSpec::symmetric_box(2, Schedule::linear(Rational(1)));
  for (auto _ : state) {
    FrontierState s(box_at(g, 0), 0);
    s.ignite(*h.front().point);
    for (std::int64_t t = 1; t <= n; ++t) {
      const auto& a = h[static_cast<std::size_t>(t)];
      s = Parallel ? frontier_step(s, box_at(g, t), a) : serial::frontier_step(s, box_at(g, t), a);
    }
    benchmark::DoNotOptimize(s.burned());
  }
}

template <bool Parallel>
void BM_monte_carlo(benchmark::State& state) {
  const auto& h = composition_history(2000);
  const Box box = Box::cube(2, -2000, 2000);
  for (auto _ : state) {
    Rng rng(1);
    benchmark::DoNotOptimize(Parallel ? estimate_density_mc(h, 2000, box, 200000, rng)
                                      : serial::estimate_density_mc(h, 2000, box, 200000, rng));
  }
}

}  // namespace

BENCHMARK(BM_union_2d<false>)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_union_2d<true>)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_union_slab<false>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_union_slab<true>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_frontier<false>)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_frontier<true>)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_monte_carlo<false>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_monte_carlo<true>)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
