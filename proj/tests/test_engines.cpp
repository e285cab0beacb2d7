#include <doctest.h>

#include "burn/engines.hpp"
#include "burn/error.hpp"
#include "burn/serial.hpp"
#include "histories.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace burn;
using testing_support::random_run;

namespace {

std::vector<GrowthSpec> certified_growths() {
  return {GrowthSpec::symmetric_box(2, Schedule::linear(Rational(1))),
          GrowthSpec::quadrant(2, Schedule::linear(Rational(1))),
          GrowthSpec::symmetric_box(2, Schedule::power(Rational(1), Rational(3, 2))),
          GrowthSpec::symmetric_box(2, Schedule::constant(6))};
}

std::vector<GrowthSpec> stalling_growths() {
  GrowthSpec jumpy;
  jumpy.symmetric = false;
  jumpy.axes = {{Schedule::table({0, 1, 1, 1, 4, 4, 5, 9, 9, 9, 9, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12}),
                 Schedule::table({0, 0, 2, 2, 2, 3, 7, 7, 7, 8, 8, 8, 8, 8, 13, 13, 13, 13, 13, 13, 13})},
                {Schedule::constant(2), Schedule::linear(Rational(1))}};
  return {GrowthSpec::symmetric_box(2, Schedule::step_log2()),
          GrowthSpec::symmetric_box(2, Schedule::power(Rational(1, 10), Rational(3, 2))), jumpy};
}

}  // namespace

TEST_CASE("planar union examples") {
  const Box box = Box::cube(2, -4, 4);
  CHECK(union_count_2d({}, 5, box) == 0);
  const History one = {Activation::at(0, {0, 0})};
  CHECK(union_count_2d(one, 2, box) == 13);
  const History two = {Activation::at(0, {0, 0}), Activation::at(1, {3, 0})};
  CHECK(union_count_2d(two, 2, box) == 17);
  CHECK(serial::union_count_2d(two, 2, box) == 17);
  CHECK(union_count_slab(two, 2, box) == 17);
  CHECK(serial::brute_force_union(two, 2, box) == 17);
}

TEST_CASE("slab union examples") {
  const History line = {Activation::at(0, Point{0})};
  CHECK(union_count_slab(line, 3, Box::cube(1, -10, 10)) == 7);
  const History cube = {Activation::at(0, {0, 0, 0})};
  CHECK(union_count_slab(cube, 2, Box::cube(3, -2, 2)) == 25);
  CHECK(serial::union_count_slab(cube, 2, Box::cube(3, -2, 2)) == 25);
  CHECK_THROWS_AS(union_count_slab(cube, 2, Box::cube(3, -2, 2), 10), BudgetExceeded);
  CHECK_THROWS_AS(union_count_2d(cube, 2, Box::cube(3, -2, 2)), DimensionError);
}

TEST_CASE("union engines agree with the oracle on certified growth") {
  Rng rng(2024);
  for (const auto& g : certified_growths()) {
    for (int trial = 0; trial < 12; ++trial) {
      const auto run = random_run(g, 24, rng, 0.25);
      for (std::int64_t n = 0; n <= 24; ++n) {
        const Box box = box_at(g, n);
        std::span<const Activation> prefix(run.history.data(), static_cast<std::size_t>(n + 1));
        const Count want = run.counts[static_cast<std::size_t>(n)];
        CAPTURE(n);
        REQUIRE(union_count_2d(prefix, n, box) == want);
        REQUIRE(serial::union_count_2d(prefix, n, box) == want);
        REQUIRE(union_count_slab(prefix, n, box) == want);
        REQUIRE(serial::union_count_slab(prefix, n, box) == want);
        REQUIRE(serial::brute_force_union(prefix, n, box) == want);
      }
    }
  }
}

TEST_CASE("union of disjoint-ish random balls matches row merging") {
  Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t n = rng.uniform(0, 30);
    History h;
    std::vector<std::vector<std::int64_t>> centres;
    std::vector<std::int64_t> radii;
    for (std::int64_t t = 0; t <= n; ++t) {
      if (rng.below(3) != 0) {
        h.push_back(Activation::skip(t));
        continue;
      }
      const Point p{rng.uniform(-25, 25), rng.uniform(-25, 25)};
      h.push_back(Activation::at(t, p));
      centres.push_back(p.coords);
      radii.push_back(n - t);
    }
    const oracle::Rect rect{rng.uniform(-20, 0), rng.uniform(0, 20), rng.uniform(-20, 0), rng.uniform(0, 20)};
    const Box box({{rect.xlo, rect.xhi}, {rect.ylo, rect.yhi}});
    const Count want = oracle::union_rows(centres, radii, rect);
    CHECK(union_count_2d(h, n, box) == want);
    CHECK(serial::union_count_2d(h, n, box) == want);
    CHECK(union_count_slab(h, n, box) == want);
  }
}

TEST_CASE("frontier and dense simulation agree on stalling growth") {
  Rng rng(31337);
  auto growths = certified_growths();
  for (const auto& g : stalling_growths()) growths.push_back(g);
  for (const auto& g : growths) {
    for (int trial = 0; trial < 8; ++trial) {
      const auto run = random_run(g, 20, rng, 0.3);
      CHECK(testing_support::frontier_counts(run.history, g, false) == run.counts);
      CHECK(testing_support::frontier_counts(run.history, g, true) == run.counts);
      CHECK(serial::dense_burn_counts(run.history, g, 20) == run.counts);
    }
  }
}

TEST_CASE("union of balls over-counts once walls stall") {
  // Origin-only burning on step grids: the fire is stopped by the wall at
  // n = 2^k - 1 and only creeps one cell per step after the jump.
  const auto g = GrowthSpec::symmetric_box(2, Schedule::step_log2());
  const History h = {Activation::at(0, {0, 0})};
  History full = h;
  for (std::int64_t t = 1; t <= 16; ++t) full.push_back(Activation::skip(t));
  const auto exact = serial::dense_burn_counts(full, g, 16);
  CHECK(exact[16] < union_count_2d(h, 16, box_at(g, 16)));
  CHECK(testing_support::frontier_counts(full, g, false) == exact);
}

TEST_CASE("frontier examples") {
  FrontierState seed(Box::cube(2, 0, 0), 0);
  seed.ignite({0, 0});
  const auto s1 = frontier_step(seed, Box::cube(2, -1, 1), Activation::skip(1));
  CHECK(s1.burned() == 5);
  CHECK(s1.line(0) == IntervalList{{0, 0}});
  CHECK(s1.line(1) == IntervalList{{-1, 1}});
  CHECK(s1.line(2) == IntervalList{{0, 0}});

  const FrontierState wall(Box({{-5, 5}}), 5, {IntervalList{{-5, 5}}});
  const auto stalled = frontier_step(wall, Box({{-5, 5}}), Activation::skip(6));
  CHECK(stalled.line(0) == IntervalList{{-5, 5}});
  const auto jumped = frontier_step(stalled, Box({{-20, 20}}), Activation::skip(7));
  CHECK(jumped.line(0) == IntervalList{{-6, 6}});
  CHECK(serial::frontier_step(stalled, Box({{-20, 20}}), Activation::skip(7)).line(0) == IntervalList{{-6, 6}});
}

TEST_CASE("frontier rejects bad activations") {
  FrontierState s(Box::cube(2, -3, 3), 0);
  s.ignite({0, 0});
  CHECK(s.touches({1, 0}));
  CHECK(s.touches({0, 0}));
  CHECK_FALSE(s.touches({1, 1}));
  CHECK_THROWS_AS(frontier_step(s, Box::cube(2, -4, 4), Activation::at(1, {0, 1})), InvalidActivation);
  CHECK_THROWS_AS(frontier_step(s, Box::cube(2, -4, 4), Activation::at(1, {5, 0})), OutsideGrid);
  CHECK_THROWS_AS(frontier_step(s, Box::cube(2, -1, 1), Activation::skip(1)), ConfigError);
  const auto ok = frontier_step(s, Box::cube(2, -4, 4), Activation::at(1, {1, 1}));
  CHECK(ok.burned() == 6);
}

TEST_CASE("three-dimensional frontier matches the dense grid") {
  Rng rng(5);
  const std::vector<GrowthSpec> growths = {GrowthSpec::symmetric_box(3, Schedule::linear(Rational(1))),
                                           GrowthSpec::symmetric_box(3, Schedule::step_log2())};
  for (const auto& g : growths) {
    for (int trial = 0; trial < 4; ++trial) {
      const std::int64_t horizon = 9;
      History h;
      FrontierState state(box_at(g, 0), 0);
      for (std::int64_t n = 0; n <= horizon; ++n) {
        const Box box = box_at(g, n);
        Activation act = Activation::skip(n);
        if (n == 0 || rng.below(3) == 0) {
          for (int attempt = 0; attempt < 40; ++attempt) {
            Point p(std::vector<std::int64_t>(3));
            for (std::size_t i = 0; i < 3; ++i) p[i] = rng.uniform(box.axes[i].lo, box.axes[i].hi);
            if (n == 0 || !state.touches(p)) {
              act = Activation::at(n, p);
              break;
            }
          }
        }
        if (n == 0) {
          state.ignite(*act.point);
        } else {
          state = frontier_step(state, box, act);
        }
        h.push_back(act);
      }
      const auto dense = serial::dense_burn_counts(h, g, horizon);
      CHECK(dense.back() == state.burned());
      if (free_spread_certificate(g, 1, horizon)) CHECK(union_count_slab(h, horizon, box_at(g, horizon)) == dense.back());
    }
  }
}

TEST_CASE("Monte Carlo extremes and determinism") {
  const Box box = Box::cube(2, -3, 3);
  const History cover = {Activation::at(0, {0, 0})};
  Rng a(1);
  const auto full = estimate_density_mc(cover, 6, box, 1000, a);
  CHECK(full.estimate == 1.0);
  CHECK(full.std_error == 0.0);
  Rng b(1);
  CHECK(estimate_density_mc({}, 6, box, 1000, b).estimate == 0.0);

  const History h = {Activation::at(0, {0, 0}), Activation::skip(1), Activation::at(2, {3, 3})};
  Rng p(9), q(9);
  const auto par = estimate_density_mc(h, 3, box, 5000, p);
  const auto ser = serial::estimate_density_mc(h, 3, box, 5000, q);
  CHECK(par.estimate == ser.estimate);
  CHECK(par.std_error == ser.std_error);
}

TEST_CASE("parallel kernels match serial ones for any thread count") {
  Rng rng(606);
  History h;
  for (std::int64_t t = 0; t <= 1500; ++t)
    h.push_back(rng.below(4) == 0 ? Activation::at(t, {rng.uniform(-1500, 1500), rng.uniform(-1500, 1500)})
                                  : Activation::skip(t));
  const Box box = Box::cube(2, -1500, 1500);
  const Count want = serial::union_count_2d(h, 1500, box);
  History h3;
  for (std::int64_t t = 0; t <= 30; ++t)
    h3.push_back(Activation::at(t, {rng.uniform(-30, 30), rng.uniform(-30, 30), rng.uniform(-30, 30)}));
  const Box box3 = Box::cube(3, -30, 30);
  const Count want3 = serial::union_count_slab(h3, 30, box3);
#ifdef _OPENMP
  const int saved = omp_get_max_threads();
#endif
  for (int threads : {1, 2, 3, 8}) {
#ifdef _OPENMP
    omp_set_num_threads(threads);
#endif
    CAPTURE(threads);
    CHECK(union_count_2d(h, 1500, box) == want);
    CHECK(union_count_slab(h3, 30, box3) == want3);
    Rng a(1), b(1);
    CHECK(estimate_density_mc(h, 1500, box, 20000, a).estimate ==
          serial::estimate_density_mc(h, 1500, box, 20000, b).estimate);
  }
#ifdef _OPENMP
  omp_set_num_threads(saved);
#endif
}
