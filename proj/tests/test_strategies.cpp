#include <doctest.h>

#include <cmath>

#include "burn/error.hpp"
#include "burn/strategies.hpp"
#include "burn/trace.hpp"

using namespace burn;

namespace {

StrategySpec spec(StrategySpec::Kind kind) {
  StrategySpec s;
  s.kind = kind;
  return s;
}

History history_of(const StrategySpec& s, const GrowthSpec& g, std::int64_t horizon) {
  TraceOptions opt;
  opt.horizon = horizon;
  opt.checkpoints = {horizon};
  return run_trace(s, g, opt).history;
}

const GrowthSpec kQuadrant = GrowthSpec::quadrant(2, Schedule::linear(Rational(1)));
const GrowthSpec kSymmetric = GrowthSpec::symmetric_box(2, Schedule::linear(Rational(1)));

Activation at(const History& h, std::int64_t n) { return h[static_cast<std::size_t>(n)]; }

}  // namespace

TEST_CASE("nearest top walker") {
  auto s = spec(StrategySpec::Kind::nearest_top);
  s.skip_at = 1;
  const auto h = history_of(s, kQuadrant, 6);
  CHECK(at(h, 0) == Activation::at(0, {0, 0}));
  CHECK(at(h, 1).is_skip());
  CHECK(at(h, 2) == Activation::at(2, {1, 2}));
  s.skip_at = 2;
  const auto h2 = history_of(s, kQuadrant, 6);
  CHECK_FALSE(at(h2, 1).is_skip());
  CHECK(at(h2, 2).is_skip());
  s.skip_at = 3;
  CHECK_THROWS_AS(make_strategy(s), ConfigError);
}

TEST_CASE("nearest top walker picks the nearest unburned vertex with the largest y") {
  // Replays the walker against a dense scan of Q_n at every step.
  for (int skip_at : {1, 2}) {
    auto s = spec(StrategySpec::Kind::nearest_top);
    s.skip_at = skip_at;
    const std::int64_t horizon = 60;
    TraceOptions opt;
    opt.horizon = horizon;
    opt.checkpoints = all_checkpoints(horizon);
    opt.engine = EngineKind::frontier;
    const auto trace = run_trace(s, kQuadrant, opt);
    std::vector<std::vector<char>> burned(horizon + 2, std::vector<char>(horizon + 2, 0));
    burned[0][0] = 1;
    for (std::int64_t n = 1; n <= horizon; ++n) {
      auto next = burned;
      for (std::int64_t x = 0; x <= n; ++x)
        for (std::int64_t y = 0; y <= n; ++y) {
          const auto b = [&](std::int64_t i, std::int64_t j) {
            return i >= 0 && j >= 0 && i <= n && j <= n && burned[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          };
          if (b(x, y) || b(x - 1, y) || b(x + 1, y) || b(x, y - 1) || b(x, y + 1)) next[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 1;
        }
      const auto& act = trace.history[static_cast<std::size_t>(n)];
      if (n == skip_at) {
        CHECK(act.is_skip());
      } else {
        std::int64_t best_x = -1, best_y = -1;
        for (std::int64_t dist = 0; dist <= 2 * n && best_x < 0; ++dist)
          for (std::int64_t y = std::min(n, dist); y >= 0 && dist - y <= n; --y)
            if (!next[static_cast<std::size_t>(dist - y)][static_cast<std::size_t>(y)]) {
              best_x = dist - y;
              best_y = y;
              break;
            }
        CAPTURE(n);
        REQUIRE_FALSE(act.is_skip());
        CHECK(*act.point == Point{best_x, best_y});
        next[static_cast<std::size_t>(best_x)][static_cast<std::size_t>(best_y)] = 1;
      }
      burned = next;
    }
  }
}

TEST_CASE("skinny triangle") {
  auto s = spec(StrategySpec::Kind::skinny_triangle);
  s.rho = Rational(1, 2);
  auto h = history_of(s, kQuadrant, 10);
  CHECK(at(h, 0) == Activation::at(0, {0, 0}));
  CHECK(at(h, 1).is_skip());
  CHECK(at(h, 2) == Activation::at(2, {1, 2}));
  s.rho = Rational(3, 4);
  h = history_of(s, kQuadrant, 10);
  CHECK(at(h, 4) == Activation::at(4, {3, 4}));
  s.rho = Rational(1);
  CHECK_THROWS_AS(make_strategy(s), ConfigError);
}

TEST_CASE("skinny triangle fires floor(rho n) times") {
  for (const auto& rho : {Rational(1, 4), Rational(1, 3), Rational(2, 3), Rational(7, 10)}) {
    auto s = spec(StrategySpec::Kind::skinny_triangle);
    s.rho = rho;
    const auto h = history_of(s, kQuadrant, 300);
    std::int64_t fired = 0;
    for (std::int64_t n = 1; n <= 300; ++n) {
      fired += !at(h, n).is_skip();
      CHECK(fired == rho.num * n / rho.den);
    }
  }
}

TEST_CASE("layer cake") {
  auto s = spec(StrategySpec::Kind::layer_cake);
  s.period = 1;
  CHECK(at(history_of(s, kQuadrant, 8), 7) == Activation::at(7, {7, 7}));
  s.period = 3;
  const auto h = history_of(s, kQuadrant, 40);
  CHECK(at(h, 4).is_skip());
  CHECK(at(h, 6) == Activation::at(6, {6, 6}));
  std::int64_t run = 0;
  for (const auto& a : h) {
    run = a.is_skip() ? run + 1 : 0;
    CHECK(run <= 3);
  }
  s.max_gap = 2;
  CHECK_THROWS_AS(make_strategy(s), ConfigError);
}

TEST_CASE("epsilon decomposition") {
  CHECK(split_epsilon(Rational(1, 2)).a == 0);
  CHECK(split_epsilon(Rational(1, 2)).rho == Rational(0));
  CHECK(split_epsilon(Rational(1)).a == 4);
  CHECK(split_epsilon(Rational(1)).rho == Rational(0));
  CHECK(split_epsilon(Rational(3, 4)).a == 2);
  CHECK(split_epsilon(Rational(11, 16)).a == 1);
  CHECK(split_epsilon(Rational(11, 16)).rho == Rational(1, 2));
  CHECK_THROWS_AS(split_epsilon(Rational(2, 5)), ConfigError);
  CHECK_THROWS_AS(split_epsilon(Rational(3, 2)), ConfigError);
}

TEST_CASE("quadrant composition stays off the axes") {
  for (const auto& eps : {Rational(1, 2), Rational(9, 16), Rational(3, 4), Rational(15, 16), Rational(1)}) {
    auto s = spec(StrategySpec::Kind::quadrant_composition);
    s.epsilon = eps;
    const auto h = history_of(s, kSymmetric, 200);
    CHECK(at(h, 0) == Activation::at(0, {0, 0}));
    for (std::size_t n = 1; n < h.size(); ++n) {
      if (h[n].is_skip()) continue;
      CHECK((*h[n].point)[0] != 0);
      CHECK((*h[n].point)[1] != 0);
    }
  }
}

TEST_CASE("quarter turns") {
  CHECK(rotate_ccw({1, 2}, 1) == Point{-2, 1});
  CHECK(rotate_cw({1, 2}, 1) == Point{2, -1});
  CHECK(rotate_ccw({3, 4}, 4) == Point{3, 4});
  for (int q = 0; q < 4; ++q) CHECK(rotate_cw(rotate_ccw({5, -7}, q), q) == Point{5, -7});
}

TEST_CASE("rotating square-root gap") {
  auto s = spec(StrategySpec::Kind::rotating_sqrt_gap);
  s.c = Rational(1);
  const auto h = history_of(s, kSymmetric, 40);
  CHECK(at(h, 0) == Activation::at(0, {0, 0}));
  CHECK(at(h, 4) == Activation::at(4, {1, 4}));
  CHECK(at(h, 8) == Activation::at(8, {3, 8}));
  // The first walker point of the other regions sits next to the origin and
  // is dropped at time 1; from time 5 region 1 lives on the right edge.
  CHECK(at(h, 1).is_skip());
  REQUIRE_FALSE(at(h, 5).is_skip());
  CHECK((*at(h, 5).point)[0] == 5);
  s.c = Rational(1, 2);
  CHECK_THROWS_AS(make_strategy(s), ConfigError);
}

TEST_CASE("linear target dispatch") {
  auto s = spec(StrategySpec::Kind::linear_target);
  s.c = Rational(1);
  s.rho = Rational(3, 4);
  CHECK_NOTHROW(make_strategy(s));
  s.c = Rational(2);
  s.rho = Rational(1, 8);
  CHECK_NOTHROW(history_of(s, GrowthSpec::symmetric_box(2, Schedule::linear(Rational(2))), 100));
  s.rho = Rational(1);
  CHECK_NOTHROW(history_of(s, GrowthSpec::symmetric_box(2, Schedule::linear(Rational(2))), 100));
  s.rho = Rational(1, 10);
  CHECK_THROWS_AS(make_strategy(s), ConfigError);
}

TEST_CASE("polar spiral") {
  auto s = spec(StrategySpec::Kind::polar_spiral);
  const auto h = history_of(s, GrowthSpec::symmetric_box(2, Schedule::power(Rational(1), Rational(3, 2))), 10);
  CHECK(at(h, 0) == Activation::at(0, {0, 0}));
  // P* of (cos 1, sin 1) is (0, 1), which touches the origin's fire at n = 1,
  // so the step is a counted skip.
  CHECK(round_toward_origin({std::cos(1.0), std::sin(1.0)}) == Point{0, 1});
  CHECK(at(h, 1).is_skip());
  CHECK(round_toward_origin({8 * std::cos(2.0), 8 * std::sin(2.0)}) == Point{-3, 7});
  CHECK(at(h, 4) == Activation::at(4, {-3, 7}));
}

TEST_CASE("epoch windows") {
  CHECK(epoch_window(36, 1) == std::pair<std::int64_t, std::int64_t>{7, 18});
  CHECK(epoch_window(36, 2) == std::pair<std::int64_t, std::int64_t>{19, 54});
  for (int i = 1; i < 12; ++i) CHECK(epoch_window(36, i + 1).first > epoch_window(36, i).second);
  CHECK(epoch_min_n1(2) == 32);
  CHECK(epoch_min_n1(3) >= 48);
}

TEST_CASE("epoch random") {
  auto s = spec(StrategySpec::Kind::epoch_random);
  s.n1 = 36;
  CHECK_THROWS_AS(make_strategy(s), ConfigError);  // no seed
  s.seed = 4;
  const auto g = GrowthSpec::symmetric_box(2, Schedule::power(Rational(1), Rational(3, 2)));
  const auto h = history_of(s, g, 60);
  CHECK(at(h, 5).is_skip());
  REQUIRE_FALSE(at(h, 10).is_skip());
  CHECK(l1_norm(*at(h, 10).point) == 31);
  REQUIRE_FALSE(at(h, 19).is_skip());
  CHECK(l1_norm(*at(h, 19).point) == 82);
  CHECK(history_of(s, g, 60) == h);
  s.n1 = 20;
  CHECK_THROWS_AS(make_strategy(s), ConfigError);
}

TEST_CASE("every strategy emits valid sequences") {
  // run_trace aborts on the first invalid activation.
  const auto fast = GrowthSpec::symmetric_box(2, Schedule::power(Rational(1), Rational(3, 2)));
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto s = spec(StrategySpec::Kind::epoch_random);
    s.n1 = 36;
    s.seed = seed;
    CHECK_NOTHROW(history_of(s, fast, 324));
  }
  for (int c = 1; c <= 3; ++c) {
    auto s = spec(StrategySpec::Kind::rotating_sqrt_gap);
    s.c = Rational(c);
    CHECK_NOTHROW(history_of(s, GrowthSpec::symmetric_box(2, Schedule::linear(Rational(c))), 600));
  }
  auto all_skip = spec(StrategySpec::Kind::all_skip);
  TraceOptions opt;
  opt.horizon = 50;
  const auto trace = run_trace(all_skip, kSymmetric, opt);
  CHECK(trace.at(50).burned == 0);
  CHECK(trace.at(50).density == 0.0);
}
