#pragma once

// Activator strategies. Each instance is a deterministic state machine that is
// asked for v_n at n = 0, 1, 2, ... in order, exactly once per step.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "burn/activation.hpp"
#include "burn/arith.hpp"
#include "burn/lattice.hpp"

namespace burn {

/// What a strategy may look at when choosing v_n.
struct StepContext {
  std::int64_t n = 0;
  const Box* box = nullptr;
  /// v ∉ N[B_{n-1}] (i.e. v may be activated now). Only defined for v inside the box.
  std::function<bool(const Point&)> is_free;
};

class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual Activation next(const StepContext& ctx) = 0;
  virtual std::size_t dim() const { return 2; }
  /// Counters worth reporting (collisions, skips, ...).
  virtual std::map<std::string, std::int64_t> diagnostics() const { return {}; }
};

struct StrategySpec {
  enum class Kind {
    origin_only,
    all_skip,
    nearest_top,
    skinny_triangle,
    layer_cake,
    quadrant_composition,
    rotating_sqrt_gap,
    linear_target,
    polar_spiral,
    epoch_random,
  };

  Kind kind = Kind::origin_only;
  int skip_at = 1;             // nearest_top
  Rational rho{1, 2};          // skinny_triangle, linear_target
  std::int64_t period = 1;     // layer_cake
  std::int64_t max_gap = 0;    // layer_cake; 0 means period
  Rational epsilon{1, 2};      // quadrant_composition
  Rational c{1};               // rotating_sqrt_gap, linear_target
  double spiral_c = 1.0;       // polar_spiral
  int d = 2;                   // epoch_random, origin_only, all_skip
  std::int64_t n1 = 0;         // epoch_random
  std::optional<std::uint64_t> seed;

  bool stochastic() const { return kind == Kind::epoch_random; }
  std::string describe() const;
};

std::string kind_name(StrategySpec::Kind kind);
StrategySpec::Kind parse_kind(const std::string& name);

/// Validates parameter ranges and builds the strategy. Throws ConfigError.
std::unique_ptr<Strategy> make_strategy(const StrategySpec& spec);

// Quadrant-local walkers. They live in the frame of Q_n = [0, n]^2 and are
// advanced every step; `active` says whether this quadrant may activate now.

class QuadrantWalker {
 public:
  virtual ~QuadrantWalker() = default;
  virtual std::optional<Point> step(std::int64_t n, bool active) = 0;
};

/// The unburned vertex nearest the origin, ties to the largest y, replayed as
/// a diagonal-filling order: diagonal t is x + y = n + t; `filled` counts its
/// burned cells from the top (t, n).
class NearestTopWalker : public QuadrantWalker {
 public:
  std::optional<Point> step(std::int64_t n, bool active) override;

 private:
  std::int64_t t_ = 1;
  std::int64_t filled_ = 0;
  std::int64_t last_ = 0;
};

class LayerCakeWalker : public QuadrantWalker {
 public:
  std::optional<Point> step(std::int64_t n, bool active) override {
    if (!active) return std::nullopt;
    return Point{n, n};
  }
};

/// (floor(rho n), n) exactly when floor(rho n) increments.
bool skinny_fires(const Rational& rho, std::int64_t n);

/// Quarter turn counter-clockwise, q times.
Point rotate_ccw(const Point& p, int q);
/// Quarter turn clockwise, q times.
Point rotate_cw(const Point& p, int q);

/// eps = 1/2 + (a + rho)/8 with a in 0..4 and rho in [0, 1).
struct EpsilonSplit {
  int a = 0;
  Rational rho{0};
};
EpsilonSplit split_epsilon(const Rational& epsilon);

/// First and last time of epoch window i >= 1: [floor(N_i/6)+1, floor(N_i/2)], N_i = N_1 3^(i-1).
std::pair<std::int64_t, std::int64_t> epoch_window(std::int64_t n1, int i);

/// max{2 (3d/(d+1))^d, 2^(d+2), 16 d}, rounded up.
std::int64_t epoch_min_n1(int d);

}  // namespace burn
