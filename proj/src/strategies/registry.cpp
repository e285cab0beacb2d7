#include <cmath>
#include <sstream>

#include "burn/error.hpp"
#include "internal.hpp"

namespace burn {

namespace {

using Kind = StrategySpec::Kind;

constexpr std::pair<Kind, const char*> kNames[] = {
    {Kind::origin_only, "origin_only"},
    {Kind::all_skip, "all_skip"},
    {Kind::nearest_top, "nearest_top"},
    {Kind::skinny_triangle, "skinny_triangle"},
    {Kind::layer_cake, "layer_cake"},
    {Kind::quadrant_composition, "quadrant_composition"},
    {Kind::rotating_sqrt_gap, "rotating_sqrt_gap"},
    {Kind::linear_target, "linear_target"},
    {Kind::polar_spiral, "polar_spiral"},
    {Kind::epoch_random, "epoch_random"},
};

}  // namespace

std::string kind_name(Kind kind) {
  for (const auto& [k, name] : kNames)
    if (k == kind) return name;
  return "unknown";
}

Kind parse_kind(const std::string& name) {
  for (const auto& [k, n] : kNames)
    if (name == n) return k;
  throw ConfigError("unknown strategy kind '" + name + "'");
}

std::string StrategySpec::describe() const {
  std::ostringstream out;
  out << kind_name(kind);
  switch (kind) {
    case Kind::origin_only:
    case Kind::all_skip:
      out << "(d=" << d << ")";
      break;
    case Kind::nearest_top:
      out << "(skip_at=" << skip_at << ")";
      break;
    case Kind::skinny_triangle:
      out << "(rho=" << rho.str() << ")";
      break;
    case Kind::layer_cake:
      out << "(period=" << period << ")";
      break;
    case Kind::quadrant_composition:
      out << "(epsilon=" << epsilon.str() << ")";
      break;
    case Kind::rotating_sqrt_gap:
      out << "(c=" << c.str() << ")";
      break;
    case Kind::linear_target:
      out << "(c=" << c.str() << ",rho=" << rho.str() << ")";
      break;
    case Kind::polar_spiral:
      out << "(c=" << spiral_c << ")";
      break;
    case Kind::epoch_random:
      out << "(d=" << d << ",n1=" << n1 << ",seed=" << (seed ? std::to_string(*seed) : "none") << ")";
      break;
  }
  return out.str();
}

std::unique_ptr<Strategy> make_strategy(const StrategySpec& spec) {
  namespace s = strategies;
  switch (spec.kind) {
    case Kind::origin_only:
      if (spec.d < 1) throw DimensionError("origin_only needs d >= 1");
      return s::make_origin_only(spec.d);
    case Kind::all_skip:
      if (spec.d < 1) throw DimensionError("all_skip needs d >= 1");
      return s::make_all_skip(spec.d);
    case Kind::nearest_top:
      if (spec.skip_at != 1 && spec.skip_at != 2) throw ConfigError("nearest_top needs skip_at in {1, 2}");
      return s::make_nearest_top(spec.skip_at);
    case Kind::skinny_triangle:
      if (!(Rational(0) < spec.rho) || !(spec.rho < Rational(1)))
        throw ConfigError("skinny_triangle needs rho in (0, 1), got " + spec.rho.str());
      return s::make_skinny_triangle(spec.rho);
    case Kind::layer_cake: {
      const std::int64_t k = spec.max_gap > 0 ? spec.max_gap : spec.period;
      if (spec.period < 1) throw ConfigError("layer_cake needs period >= 1");
      if (spec.period > k) throw ConfigError("layer_cake needs period <= k");
      return s::make_layer_cake(spec.period);
    }
    case Kind::quadrant_composition:
      split_epsilon(spec.epsilon);
      return s::make_quadrant_composition(spec.epsilon);
    case Kind::rotating_sqrt_gap:
      return s::make_rotating_sqrt_gap(spec.c);
    case Kind::linear_target: {
      if (spec.c < Rational(1)) throw ConfigError("linear_target needs c >= 1");
      const Rational c2 = spec.c * spec.c;
      const Rational rho_c2 = spec.rho * c2;
      if (rho_c2 < Rational(1, 2) || Rational(1) < spec.rho)
        throw ConfigError("linear_target needs rho in [1/(2c^2), 1], got " + spec.rho.str());
      if (rho_c2 <= Rational(1)) return s::make_quadrant_composition(rho_c2);
      return s::make_rotating_sqrt_gap_real(spec.c.to_double() * std::sqrt(spec.rho.to_double()));
    }
    case Kind::polar_spiral:
      return s::make_polar_spiral(spec.spiral_c);
    case Kind::epoch_random:
      if (!spec.seed) throw ConfigError("epoch_random is stochastic and needs an explicit seed");
      return s::make_epoch_random(spec.d, spec.n1, *spec.seed);
  }
  throw ConfigError("unhandled strategy kind");
}

}  // namespace burn
