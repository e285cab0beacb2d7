#include "burn/config.hpp"

#include "burn/error.hpp"

namespace burn {

using nlohmann::json;

namespace {

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
  }
}

std::int64_t require_int(const json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(std::string("missing '") + key + "'");
  return get_or<std::int64_t>(j, key, 0);
}

Rational rational_at(const json& j, const char* key, Rational fallback) {
  return j.contains(key) ? rational_from_json(j.at(key)) : fallback;
}

std::string kind_of(const Schedule& s) {
  switch (s.kind()) {
    case Schedule::Kind::linear:
      return "linear";
    case Schedule::Kind::power:
      return "power";
    case Schedule::Kind::step_log2:
      return "step_log2";
    case Schedule::Kind::double_exp_pow:
      return "double_exp_pow";
    case Schedule::Kind::table:
      return "table";
    case Schedule::Kind::constant:
      return "constant";
  }
  return "unknown";
}

}  // namespace

TraceOptions RunConfig::trace_options() const {
  TraceOptions o;
  o.horizon = horizon;
  o.checkpoints = checkpoints.empty() ? default_checkpoints(horizon, stride) : checkpoints;
  o.engine = engine;
  o.mc_samples = samples;
  o.mc_seed = seed.value_or(0);
  return o;
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number()) return Rational::from_double(j.get<double>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw ConfigError("expected a number or a rational string, got " + j.dump());
}

Schedule schedule_from_json(const json& j) {
  if (j.is_string()) return schedule_from_json(json{{"kind", j}});
  if (!j.is_object()) throw ConfigError("schedule must be an object");
  const auto kind = get_or<std::string>(j, "kind", "");
  if (kind == "linear") return Schedule::linear(rational_at(j, "c", Rational(1)));
  if (kind == "power") return Schedule::power(rational_at(j, "c", Rational(1)), rational_at(j, "p", Rational(1)));
  if (kind == "step_log2") return Schedule::step_log2();
  if (kind == "double_exp_pow") return Schedule::double_exp_pow(rational_at(j, "p", Rational(1)));
  if (kind == "table") return Schedule::table(get_or<std::vector<std::int64_t>>(j, "values", {}));
  if (kind == "constant") return Schedule::constant(require_int(j, "value"));
  throw ConfigError("unknown schedule kind '" + kind + "'");
}

json schedule_to_json(const Schedule& s) {
  json j{{"kind", kind_of(s)}};
  switch (s.kind()) {
    case Schedule::Kind::linear:
      j["c"] = s.c().str();
      break;
    case Schedule::Kind::power:
      j["c"] = s.c().str();
      j["p"] = s.p().str();
      break;
    case Schedule::Kind::double_exp_pow:
      j["p"] = s.p().str();
      break;
    case Schedule::Kind::table:
      j["values"] = s.values();
      break;
    case Schedule::Kind::constant:
      j["value"] = s.value();
      break;
    case Schedule::Kind::step_log2:
      break;
  }
  return j;
}

GrowthSpec growth_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("growth must be an object");
  if (j.contains("axes")) {
    GrowthSpec g;
    for (const auto& ax : j.at("axes")) {
      if (!ax.contains("upper")) throw ConfigError("growth axis needs 'upper'");
      const Schedule upper = schedule_from_json(ax.at("upper"));
      const Schedule lower = ax.contains("lower") ? schedule_from_json(ax.at("lower")) : upper;
      g.axes.push_back({lower, upper});
      g.symmetric = g.symmetric && lower == upper;
    }
    if (g.axes.empty()) throw DimensionError("growth needs at least one axis");
    return g;
  }
  const auto d = require_int(j, "dimension");
  if (d < 1) throw DimensionError("growth dimension must be >= 1");
  if (!j.contains("schedule")) throw ConfigError("growth needs 'schedule'");
  const Schedule f = schedule_from_json(j.at("schedule"));
  const auto dim = static_cast<std::size_t>(d);
  if (!j.contains("lower") || j.at("lower") == "mirror") return GrowthSpec::symmetric_box(dim, f);
  if (j.at("lower") == "zero") return GrowthSpec::quadrant(dim, f);
  GrowthSpec g;
  g.symmetric = false;
  const Schedule lower = schedule_from_json(j.at("lower"));
  for (std::size_t i = 0; i < dim; ++i) g.axes.push_back({lower, f});
  return g;
}

json growth_to_json(const GrowthSpec& g) {
  json axes = json::array();
  for (const auto& ax : g.axes) axes.push_back({{"lower", schedule_to_json(ax.lower)}, {"upper", schedule_to_json(ax.upper)}});
  return {{"dimension", g.dim()}, {"symmetric", g.symmetric}, {"axes", axes}};
}

StrategySpec strategy_from_json(const json& j) {
  if (j.is_string()) return strategy_from_json(json{{"kind", j}});
  if (!j.is_object()) throw ConfigError("strategy must be an object");
  StrategySpec s;
  s.kind = parse_kind(get_or<std::string>(j, "kind", ""));
  s.skip_at = get_or<int>(j, "skip_at", s.skip_at);
  s.rho = rational_at(j, "rho", s.rho);
  s.period = get_or<std::int64_t>(j, "period", s.period);
  s.max_gap = get_or<std::int64_t>(j, "k", s.max_gap);
  s.epsilon = rational_at(j, "epsilon", s.epsilon);
  s.c = rational_at(j, "c", s.c);
  if (j.contains("c")) s.spiral_c = j.at("c").is_string() ? s.c.to_double() : get_or<double>(j, "c", 1.0);
  s.d = get_or<int>(j, "d", s.d);
  s.n1 = get_or<std::int64_t>(j, "n1", s.n1);
  if (j.contains("seed")) s.seed = get_or<std::uint64_t>(j, "seed", 0);
  return s;
}

json strategy_to_json(const StrategySpec& s) {
  json j{{"kind", kind_name(s.kind)}, {"descriptor", s.describe()}};
  using K = StrategySpec::Kind;
  switch (s.kind) {
    case K::origin_only:
    case K::all_skip:
      j["d"] = s.d;
      break;
    case K::nearest_top:
      j["skip_at"] = s.skip_at;
      break;
    case K::skinny_triangle:
      j["rho"] = s.rho.str();
      break;
    case K::layer_cake:
      j["period"] = s.period;
      break;
    case K::quadrant_composition:
      j["epsilon"] = s.epsilon.str();
      break;
    case K::rotating_sqrt_gap:
      j["c"] = s.c.str();
      break;
    case K::linear_target:
      j["c"] = s.c.str();
      j["rho"] = s.rho.str();
      break;
    case K::polar_spiral:
      j["c"] = s.spiral_c;
      break;
    case K::epoch_random:
      j["d"] = s.d;
      j["n1"] = s.n1;
      break;
  }
  if (s.seed) j["seed"] = *s.seed;
  return j;
}

RunConfig parse_run_config(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  RunConfig c;
  if (!j.contains("strategy")) throw ConfigError("config needs 'strategy'");
  if (!j.contains("growth")) throw ConfigError("config needs 'growth'");
  c.strategy = strategy_from_json(j.at("strategy"));
  c.growth = growth_from_json(j.at("growth"));
  c.horizon = require_int(j, "horizon");
  if (c.horizon < 0) throw ConfigError("horizon must be >= 0");
  c.checkpoints = get_or<std::vector<std::int64_t>>(j, "checkpoints", {});
  c.stride = get_or<std::int64_t>(j, "stride", 0);
  if (j.contains("engine")) c.engine = parse_engine(get_or<std::string>(j, "engine", "auto"));
  c.samples = get_or<Count>(j, "samples", c.samples);
  if (j.contains("seed")) c.seed = get_or<std::uint64_t>(j, "seed", 0);
  c.out = get_or<std::string>(j, "out", c.out);
  if (!c.strategy.seed) c.strategy.seed = c.seed;
  if (c.strategy.stochastic() && !c.strategy.seed)
    throw ConfigError(kind_name(c.strategy.kind) + " is stochastic and needs a seed");
  return c;
}

json sidecar_json(const BurnTrace& trace, const RunConfig& config) {
  json records = json::array();
  for (const auto& r : trace.records) {
    if (r.estimated) records.push_back({{"n", r.n}, {"density", r.density}, {"std_error", r.std_error}});
  }
  json j{
      {"tool", "burn"},
      {"tool_version", kToolVersion},
      {"strategy", strategy_to_json(config.strategy)},
      {"growth", growth_to_json(trace.growth)},
      {"engine", engine_name(trace.engine)},
      {"horizon", config.horizon},
      {"checkpoints", trace.records.size()},
      {"diagnostics", trace.diagnostics},
  };
  j["seed"] = trace.seed ? json(*trace.seed) : json(nullptr);
  if (trace.engine == EngineKind::monte_carlo) {
    j["mc_samples"] = config.samples;
    j["mc_estimates"] = records;
  }
  return j;
}

}  // namespace burn
