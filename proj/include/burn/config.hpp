#pragma once

// JSON run configuration and the trace sidecar.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "burn/growth.hpp"
#include "burn/strategies.hpp"
#include "burn/trace.hpp"

namespace burn {

inline constexpr const char* kToolVersion = "1.0.0";

struct RunConfig {
  StrategySpec strategy;
  GrowthSpec growth;
  std::int64_t horizon = 0;
  std::vector<std::int64_t> checkpoints;
  std::int64_t stride = 0;
  EngineKind engine = EngineKind::auto_select;
  Count samples = 200'000;
  std::optional<std::uint64_t> seed;
  std::string out = "trace.csv";

  TraceOptions trace_options() const;
};

/// Rationals are JSON numbers or strings such as "3/2" or "0.25".
Rational rational_from_json(const nlohmann::json& j);

Schedule schedule_from_json(const nlohmann::json& j);
nlohmann::json schedule_to_json(const Schedule& s);

/// {"dimension": d, "schedule": {...}, "lower": "mirror" | "zero" | {...}}
/// or {"axes": [{"lower": {...}, "upper": {...}}, ...]}.
GrowthSpec growth_from_json(const nlohmann::json& j);
nlohmann::json growth_to_json(const GrowthSpec& g);

/// {"kind": "...", parameters...}. `seed` falls back to the run seed.
StrategySpec strategy_from_json(const nlohmann::json& j);
nlohmann::json strategy_to_json(const StrategySpec& s);

/// Throws ConfigError on malformed input or a stochastic strategy without a seed.
RunConfig parse_run_config(const nlohmann::json& j);

nlohmann::json sidecar_json(const BurnTrace& trace, const RunConfig& config);

}  // namespace burn
