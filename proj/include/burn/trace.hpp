#pragma once

// Driving a strategy through a growing grid and recording checkpoint densities.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "burn/activation.hpp"
#include "burn/engines.hpp"
#include "burn/growth.hpp"
#include "burn/strategies.hpp"

namespace burn {

enum class EngineKind { auto_select, balls, frontier, monte_carlo };

std::string engine_name(EngineKind kind);
/// "auto", "balls", "frontier", "mc" (or "monte_carlo").
EngineKind parse_engine(const std::string& name);

struct TraceOptions {
  std::int64_t horizon = 0;
  /// Empty means default_checkpoints(horizon, 0).
  std::vector<std::int64_t> checkpoints;
  EngineKind engine = EngineKind::auto_select;
  Count mc_samples = 200'000;
  std::uint64_t mc_seed = 0;
  Count budget = cell_budget();
};

struct CheckpointRecord {
  std::int64_t n = 0;
  Box box;
  Count grid_cells = 0;
  /// Exact, or the rounded estimate under Monte Carlo.
  Count burned = 0;
  double density = 0.0;
  /// Decimal density as written to the CSV.
  std::string density_text;
  bool estimated = false;
  double std_error = 0.0;
};

struct BurnTrace {
  std::vector<CheckpointRecord> records;
  EngineKind engine = EngineKind::auto_select;  // as resolved
  std::string strategy;
  GrowthSpec growth;
  std::optional<std::uint64_t> seed;
  std::map<std::string, std::int64_t> diagnostics;
  History history;

  const CheckpointRecord& at(std::int64_t n) const;
};

/// 0, s, 2s, ... and the horizon itself; s = max(1, horizon / 40) when stride is 0.
std::vector<std::int64_t> default_checkpoints(std::int64_t horizon, std::int64_t stride);

/// Every step 0..horizon.
std::vector<std::int64_t> all_checkpoints(std::int64_t horizon);

/// Runs the strategy for n = 0..horizon. Every emitted activation is checked:
/// OutsideGrid when off the grid, InvalidActivation when in N[B_{n-1}].
/// engine=balls and engine=monte_carlo require the free-spread certificate on
/// [1, horizon] (ConfigError otherwise). auto picks balls when certified and
/// frontier otherwise; for d >= 3 it falls back to Monte Carlo when the slab
/// engine would exceed the budget.
BurnTrace run_trace(Strategy& strategy, const GrowthSpec& growth, const TraceOptions& options);
BurnTrace run_trace(const StrategySpec& spec, const GrowthSpec& growth, const TraceOptions& options);

/// n,extent_1..extent_d,grid_cells,burned_cells,density. extent_i is the upper
/// wall hi_i of axis i.
void write_csv(const BurnTrace& trace, std::ostream& out);

/// "out/trace.csv" -> "out/trace.json".
std::string sidecar_path(const std::string& csv_path);

}  // namespace burn
