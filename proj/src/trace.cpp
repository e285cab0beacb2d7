#include "burn/trace.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "burn/error.hpp"

namespace burn {

std::string engine_name(EngineKind kind) {
  switch (kind) {
    case EngineKind::auto_select:
      return "auto";
    case EngineKind::balls:
      return "balls";
    case EngineKind::frontier:
      return "frontier";
    case EngineKind::monte_carlo:
      return "mc";
  }
  return "unknown";
}

EngineKind parse_engine(const std::string& name) {
  if (name == "auto") return EngineKind::auto_select;
  if (name == "balls") return EngineKind::balls;
  if (name == "frontier") return EngineKind::frontier;
  if (name == "mc" || name == "monte_carlo") return EngineKind::monte_carlo;
  throw ConfigError("unknown engine '" + name + "'");
}

const CheckpointRecord& BurnTrace::at(std::int64_t n) const {
  for (const auto& r : records)
    if (r.n == n) return r;
  throw ConfigError("no checkpoint at n=" + std::to_string(n));
}

std::vector<std::int64_t> default_checkpoints(std::int64_t horizon, std::int64_t stride) {
  if (horizon < 0) throw ConfigError("horizon must be >= 0");
  if (stride <= 0) stride = std::max<std::int64_t>(1, horizon / 40);
  std::vector<std::int64_t> out;
  for (std::int64_t n = 0; n <= horizon; n += stride) out.push_back(n);
  if (out.back() != horizon) out.push_back(horizon);
  return out;
}

std::vector<std::int64_t> all_checkpoints(std::int64_t horizon) { return default_checkpoints(horizon, 1); }

namespace {

bool certified(const GrowthSpec& growth, std::int64_t horizon) {
  return horizon < 1 || free_spread_certificate(growth, 1, horizon);
}

EngineKind resolve_engine(EngineKind requested, const GrowthSpec& growth, const TraceOptions& options) {
  const bool cert = certified(growth, options.horizon);
  if ((requested == EngineKind::balls || requested == EngineKind::monte_carlo) && !cert)
    throw ConfigError("engine '" + engine_name(requested) +
                      "' needs the free-spread certificate, which fails for this growth; use frontier");
  if (requested != EngineKind::auto_select) return requested;
  if (!cert) return EngineKind::frontier;
  if (growth.dim() == 2) return EngineKind::balls;
  // Slab work is cells * A; A <= horizon + 1.
  const Box last = box_at(growth, options.horizon);
  const long double work = static_cast<long double>(last.cells()) * static_cast<long double>(options.horizon + 1);
  return work > static_cast<long double>(options.budget) ? EngineKind::monte_carlo : EngineKind::balls;
}

std::string mc_text(double p) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.18f", p);
  return buf;
}

}  // namespace

BurnTrace run_trace(Strategy& strategy, const GrowthSpec& growth, const TraceOptions& options) {
  if (strategy.dim() != growth.dim())
    throw DimensionError("strategy dimension " + std::to_string(strategy.dim()) + " differs from growth dimension " +
                         std::to_string(growth.dim()));
  std::vector<std::int64_t> checkpoints =
      options.checkpoints.empty() ? default_checkpoints(options.horizon, 0) : options.checkpoints;
  std::sort(checkpoints.begin(), checkpoints.end());
  checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());
  if (!checkpoints.empty() && (checkpoints.front() < 0 || checkpoints.back() > options.horizon))
    throw ConfigError("checkpoints must lie in [0, horizon]");

  BurnTrace trace;
  trace.growth = growth;
  trace.engine = resolve_engine(options.engine, growth, options);
  const bool frontier = trace.engine == EngineKind::frontier;
  Rng mc_rng(options.mc_seed);
  FrontierState state;
  std::size_t next_cp = 0;

  for (std::int64_t n = 0; n <= options.horizon; ++n) {
    const Box box = box_at(growth, n);
    if (frontier && box.cells() > options.budget)
      throw BudgetExceeded("frontier grid of " + std::to_string(box.cells()) + " cells at n=" + std::to_string(n) +
                           " exceeds budget " + std::to_string(options.budget));
    StepContext ctx;
    ctx.n = n;
    ctx.box = &box;
    if (n == 0) {
      ctx.is_free = [](const Point&) { return true; };
    } else if (frontier) {
      ctx.is_free = [&state](const Point& p) { return !state.touches(p); };
    } else {
      ctx.is_free = [&trace, &box, n](const Point& p) { return is_valid_activation(trace.history, p, n, box); };
    }

    Activation act = strategy.next(ctx);
    if (act.time != n) throw ConfigError("strategy answered for time " + std::to_string(act.time) + " at n=" + std::to_string(n));
    if (!act.is_skip()) {
      const Point& v = *act.point;
      if (v.dim() != growth.dim()) throw DimensionError("activation dimension differs from grid");
      if (!box.contains(v))
        throw OutsideGrid("activation " + v.str() + " outside grid " + box.str() + " at n=" + std::to_string(n));
      if (!frontier && n > 0 && !is_valid_activation(trace.history, v, n, box))
        throw InvalidActivation("activation " + v.str() + " at n=" + std::to_string(n) +
                                " is in the closed neighbourhood of the burned set");
    }

    if (frontier) {
      if (n == 0) {
        state = FrontierState(box, 0);
        if (!act.is_skip()) state.ignite(*act.point);
      } else {
        state = frontier_step(state, box, act);
      }
    }
    trace.history.push_back(std::move(act));

    if (next_cp < checkpoints.size() && checkpoints[next_cp] == n) {
      ++next_cp;
      CheckpointRecord rec;
      rec.n = n;
      rec.box = box;
      rec.grid_cells = box.cells();
      switch (trace.engine) {
        case EngineKind::frontier:
          rec.burned = state.burned();
          break;
        case EngineKind::balls:
          rec.burned = growth.dim() == 2 ? union_count_2d(trace.history, n, box)
                                         : union_count_slab(trace.history, n, box, options.budget);
          break;
        case EngineKind::monte_carlo: {
          const auto est = estimate_density_mc(trace.history, n, box, options.mc_samples, mc_rng);
          rec.estimated = true;
          rec.std_error = est.std_error;
          rec.density = est.estimate;
          rec.density_text = mc_text(est.estimate);
          rec.burned = std::llround(est.estimate * static_cast<double>(rec.grid_cells));
          break;
        }
        case EngineKind::auto_select:
          throw ConfigError("engine left unresolved");
      }
      if (!rec.estimated) {
        rec.density = static_cast<double>(rec.burned) / static_cast<double>(rec.grid_cells);
        rec.density_text = ratio_decimal(rec.burned, rec.grid_cells, 18);
      }
      trace.records.push_back(std::move(rec));
    }
  }
  trace.diagnostics = strategy.diagnostics();
  return trace;
}

BurnTrace run_trace(const StrategySpec& spec, const GrowthSpec& growth, const TraceOptions& options) {
  auto strategy = make_strategy(spec);
  BurnTrace trace = run_trace(*strategy, growth, options);
  trace.strategy = spec.describe();
  trace.seed = spec.seed;
  return trace;
}

void write_csv(const BurnTrace& trace, std::ostream& out) {
  const std::size_t d = trace.growth.dim();
  out << "n";
  for (std::size_t i = 1; i <= d; ++i) out << ",extent_" << i;
  out << ",grid_cells,burned_cells,density\n";
  for (const auto& r : trace.records) {
    out << r.n;
    for (const auto& ax : r.box.axes) out << ',' << ax.hi;
    out << ',' << r.grid_cells << ',' << r.burned << ',' << r.density_text << '\n';
  }
}

std::string sidecar_path(const std::string& csv_path) {
  const auto slash = csv_path.find_last_of('/');
  const auto dot = csv_path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return csv_path + ".json";
  return csv_path.substr(0, dot) + ".json";
}

}  // namespace burn
