#include "burn/verify.hpp"

#include <cmath>
#include <functional>
#include <map>

#include "burn/analysis.hpp"
#include "burn/error.hpp"
#include "burn/serial.hpp"
#include "burn/trace.hpp"

namespace burn {

using nlohmann::json;

json CheckReport::to_json() const { return {{"id", id}, {"parameters", parameters}, {"pass", pass}, {"witness", witness}}; }

namespace {

StrategySpec spec_of(StrategySpec::Kind kind) {
  StrategySpec s;
  s.kind = kind;
  return s;
}

// A random valid history on `growth`: at each step, with probability 1/3,
// a uniform cell of the grid is tried and kept when it is outside N[B_{n-1}].
History random_history(const GrowthSpec& growth, std::int64_t horizon, Rng& rng) {
  History h;
  FrontierState state;
  for (std::int64_t n = 0; n <= horizon; ++n) {
    const Box box = box_at(growth, n);
    Activation act = Activation::skip(n);
    if (rng.below(3) == 0) {
      Point p = Point::origin(box.dim());
      for (std::size_t i = 0; i < box.dim(); ++i) p[i] = rng.uniform(box.axes[i].lo, box.axes[i].hi);
      if (n == 0 || !state.touches(p)) act = Activation::at(n, p);
    }
    if (n == 0) {
      state = FrontierState(box, 0);
      if (!act.is_skip()) state.ignite(*act.point);
    } else {
      state = serial::frontier_step(state, box, act);
    }
    h.push_back(act);
  }
  return h;
}

GrowthSpec random_growth(Rng& rng, bool certified) {
  auto pick = [&](bool cert) -> Schedule {
    if (cert) {
      switch (rng.below(3)) {
        case 0:
          return Schedule::linear(Rational(2 + static_cast<std::int64_t>(rng.below(3)), 2));
        case 1:
          return Schedule::power(Rational(1), Rational(5, 4));
        default:
          return Schedule::constant(static_cast<std::int64_t>(rng.below(3)));
      }
    }
    switch (rng.below(3)) {
      case 0:
        return Schedule::step_log2();
      case 1:
        return Schedule::power(Rational(1, 3), Rational(1));
      default:
        return Schedule::power(Rational(1, 2), Rational(1));
    }
  };
  GrowthSpec g;
  g.symmetric = false;
  for (int axis = 0; axis < 2; ++axis) {
    Schedule upper = pick(certified);
    if (upper.kind() == Schedule::Kind::constant) upper = Schedule::linear(Rational(1));
    g.axes.push_back({pick(certified), upper});
  }
  return g;
}

std::vector<CheckReport> suite_engines(Scale scale) {
  const int cases = scale == Scale::full ? 200 : 40;
  const std::int64_t horizon = 40;
  Rng rng(20240601);
  std::vector<CheckReport> out;
  int mismatches = 0;
  json first_bad = nullptr;
  for (int c = 0; c < cases; ++c) {
    const bool cert = c % 2 == 0;
    const GrowthSpec growth = random_growth(rng, cert);
    const History h = random_history(growth, horizon, rng);
    const auto dense = serial::dense_burn_counts(h, growth, horizon);
    const bool has_cert = free_spread_certificate(growth, 1, horizon);
    FrontierState state;
    for (std::int64_t n = 0; n <= horizon; ++n) {
      const Box box = box_at(growth, n);
      if (n == 0) {
        state = FrontierState(box, 0);
        if (!h[0].is_skip()) state.ignite(*h[0].point);
      } else {
        state = frontier_step(state, box, h[static_cast<std::size_t>(n)]);
      }
      std::span<const Activation> prefix(h.data(), static_cast<std::size_t>(n) + 1);
      bool ok = state.burned() == dense[static_cast<std::size_t>(n)];
      Count balls = -1;
      if (has_cert) {
        balls = union_count_2d(prefix, n, box);
        ok = ok && balls == dense[static_cast<std::size_t>(n)] && balls == serial::union_count_2d(prefix, n, box) &&
             balls == union_count_slab(prefix, n, box);
      }
      if (!ok) {
        ++mismatches;
        if (first_bad.is_null())
          first_bad = {{"case", c}, {"n", n}, {"dense", dense[static_cast<std::size_t>(n)]}, {"frontier", state.burned()},
                       {"balls", balls}};
      }
    }
  }
  out.push_back({"engines.equivalence",
                 {{"cases", cases}, {"horizon", horizon}, {"d", 2}},
                 mismatches == 0,
                 {{"mismatches", mismatches}, {"first_mismatch", first_bad}}});
  return out;
}

std::vector<CheckReport> suite_lemma21(Scale scale) {
  const std::int64_t horizon = scale == Scale::full ? 4000 : 1000;
  std::vector<CheckReport> out;
  for (int skip_at : {1, 2}) {
    StrategySpec s = spec_of(StrategySpec::Kind::nearest_top);
    s.skip_at = skip_at;
    TraceOptions opt;
    opt.horizon = horizon;
    opt.checkpoints = all_checkpoints(horizon);
    opt.engine = EngineKind::frontier;
    const auto trace = run_trace(s, GrowthSpec::quadrant(2, Schedule::linear(Rational(1))), opt);
    std::int64_t worst_n = -1;
    double worst_slack = INFINITY;
    for (const auto& r : trace.records) {
      if (r.n < 1) continue;
      const double slack = bound_lemma21(r.n) - static_cast<double>(r.burned);
      if (slack < worst_slack) {
        worst_slack = slack;
        worst_n = r.n;
      }
    }
    out.push_back({"lemma21.bound",
                   {{"skip_at", skip_at}, {"horizon", horizon}},
                   worst_slack >= 0,
                   {{"min_slack", worst_slack}, {"at_n", worst_n}, {"final_density", trace.records.back().density}}});
  }
  return out;
}

std::vector<CheckReport> suite_lemma41(Scale scale) {
  const std::int64_t rmax = scale == Scale::full ? 12 : 8;
  int failures = 0;
  json witness = json::array();
  for (int d = 2; d <= 4; ++d) {
    for (std::int64_t r = 0; r <= rmax; ++r) {
      const Count s = sphere_cardinality(d, r);
      const auto b = lemma41_sphere_bounds(d, r);
      const bool lower_ok = b.lower.num == 0 || b.lower <= Rational(s);
      const bool upper_ok = Rational(s) <= b.upper;
      if (!lower_ok || !upper_ok) {
        ++failures;
        witness.push_back({{"d", d}, {"r", r}, {"sphere", s}, {"lower", b.lower.str()}, {"upper", b.upper.str()}});
      }
    }
  }
  int ratio_failures = 0;
  for (int d = 2; d <= 4; ++d) {
    for (std::int64_t r = d + 1; r <= 16; ++r) {
      // |B| / (2r+1)^d >= 1 / (2^d d^d)  <=>  |B| 2^d d^d >= (2r+1)^d.
      const auto lhs = static_cast<long double>(ball_cardinality(d, r)) * std::pow(2.0L * d, d);
      if (lhs < std::pow(static_cast<long double>(2 * r + 1), d)) ++ratio_failures;
    }
  }
  return {{"lemma41.sphere_bracket", {{"d", "2..4"}, {"r_max", rmax}}, failures == 0, {{"failures", witness}}},
          {"lemma41.ball_ratio", {{"d", "2..4"}, {"r", "d+1..16"}}, ratio_failures == 0, {{"failures", ratio_failures}}}};
}

// Signed permutations fix S_1(0, x), so P ranges over sorted nonnegative coordinates.
void canonical_points(int d, std::int64_t r, std::int64_t cap, std::vector<std::int64_t>& cur,
                      const std::function<void(const Point&)>& f) {
  if (static_cast<int>(cur.size()) == d - 1) {
    if (r <= cap) {
      cur.push_back(r);
      f(Point(cur));
      cur.pop_back();
    }
    return;
  }
  for (std::int64_t v = 0; v <= std::min(r, cap); ++v) {
    cur.push_back(v);
    canonical_points(d, r - v, v, cur, f);
    cur.pop_back();
  }
}

std::vector<CheckReport> suite_lemma42(Scale scale) {
  const std::int64_t m = scale == Scale::full ? 12 : 8;
  // Two hypothesis sets: the stated one (r <= x+y, r+x >= y) and the stronger
  // one the counting argument actually relies on (additionally x <= r+y, so
  // the sphere reaches the ball around P). A bound whose base
  // (x+y-r)/2 - d is not positive is vacuous and skipped.
  struct Tally {
    std::int64_t cases = 0;
    std::int64_t failures = 0;
    json first = nullptr;
  };
  Tally stated, tight;
  for (int d : {2, 3}) {
    for (std::int64_t x = 0; x <= m; ++x)
      for (std::int64_t y = 0; y <= m; ++y)
        for (std::int64_t r = 0; r <= m; ++r) {
          if (r > x + y || r + x < y) continue;
          if (x + y - r <= 2 * d) continue;
          const double bound = lemma42_bound(d, x, y, r);
          const bool reaches = x <= r + y;
          std::vector<std::int64_t> cur;
          canonical_points(d, r, r, cur, [&](const Point& p) {
            const Count exact = sphere_ball_intersection_count(x, p, y);
            const bool bad = static_cast<double>(exact) < bound;
            for (Tally* t : {&stated, reaches ? &tight : nullptr}) {
              if (t == nullptr) continue;
              ++t->cases;
              if (!bad) continue;
              ++t->failures;
              if (t->first.is_null())
                t->first = {{"d", d}, {"x", x}, {"y", y}, {"r", r}, {"P", p.str()}, {"exact", exact}, {"bound", bound}};
            }
          });
        }
  }
  const auto report = [&](const char* id, const char* hypotheses, const Tally& t) {
    return CheckReport{id, {{"d", {2, 3}}, {"max", m}, {"hypotheses", hypotheses}}, t.failures == 0,
                       {{"cases", t.cases}, {"failures", t.failures}, {"first_failure", t.first}}};
  };
  return {report("lemma42.intersection", "r <= x+y, r+x >= y", stated),
          report("lemma42.intersection_reaching", "r <= x+y, r+x >= y, x <= r+y", tight)};
}

std::vector<CheckReport> suite_thm41(Scale scale) {
  struct Run {
    std::string name;
    StrategySpec spec;
    GrowthSpec growth;
    std::int64_t horizon;
  };
  const std::int64_t h = scale == Scale::full ? 800 : 300;
  StrategySpec spiral = spec_of(StrategySpec::Kind::polar_spiral);
  StrategySpec epoch = spec_of(StrategySpec::Kind::epoch_random);
  epoch.n1 = 36;
  epoch.seed = 7;
  StrategySpec nearest = spec_of(StrategySpec::Kind::nearest_top);
  const std::vector<Run> runs = {
      {"origin_only/linear1", spec_of(StrategySpec::Kind::origin_only), GrowthSpec::symmetric_box(2, Schedule::linear(Rational(1))), h},
      {"polar_spiral/power1.6", spiral, GrowthSpec::symmetric_box(2, Schedule::power(Rational(1), Rational(8, 5))), h},
      {"nearest_top/quadrant", nearest, GrowthSpec::quadrant(2, Schedule::linear(Rational(1))), h},
      {"epoch_random/power1.5", epoch, GrowthSpec::symmetric_box(2, Schedule::power(Rational(1), Rational(3, 2))), 324},
  };
  std::vector<CheckReport> out;
  for (const auto& run : runs) {
    TraceOptions opt;
    opt.horizon = run.horizon;
    const auto trace = run_trace(run.spec, run.growth, opt);
    bool ok = true;
    json worst = nullptr;
    for (const auto& r : trace.records) {
      if (r.burned > bound_thm41(2, r.n)) {
        ok = false;
        worst = {{"n", r.n}, {"burned", r.burned}, {"bound", bound_thm41(2, r.n)}};
        break;
      }
    }
    out.push_back({"thm41.bound", {{"run", run.name}, {"horizon", run.horizon}}, ok,
                   {{"checkpoints", trace.records.size()}, {"violation", worst}}});
  }
  return out;
}

std::vector<CheckReport> suite_densities(Scale scale) {
  const std::int64_t h = scale == Scale::full ? 4000 : 2000;
  const GrowthSpec quadrant = GrowthSpec::quadrant(2, Schedule::linear(Rational(1)));
  std::vector<CheckReport> out;
  for (const auto& rho : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
    StrategySpec s = spec_of(StrategySpec::Kind::skinny_triangle);
    s.rho = rho;
    TraceOptions opt;
    opt.horizon = h;
    opt.checkpoints = {h};
    const auto trace = run_trace(s, quadrant, opt);
    const double target = (1.0 + rho.to_double()) / 2.0;
    const double got = trace.records.back().density;
    out.push_back({"densities.skinny_triangle", {{"rho", rho.str()}, {"n", h}, {"tolerance", 0.02}},
                   std::abs(got - target) <= 0.02, {{"density", got}, {"target", target}}});
  }
  {
    StrategySpec s = spec_of(StrategySpec::Kind::layer_cake);
    s.period = 4;
    TraceOptions opt;
    opt.horizon = h;
    opt.checkpoints = all_checkpoints(h);
    opt.engine = EngineKind::frontier;
    const auto trace = run_trace(s, quadrant, opt);
    std::int64_t bad = -1;
    for (const auto& r : trace.records) {
      const Count floor_value = (r.n + 1) * (r.n + 1) - 2 * r.n * 4;
      if (r.burned < floor_value) {
        bad = r.n;
        break;
      }
    }
    out.push_back({"densities.layer_cake", {{"k", 4}, {"horizon", h}}, bad < 0,
                   {{"first_violation", bad}, {"final_density", trace.records.back().density}}});
  }
  {
    TraceOptions opt;
    opt.horizon = 1000;
    opt.checkpoints = {1000};
    const auto trace = run_trace(spec_of(StrategySpec::Kind::origin_only),
                                 GrowthSpec::symmetric_box(2, Schedule::linear(Rational(1))), opt);
    const double got = trace.records.back().density;
    out.push_back({"densities.origin_only", {{"n", 1000}, {"tolerance", 0.005}}, std::abs(got - 0.5) <= 0.005,
                   {{"density", got}, {"burned", trace.records.back().burned}}});
  }
  const std::int64_t hc = scale == Scale::full ? 3000 : 1500;
  for (const auto& eps : {Rational(1, 2), Rational(5, 8), Rational(3, 4), Rational(7, 8), Rational(1)}) {
    StrategySpec s = spec_of(StrategySpec::Kind::quadrant_composition);
    s.epsilon = eps;
    TraceOptions opt;
    opt.horizon = hc;
    opt.checkpoints = {hc};
    const auto trace = run_trace(s, GrowthSpec::symmetric_box(2, Schedule::linear(Rational(1))), opt);
    const double got = trace.records.back().density;
    out.push_back({"densities.quadrant_composition", {{"epsilon", eps.str()}, {"n", hc}, {"tolerance", 0.03}},
                   std::abs(got - eps.to_double()) <= 0.03, {{"density", got}}});
  }
  return out;
}

std::vector<CheckReport> suite_oscillation(Scale scale) {
  const int k_hi = scale == Scale::full ? 10 : 9;
  std::vector<CheckReport> out;
  for (const auto& row : oscillation_probe(8, k_hi)) {
    const Count side = (Count{1} << row.k) + 1;
    // density_before >= 1 - 4/side^2  <=>  unburned <= 4.
    const bool corners = row.cells_before == side * side && row.cells_before - row.burned_before <= 4;
    out.push_back({"oscillation.step_log2", {{"k", row.k}}, row.gap >= 0.3 && corners,
                   {{"density_before", row.density_before},
                    {"density_at", row.density_at},
                    {"gap", row.gap},
                    {"unburned_before", row.cells_before - row.burned_before}}});
  }
  return out;
}

std::vector<CheckReport> suite_sampler(Scale scale) {
  const Count per_point = scale == Scale::full ? 1000 : 200;
  std::vector<CheckReport> out;
  for (const auto& [d, r] : std::vector<std::pair<int, Count>>{{2, 3}, {3, 4}}) {
    const Count support = sphere_cardinality(d, r);
    std::map<Point, Count> hist;
    Rng rng(12345);
    for (Count i = 0; i < per_point * support; ++i) ++hist[sample_sphere_uniform(d, r, rng)];
    std::vector<Count> counts;
    bool on_sphere = true;
    for (const auto& [p, cnt] : hist) {
      on_sphere = on_sphere && l1_norm(p) == r;
      counts.push_back(cnt);
    }
    counts.resize(static_cast<std::size_t>(support), 0);
    const auto chi = chi_square_uniform(counts);
    out.push_back({"sampler.uniformity", {{"d", d}, {"r", r}, {"draws", per_point * support}, {"alpha", 1e-3}},
                   on_sphere && static_cast<Count>(hist.size()) == support && chi.p_value >= 1e-3,
                   {{"support_seen", hist.size()}, {"chi2", chi.statistic}, {"dof", chi.dof}, {"p_value", chi.p_value}}});
  }
  Rng a(99), b(99);
  bool same = true;
  for (int i = 0; i < 1000; ++i) same = same && sample_sphere_uniform(3, 7, a) == sample_sphere_uniform(3, 7, b);
  out.push_back({"sampler.reproducible", {{"seed", 99}, {"draws", 1000}}, same, json::object()});
  return out;
}

const std::map<std::string, std::function<std::vector<CheckReport>(Scale)>>& registry() {
  static const std::map<std::string, std::function<std::vector<CheckReport>(Scale)>> suites = {
      {"engines", suite_engines},     {"lemma21", suite_lemma21},     {"lemma41", suite_lemma41},
      {"lemma42", suite_lemma42},     {"thm41", suite_thm41},         {"densities", suite_densities},
      {"oscillation", suite_oscillation}, {"sampler", suite_sampler},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

std::vector<CheckReport> run_suite(const std::string& suite, Scale scale) {
  const auto it = registry().find(suite);
  if (it == registry().end()) throw ConfigError("unknown suite '" + suite + "'");
  return it->second(scale);
}

}  // namespace burn
