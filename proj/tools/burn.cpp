// burn: simulate, verify and geometry queries.
//
// Exit codes: 0 ok, 1 config error, 2 invalid or off-grid activation,
// 3 engine budget exceeded, 4 verification checks failed.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "burn/config.hpp"
#include "burn/error.hpp"
#include "burn/lattice.hpp"
#include "burn/trace.hpp"
#include "burn/verify.hpp"

namespace {

using nlohmann::json;

int report_error(const std::string& kind, const std::string& message, int code) {
  std::cerr << json{{"error", kind}, {"message", message}, {"exit_code", code}}.dump() << '\n';
  return code;
}

struct SimulateArgs {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> engine;
  std::optional<std::string> out;
  std::optional<std::int64_t> horizon;
  std::optional<std::int64_t> stride;
  std::optional<burn::Count> samples;
};

int simulate(const SimulateArgs& args) {
  std::ifstream in(args.config);
  if (!in) throw burn::ConfigError("cannot open config '" + args.config + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw burn::ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  // Flags win over the file.
  if (args.seed) j["seed"] = *args.seed;
  if (args.engine) j["engine"] = *args.engine;
  if (args.out) j["out"] = *args.out;
  if (args.horizon) j["horizon"] = *args.horizon;
  if (args.stride) {
    j["stride"] = *args.stride;
    j.erase("checkpoints");
  }
  if (args.samples) j["samples"] = *args.samples;
  burn::RunConfig config = burn::parse_run_config(j);
  if (args.seed) config.strategy.seed = args.seed;

  const burn::BurnTrace trace = burn::run_trace(config.strategy, config.growth, config.trace_options());

  std::ofstream csv(config.out, std::ios::binary);
  if (!csv) throw burn::ConfigError("cannot write '" + config.out + "'");
  burn::write_csv(trace, csv);
  const std::string sidecar = burn::sidecar_path(config.out);
  std::ofstream meta(sidecar, std::ios::binary);
  if (!meta) throw burn::ConfigError("cannot write '" + sidecar + "'");
  meta << burn::sidecar_json(trace, config).dump(2) << '\n';

  const auto& last = trace.records.back();
  std::cout << json{{"csv", config.out},
                    {"sidecar", sidecar},
                    {"rows", trace.records.size()},
                    {"engine", burn::engine_name(trace.engine)},
                    {"final_n", last.n},
                    {"final_density", last.density}}
                   .dump()
            << '\n';
  return 0;
}

int verify(const std::string& suite, const std::string& scale_name) {
  const burn::Scale scale = scale_name == "full" ? burn::Scale::full : burn::Scale::quick;
  const auto checks = burn::run_suite(suite, scale);
  bool pass = true;
  json list = json::array();
  for (const auto& c : checks) {
    pass = pass && c.pass;
    list.push_back(c.to_json());
  }
  std::cout << json{{"suite", suite}, {"scale", scale_name}, {"pass", pass}, {"checks", list}}.dump(2) << '\n';
  return pass ? 0 : 4;
}

std::vector<std::int64_t> coords(const burn::Point& p) { return p.coords; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Burning process on growing lattice grids"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "Run a strategy and write a CSV trace with a JSON sidecar");
  simulate_cmd->add_option("--config", sim.config, "JSON run configuration")->required();
  simulate_cmd->add_option("--seed", sim.seed, "Seed (overrides the config)");
  simulate_cmd->add_option("--engine", sim.engine, "auto|balls|frontier|mc");
  simulate_cmd->add_option("--out", sim.out, "CSV output path; the sidecar goes next to it");
  simulate_cmd->add_option("--horizon", sim.horizon, "Last simulated time");
  simulate_cmd->add_option("--stride", sim.stride, "Checkpoint stride");
  simulate_cmd->add_option("--samples", sim.samples, "Monte Carlo samples per checkpoint");

  std::string suite, scale = "quick";
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(burn::suite_names()));
  verify_cmd->add_option("--scale", scale, "quick|full")->check(CLI::IsMember({"quick", "full"}));

  auto* geom_cmd = app.add_subcommand("geom", "Exact lattice geometry queries");
  geom_cmd->require_subcommand(1);
  int gd = 0;
  burn::Count gr = 0, gcount = 0;
  std::uint64_t gseed = 0;
  double gx = 0, gy = 0;
  auto* ball_cmd = geom_cmd->add_subcommand("ball", "|B_1(0, r)| in Z^d");
  ball_cmd->add_option("d", gd)->required();
  ball_cmd->add_option("r", gr)->required();
  auto* sphere_cmd = geom_cmd->add_subcommand("sphere", "|S_1(0, r)| in Z^d");
  sphere_cmd->add_option("d", gd)->required();
  sphere_cmd->add_option("r", gr)->required();
  auto* sample_cmd = geom_cmd->add_subcommand("sample", "Uniform points of S_1(0, r)");
  sample_cmd->add_option("d", gd)->required();
  sample_cmd->add_option("r", gr)->required();
  sample_cmd->add_option("count", gcount)->required();
  sample_cmd->add_option("seed", gseed)->required();
  auto* round_cmd = geom_cmd->add_subcommand("roundstar", "Nearest lattice point of no larger L1 norm");
  round_cmd->add_option("x", gx)->required();
  round_cmd->add_option("y", gy)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("usage", e.what(), 1);
  }

  try {
    if (*simulate_cmd) return simulate(sim);
    if (*verify_cmd) return verify(suite, scale);
    if (*ball_cmd) {
      std::cout << json{{"query", "ball"}, {"d", gd}, {"r", gr}, {"count", burn::ball_cardinality(gd, gr)}}.dump() << '\n';
    } else if (*sphere_cmd) {
      std::cout << json{{"query", "sphere"}, {"d", gd}, {"r", gr}, {"count", burn::sphere_cardinality(gd, gr)}}.dump()
                << '\n';
    } else if (*sample_cmd) {
      if (gcount < 0) throw burn::ConfigError("count must be >= 0");
      burn::Rng rng(gseed);
      for (burn::Count i = 0; i < gcount; ++i)
        std::cout << json{{"point", coords(burn::sample_sphere_uniform(gd, gr, rng))}}.dump() << '\n';
    } else if (*round_cmd) {
      if (!std::isfinite(gx) || !std::isfinite(gy)) throw burn::ConfigError("roundstar needs finite coordinates");
      const auto q = burn::round_toward_origin(burn::RealPoint{gx, gy});
      std::cout << json{{"query", "roundstar"}, {"x", gx}, {"y", gy}, {"point", coords(q)}}.dump() << '\n';
    }
    return 0;
  } catch (const burn::InvalidActivation& e) {
    return report_error(e.kind(), e.what(), 2);
  } catch (const burn::OutsideGrid& e) {
    return report_error(e.kind(), e.what(), 2);
  } catch (const burn::BudgetExceeded& e) {
    return report_error(e.kind(), e.what(), 3);
  } catch (const burn::Error& e) {
    return report_error(e.kind(), e.what(), 1);
  } catch (const std::exception& e) {
    return report_error("internal", e.what(), 1);
  }
}
