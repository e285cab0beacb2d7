#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    auto p = fs::temp_directory_path() / ("burn_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Result run(const std::string& args, const std::string& env = "") {
  const auto out = scratch() / "stdout.txt", err = scratch() / "stderr.txt";
  const std::string cmd = env + "\"" + BURN_CLI_PATH + "\" " + args + " >\"" + out.string() + "\" 2>\"" +
                          err.string() + "\"";
  const int status = std::system(cmd.c_str());
  Result r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

fs::path write_config(const std::string& name, const json& j) {
  const auto p = scratch() / name;
  std::ofstream(p) << j.dump();
  return p;
}

}  // namespace

TEST_CASE("geom queries") {
  auto r = run("geom ball 2 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("13") != std::string::npos);
  r = run("geom sphere 3 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("18") != std::string::npos);
  r = run("geom roundstar 2.5 0.5");
  CHECK(r.code == 0);
  CHECK(r.out.find("[2,0]") != std::string::npos);
  const auto a = run("geom sample 3 4 5 17"), b = run("geom sample 3 4 5 17");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  r = run("geom ball two 2");
  CHECK(r.code == 1);
}

TEST_CASE("simulate writes a trace and sidecar") {
  const auto csv = scratch() / "skinny.csv";
  const auto cfg = write_config("cfg_skinny.json", {{"strategy", {{"kind", "skinny_triangle"}, {"rho", 0.5}}},
                                                    {"growth", {{"dimension", 2}, {"schedule", {{"kind", "linear"}}}, {"lower", "zero"}}},
                                                    {"horizon", 4000},
                                                    {"stride", 100}});
  const auto r = run("simulate --config \"" + cfg.string() + "\" --out \"" + csv.string() + "\"");
  REQUIRE(r.code == 0);
  const auto text = slurp(csv);
  CHECK(std::count(text.begin(), text.end(), '\n') == 42);
  const auto last = text.substr(text.rfind('\n', text.size() - 2) + 1);
  CHECK(std::abs(std::stod(last.substr(last.rfind(',') + 1)) - 0.75) <= 0.02);
  const auto side = json::parse(slurp(scratch() / "skinny.json"));
  CHECK(side.at("strategy").at("kind") == "skinny_triangle");
  CHECK(side.contains("tool_version"));

  // Same config, same bytes.
  const auto csv2 = scratch() / "skinny2.csv";
  REQUIRE(run("simulate --config \"" + cfg.string() + "\" --out \"" + csv2.string() + "\"").code == 0);
  CHECK(slurp(csv2) == text);
}

TEST_CASE("simulate spiral stays positive") {
  const auto csv = scratch() / "spiral.csv";
  const auto cfg = write_config("cfg_spiral.json", {{"strategy", {{"kind", "polar_spiral"}, {"c", 1}}},
                                                    {"growth", {{"dimension", 2}, {"schedule", {{"kind", "power"}, {"p", "3/2"}}}}},
                                                    {"horizon", 400},
                                                    {"stride", 10}});
  REQUIRE(run("simulate --config \"" + cfg.string() + "\" --out \"" + csv.string() + "\"").code == 0);
  std::istringstream in(slurp(csv));
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    const auto n = std::stoll(line.substr(0, line.find(',')));
    if (n >= 50) CHECK(std::stod(line.substr(line.rfind(',') + 1)) > 0.0);
  }
}

TEST_CASE("exit codes") {
  const auto epoch = write_config("cfg_epoch.json", {{"strategy", {{"kind", "epoch_random"}, {"n1", 36}}},
                                                     {"growth", {{"dimension", 2}, {"schedule", {{"kind", "power"}, {"p", "3/2"}}}}},
                                                     {"horizon", 50}});
  auto r = run("simulate --config \"" + epoch.string() + "\" --out \"" + (scratch() / "e.csv").string() + "\"");
  CHECK(r.code == 1);
  const auto err = json::parse(r.err.substr(0, r.err.find('\n')));
  CHECK(err.at("exit_code") == 1);
  CHECK(err.contains("message"));
  r = run("simulate --config \"" + epoch.string() + "\" --seed 3 --out \"" + (scratch() / "e.csv").string() + "\"");
  CHECK(r.code == 0);

  // Balls engine forced onto stalling growth is a config error.
  const auto stall = write_config("cfg_stall.json", {{"strategy", "origin_only"},
                                                     {"growth", {{"dimension", 2}, {"schedule", "step_log2"}}},
                                                     {"horizon", 20}});
  r = run("simulate --config \"" + stall.string() + "\" --engine balls --out \"" + (scratch() / "s.csv").string() + "\"");
  CHECK(r.code == 1);

  // The spiral outruns linear grids, so its activators leave the grid.
  const auto off = write_config("cfg_off.json", {{"strategy", {{"kind", "polar_spiral"}, {"c", 1}}},
                                                 {"growth", {{"dimension", 2}, {"schedule", {{"kind", "linear"}}}}},
                                                 {"horizon", 50}});
  r = run("simulate --config \"" + off.string() + "\" --out \"" + (scratch() / "o.csv").string() + "\"");
  CHECK(r.code == 2);
  CHECK(r.err.find("outside_grid") != std::string::npos);

  r = run("simulate --config \"" + stall.string() + "\" --engine frontier --horizon 400 --out \"" +
          (scratch() / "b.csv").string() + "\"");
  CHECK(r.code == 0);
  r = run("simulate --config \"" + stall.string() + "\" --engine frontier --horizon 400 --out \"" +
          (scratch() / "b.csv").string() + "\"", "BURN_BUDGET_CELLS=1000 ");
  CHECK(r.code == 3);
  r = run("simulate --config \"" + (scratch() / "missing.json").string() + "\"");
  CHECK(r.code == 1);
  r = run("verify --suite nonsense --scale quick");
  CHECK(r.code == 1);
}

TEST_CASE("verify engines quick") {
  const auto r = run("verify --suite engines --scale quick");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out).at("pass") == true);
}
