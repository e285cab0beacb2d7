#pragma once

// Named verification suites behind `burn verify`.

#include <string>
#include <vector>

#include <json.hpp>

namespace burn {

enum class Scale { quick, full };

struct CheckReport {
  std::string id;
  nlohmann::json parameters;
  bool pass = false;
  nlohmann::json witness;

  nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_names();

/// Throws ConfigError for an unknown suite.
std::vector<CheckReport> run_suite(const std::string& suite, Scale scale);

}  // namespace burn
