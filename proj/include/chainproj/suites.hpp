#pragma once

#include <chainproj/rational.hpp>

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace chainproj {

struct CheckResult {
  std::string check;
  nlohmann::json inputs = nlohmann::json::object();
  std::string value;  // exact rational "p/q"
  bool pass = false;
};

struct RunReport {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  std::vector<CheckResult> checks;
  nlohmann::json details;  // emitted when not null
  std::int64_t wall_time_us = 0;

  bool pass() const;
  void add(std::string check, nlohmann::json inputs, const Rational& value, bool pass);
  nlohmann::json to_json() const;
};

struct SuiteParams {
  int max_leg = 20;
  std::uint64_t seed = 1;
  int trials = 1000;
};

const std::vector<std::string>& suite_names();

/// Throws UnknownSuite.
RunReport run_suite(const std::string& name, const SuiteParams& params);

}  // namespace chainproj
