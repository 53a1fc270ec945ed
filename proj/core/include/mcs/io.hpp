#pragma once

// JSON forms of scenario configs, problem instances and solution reports.
// Subarea indices are 1-based in every file and 0-based in memory.

#include <string>

#include <nlohmann/json.hpp>

#include "mcs/channel.hpp"
#include "mcs/model.hpp"

namespace mcs::io {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flat object whose keys are ScenarioConfig field names. Missing keys keep
/// their defaults; unknown keys are an error.
ScenarioConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ScenarioConfig& config);

ProblemInstance instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const ProblemInstance& instance);

nlohmann::json report_to_json(const SolutionReport& report, const ProblemInstance& instance);

nlohmann::json read_json_file(const std::string& path);
ScenarioConfig load_config(const std::string& path);
ProblemInstance load_instance(const std::string& path);

}  // namespace mcs::io
