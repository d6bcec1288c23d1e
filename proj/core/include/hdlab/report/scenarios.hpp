#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hdlab/report/config.hpp"
#include "hdlab/report/report.hpp"

namespace hdlab::report {

struct ScenarioInfo {
  std::string name;
  std::string summary;
  nlohmann::json defaults;
};

const std::vector<ScenarioInfo>& registered_scenarios();
const ScenarioInfo& scenario_info(const std::string& name);

/// Defaults of the named scenario overlaid with cfg (cfg wins).
nlohmann::json resolve_config(const nlohmann::json& cfg);

/// Schema and range checks without computation.  strict requires "scenario"
/// and "p" in cfg itself; otherwise defaults fill gaps.
std::vector<ConfigError> validate(const nlohmann::json& cfg, bool strict = true);

/// Resolves, validates (throwing InvalidArgument listing every error) and runs.
/// Failures inside the computation are recorded as a failed "completed"
/// assertion instead of propagating.
RunReport run(const nlohmann::json& cfg);

}  // namespace hdlab::report
