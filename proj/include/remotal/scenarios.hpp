#pragma once

// Built-in golden scenarios: each runs one worked example or implication
// battery end to end with pinned expectations and writes its CSV/JSON
// artifacts into an output directory. Runs are deterministic for a fixed
// seed.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "remotal/windows.hpp"

namespace remotal {

struct ScenarioContext {
  std::filesystem::path out_dir;
  std::uint64_t seed = 1;
  TraceParams trace;
};

struct ScenarioInfo {
  std::string name;
  std::string description;
};

struct ScenarioResult {
  std::string name;
  bool ok = false;
  std::string message;       // one-line human summary
  std::string report_path;   // JSON artifact written for the run
};

// Stable-ordered registry of all built-in scenarios.
std::vector<ScenarioInfo> list_scenarios();

bool is_scenario(const std::string& name);

// Runs one scenario by name; throws invalid-input for unknown names.
ScenarioResult run_scenario(const std::string& name, const ScenarioContext& ctx);

}  // namespace remotal
