#pragma once

// Small JSON/report helpers shared by the scenario registry and the config
// runner: object builders for result types and deterministic file output.

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "remotal/batteries.hpp"
#include "remotal/geometry.hpp"
#include "remotal/windows.hpp"

namespace remotal {

nlohmann::json verdict_json(const Verdict& verdict);
nlohmann::json point_json(const Point& p);
nlohmann::json farthest_json(const FarthestResult& result);
nlohmann::json battery_json(const BatteryOutcome& outcome);

// Filesystem-safe artifact stem: everything outside [A-Za-z0-9_-] becomes '_'.
std::string sanitize_name(const std::string& name);

// Writes content byte-for-byte; parent directories must already exist.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace remotal
