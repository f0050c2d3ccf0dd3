#pragma once

// JSON config surface: family descriptions (windows, sequences, sets, gauges)
// and the batch runner. Every malformed or unknown field raises a config
// error carrying the failing key path.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "remotal/gauge.hpp"
#include "remotal/geometry.hpp"
#include "remotal/seqlab.hpp"
#include "remotal/windows.hpp"

namespace remotal {

WindowPair window_from_json(const nlohmann::json& j, const std::string& path);
IndexPredicate predicate_from_json(const nlohmann::json& j, const std::string& path);
LabSequence sequence_from_json(const nlohmann::json& j, const std::string& path);
VectorSequence vector_sequence_from_json(const nlohmann::json& j, const std::string& path);
BoundedSet set_from_json(const nlohmann::json& j, const std::string& path);
GaugeFunction gauge_from_json(const nlohmann::json& j, const std::string& path);
Point point_from_json(const nlohmann::json& j, const std::string& path);
// Reads the optional "p" field (number >= 1 or "inf", default 2) of a run.
NormedSpace space_from_json(const nlohmann::json& run, int dim, const std::string& path);

struct ParsedConfig {
  std::optional<std::uint64_t> seed;
  std::optional<Index> cap;
  std::vector<nlohmann::json> runs;
};

// Reads and structurally validates a config file (unique run names, required
// name/kind fields); per-run semantics are checked by validate_run.
ParsedConfig parse_config_file(const std::filesystem::path& path);

// Constructs everything a run references without executing or writing.
void validate_run(const nlohmann::json& run, const std::string& path);

struct RunContext {
  std::filesystem::path out_dir;
  std::uint64_t seed = 1;
  TraceParams trace;
};

struct RunResult {
  std::string name;
  bool ok = false;
  std::string message;
};

// Executes one run object, writing its artifacts under ctx.out_dir.
RunResult execute_run(const nlohmann::json& run, const RunContext& ctx);

}  // namespace remotal
