#include "remotal/json_report.hpp"

#include <fstream>

#include "remotal/errors.hpp"

namespace remotal {

nlohmann::json verdict_json(const Verdict& verdict) {
  return {{"outcome", to_string(verdict.outcome)},
          {"final_density", verdict.final_density},
          {"max_tail_density", verdict.max_tail_density},
          {"min_tail_density", verdict.min_tail_density},
          {"horizon", verdict.horizon},
          {"trend_window", verdict.trend_window},
          {"tolerance", verdict.tolerance}};
}

nlohmann::json point_json(const Point& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) arr.push_back(p[i]);
  return arr;
}

nlohmann::json farthest_json(const FarthestResult& result) {
  nlohmann::json attainers = nlohmann::json::array();
  for (const Point& e : result.attainers) attainers.push_back(point_json(e));
  return {{"distance", result.distance}, {"attainers", attainers}, {"unique", result.unique}};
}

nlohmann::json battery_json(const BatteryOutcome& outcome) {
  return {{"name", outcome.name},
          {"instances", outcome.instances},
          {"passed", outcome.passed},
          {"reported", outcome.reported},
          {"failures", outcome.failures},
          {"flagged", outcome.flagged},
          {"ok", outcome.ok()}};
}

std::string sanitize_name(const std::string& name) {
  std::string out = name;
  for (char& c : out) {
    bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                c == '_' || c == '-';
    if (!keep) c = '_';
  }
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open for writing: " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error("write failed: " + path.string());
}

}  // namespace remotal
