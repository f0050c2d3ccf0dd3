#include "remotal/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

#include "remotal/compactness.hpp"
#include "remotal/errors.hpp"
#include "remotal/json_report.hpp"
#include "remotal/report.hpp"
#include "remotal/scenarios.hpp"

namespace remotal {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ConfigError(path + ": " + message);
}

// Re-labels library validation errors with the config key path.
template <typename Fn>
auto guarded(const std::string& path, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

const json& require_field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "missing required field");
  return *it;
}

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

double number_field(const json& j, const char* key, const std::string& path) {
  return as_number(require_field(j, key, path), path + "." + key);
}

double number_or(const json& j, const char* key, double fallback, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  return as_number(*it, path + "." + key);
}

Index as_index(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  auto v = j.get<std::int64_t>();
  if (v < 1) fail(path, "expected a positive integer");
  return v;
}

Index index_field(const json& j, const char* key, const std::string& path) {
  return as_index(require_field(j, key, path), path + "." + key);
}

std::string string_field(const json& j, const char* key, const std::string& path) {
  const json& v = require_field(j, key, path);
  if (!v.is_string()) fail(path + "." + key, "expected a string");
  return v.get<std::string>();
}

std::vector<double> number_array(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_number(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

VerdictParams verdict_params_from(const json& run, const std::string& path) {
  VerdictParams params;
  params.tolerance = number_or(run, "tolerance", params.tolerance, path);
  if (!(params.tolerance > 0.0)) fail(path + ".tolerance", "must be > 0");
  if (run.contains("trend_window")) {
    params.trend_window = as_index(run["trend_window"], path + ".trend_window");
  }
  return params;
}

Convergence expected_outcome(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a verdict string");
  std::string s = j.get<std::string>();
  if (s == "ConvergesToZero") return Convergence::kConvergesToZero;
  if (s == "DoesNotConverge") return Convergence::kDoesNotConverge;
  if (s == "Inconclusive") return Convergence::kInconclusive;
  fail(path, "unknown verdict \"" + s +
                 "\" (expected ConvergesToZero, DoesNotConverge or Inconclusive)");
}

}  // namespace

WindowPair window_from_json(const json& j, const std::string& path) {
  std::string family = string_field(j, "family", path);
  if (family == "classical") return classical_window();
  if (family == "poly_window") {
    double a = number_field(j, "a", path);
    double b_exp = number_field(j, "b_exp", path);
    return guarded(path, [&] { return poly_window(a, b_exp); });
  }
  if (family == "power_block") {
    double q = number_or(j, "q", 3.0, path);
    double r = number_or(j, "r", 2.0, path);
    return guarded(path, [&] { return power_block_window(q, r); });
  }
  fail(path + ".family", "unknown window family \"" + family +
                             "\" (expected classical, poly_window or power_block)");
}

IndexPredicate predicate_from_json(const json& j, const std::string& path) {
  std::string family = string_field(j, "family", path);
  if (family == "power_of_two") return power_of_two_predicate();
  if (family == "perfect_square") return perfect_square_predicate();
  if (family == "always_true") return always_true_predicate();
  if (family == "always_false") return always_false_predicate();
  fail(path + ".family", "unknown predicate family \"" + family +
                             "\" (expected power_of_two, perfect_square, always_true or "
                             "always_false)");
}

LabSequence sequence_from_json(const json& j, const std::string& path) {
  std::string family = string_field(j, "family", path);
  if (family == "constant") return constant_sequence(number_field(j, "value", path));
  if (family == "harmonic") return harmonic_sequence();
  if (family == "alternating") return alternating_sequence();
  if (family == "ramp") return ramp_sequence();
  if (family == "paper_sign_probe") {
    double c = number_field(j, "c", path);
    return guarded(path, [&] { return sign_probe_sequence(c); });
  }
  if (family == "blocked_divergent") return blocked_divergent_sequence();
  if (family == "mixed_maximizing") {
    double c = number_field(j, "c", path);
    return guarded(path, [&] { return mixed_maximizing_sequence(c); });
  }
  if (family == "square_flag") return square_flag_sequence();
  if (family == "table") {
    std::vector<double> values = number_array(require_field(j, "values", path), path + ".values");
    return table_sequence(std::move(values));
  }
  fail(path + ".family",
       "unknown sequence family \"" + family +
           "\" (expected constant, harmonic, alternating, ramp, paper_sign_probe, "
           "blocked_divergent, mixed_maximizing, square_flag or table)");
}

Point point_from_json(const json& j, const std::string& path) {
  std::vector<double> coords = number_array(j, path);
  Point p(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!std::isfinite(coords[i])) fail(path + "[" + std::to_string(i) + "]", "must be finite");
    p[static_cast<Eigen::Index>(i)] = coords[i];
  }
  return p;
}

VectorSequence vector_sequence_from_json(const json& j, const std::string& path) {
  std::string family = string_field(j, "family", path);
  if (family == "constant_point") {
    Point value = point_from_json(require_field(j, "value", path), path + ".value");
    return {[value](Index) { return value; }, "constant_point"};
  }
  if (family == "decay_to") {
    Point target = point_from_json(require_field(j, "target", path), path + ".target");
    Point direction = point_from_json(require_field(j, "direction", path), path + ".direction");
    if (target.size() != direction.size()) {
      fail(path + ".direction", "dimension differs from target");
    }
    return {[target, direction](Index k) {
              return Point(target + std::pow(2.0, -static_cast<double>(k)) * direction);
            },
            "decay_to"};
  }
  if (family == "scalar_1d") {
    LabSequence inner = sequence_from_json(require_field(j, "sequence", path), path + ".sequence");
    return embed_1d(std::move(inner));
  }
  fail(path + ".family", "unknown probe family \"" + family +
                             "\" (expected constant_point, decay_to or scalar_1d)");
}

BoundedSet set_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object with a \"cloud\" or \"box\" key");
  bool has_cloud = j.contains("cloud");
  bool has_box = j.contains("box");
  if (has_cloud == has_box) fail(path, "expected exactly one of \"cloud\" or \"box\"");
  if (has_cloud) {
    const json& cloud = j["cloud"];
    if (!cloud.is_array() || cloud.empty()) {
      fail(path + ".cloud", "expected a non-empty array of points");
    }
    std::vector<Point> points;
    points.reserve(cloud.size());
    for (std::size_t i = 0; i < cloud.size(); ++i) {
      points.push_back(point_from_json(cloud[i], path + ".cloud[" + std::to_string(i) + "]"));
    }
    return guarded(path + ".cloud", [&] { return BoundedSet::cloud(std::move(points)); });
  }
  const json& box = j["box"];
  Point lo = point_from_json(require_field(box, "lo", path + ".box"), path + ".box.lo");
  Point hi = point_from_json(require_field(box, "hi", path + ".box"), path + ".box.hi");
  return guarded(path + ".box", [&] { return BoundedSet::box(std::move(lo), std::move(hi)); });
}

GaugeFunction gauge_from_json(const json& j, const std::string& path) {
  std::string kind = string_field(j, "gauge", path);
  if (kind == "power") {
    double p = number_field(j, "p", path);
    return guarded(path, [&] { return power_gauge(p); });
  }
  fail(path + ".gauge", "unknown gauge \"" + kind + "\" (expected power)");
}

NormedSpace space_from_json(const json& run, int dim, const std::string& path) {
  if (!run.is_object()) fail(path, "expected an object");
  auto it = run.find("p");
  if (it == run.end()) return {dim, 2.0};
  if (it->is_string()) {
    if (it->get<std::string>() == "inf") return {dim, std::numeric_limits<double>::infinity()};
    fail(path + ".p", "expected a number >= 1 or \"inf\"");
  }
  double p = as_number(*it, path + ".p");
  if (!(p >= 1.0)) fail(path + ".p", "norm exponent must be >= 1");
  return {dim, p};
}

ParsedConfig parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string() + ": cannot open file");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  if (!doc.is_object()) throw ConfigError(path.string() + ": top level must be an object");

  ParsedConfig config;
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer()) {
      throw ConfigError(path.string() + ".seed: expected a non-negative integer");
    }
    auto s = doc["seed"].get<std::int64_t>();
    if (s < 0) throw ConfigError(path.string() + ".seed: expected a non-negative integer");
    config.seed = static_cast<std::uint64_t>(s);
  }
  if (doc.contains("cap")) {
    config.cap = as_index(doc["cap"], path.string() + ".cap");
  }
  const json& runs = require_field(doc, "runs", path.string());
  if (!runs.is_array()) throw ConfigError(path.string() + ".runs: expected an array");

  std::set<std::string> names;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    std::string run_path = path.string() + ".runs[" + std::to_string(i) + "]";
    const json& run = runs[i];
    std::string name = string_field(run, "name", run_path);
    string_field(run, "kind", run_path);
    if (!names.insert(name).second) {
      throw ConfigError(run_path + ".name: duplicate run name \"" + name + "\"");
    }
    config.runs.push_back(run);
  }
  return config;
}

namespace {

// Parsing and execution share one dispatcher; with a null context the run is
// only validated (all referenced families constructed, no IO).
RunResult process_run(const json& run, const RunContext* ctx, const std::string& path) {
  std::string name = string_field(run, "name", path);
  std::string kind = string_field(run, "kind", path);
  std::string stem = sanitize_name(name);
  RunResult result;
  result.name = name;
  result.ok = true;

  auto write_report = [&](json report, bool ok, const std::string& message) {
    report["name"] = name;
    report["kind"] = kind;
    report["ok"] = ok;
    write_text_file(ctx->out_dir / (stem + ".json"), report.dump(2) + "\n");
    result.ok = ok;
    result.message = message;
  };

  if (kind == "scenario") {
    std::string scenario = string_field(run, "scenario", path);
    if (!is_scenario(scenario)) {
      fail(path + ".scenario", "unknown scenario \"" + scenario + "\"");
    }
    if (ctx) {
      ScenarioResult sres = run_scenario(scenario, {ctx->out_dir, ctx->seed, ctx->trace});
      result.ok = sres.ok;
      result.message = sres.message;
    }
    return result;
  }

  if (kind == "density_trace") {
    IndexPredicate pred = predicate_from_json(require_field(run, "predicate", path), path + ".predicate");
    WindowPair pair = window_from_json(require_field(run, "window", path), path + ".window");
    Index horizon = index_field(run, "horizon", path);
    VerdictParams vparams = verdict_params_from(run, path);
    std::optional<Convergence> expect;
    if (run.contains("expect")) {
      expect = expected_outcome(require_field(run["expect"], "verdict", path + ".expect"),
                                path + ".expect.verdict");
    }
    WindowValidation validation = guarded(path, [&] { return validate_window_pair(pair, horizon); });
    if (!validation.ok()) fail(path + ".window", "window pair invalid at horizon");
    if (ctx) {
      DensityTrace trace = density_trace(pred, pair, horizon, ctx->trace);
      Verdict verdict = verdict_converges_to_zero(trace, vparams);
      std::ostringstream csv;
      write_csv(trace, csv);
      std::string csv_name = stem + ".csv";
      write_text_file(ctx->out_dir / csv_name, csv.str());
      bool ok = !expect || verdict.outcome == *expect;
      write_report({{"verdict", verdict_json(verdict)}, {"trace_csv", csv_name}}, ok,
                   std::string("verdict ") + to_string(verdict.outcome));
    }
    return result;
  }

  if (kind == "convergence") {
    LabSequence seq = sequence_from_json(require_field(run, "sequence", path), path + ".sequence");
    double limit = number_field(run, "limit", path);
    double eps = number_field(run, "eps", path);
    if (!(eps > 0.0)) fail(path + ".eps", "must be > 0");
    WindowPair pair = window_from_json(require_field(run, "window", path), path + ".window");
    Index horizon = index_field(run, "horizon", path);
    VerdictParams vparams = verdict_params_from(run, path);
    std::optional<Convergence> expect;
    if (run.contains("expect")) {
      expect = expected_outcome(require_field(run["expect"], "verdict", path + ".expect"),
                                path + ".expect.verdict");
    }
    if (ctx) {
      ClassificationResult r = ab_stat_converges(seq, limit, eps, pair, horizon, vparams, ctx->trace);
      std::ostringstream csv;
      write_csv(r.trace, csv);
      std::string csv_name = stem + ".csv";
      write_text_file(ctx->out_dir / csv_name, csv.str());
      bool ok = !expect || r.verdict.outcome == *expect;
      write_report({{"limit", limit},
                    {"eps", eps},
                    {"verdict", verdict_json(r.verdict)},
                    {"trace_csv", csv_name}},
                   ok, std::string("verdict ") + to_string(r.verdict.outcome));
    }
    return result;
  }

  if (kind == "divergence") {
    LabSequence seq = sequence_from_json(require_field(run, "sequence", path), path + ".sequence");
    std::vector<double> bounds = number_array(require_field(run, "bounds", path), path + ".bounds");
    for (std::size_t i = 0; i < bounds.size(); ++i) {
      if (!(bounds[i] > 0.0)) fail(path + ".bounds[" + std::to_string(i) + "]", "must be > 0");
    }
    WindowPair pair = window_from_json(require_field(run, "window", path), path + ".window");
    Index horizon = index_field(run, "horizon", path);
    VerdictParams vparams = verdict_params_from(run, path);
    std::optional<bool> expect;
    if (run.contains("expect")) {
      const json& e = require_field(run["expect"], "diverges", path + ".expect");
      if (!e.is_boolean()) fail(path + ".expect.diverges", "expected a boolean");
      expect = e.get<bool>();
    }
    if (ctx) {
      DivergenceResult r = ab_stat_diverges_to_inf(seq, bounds, pair, horizon, vparams, ctx->trace);
      json per_bound = json::array();
      for (std::size_t i = 0; i < r.per_bound.size(); ++i) {
        std::ostringstream csv;
        write_csv(r.per_bound[i].trace, csv);
        std::string csv_name = stem + "_bound" + std::to_string(i) + ".csv";
        write_text_file(ctx->out_dir / csv_name, csv.str());
        per_bound.push_back({{"bound", r.per_bound[i].bound},
                             {"verdict", verdict_json(r.per_bound[i].verdict)},
                             {"trace_csv", csv_name}});
      }
      bool ok = !expect || r.diverges == *expect;
      write_report({{"per_bound", per_bound}, {"diverges", r.diverges}}, ok,
                   r.diverges ? "diverges on the bound grid" : "does not clear the bound grid");
    }
    return result;
  }

  if (kind == "compactness") {
    BoundedSet set = set_from_json(require_field(run, "set", path), path + ".set");
    Point x = point_from_json(require_field(run, "x", path), path + ".x");
    if (static_cast<int>(x.size()) != set.dim()) fail(path + ".x", "dimension differs from set");
    NormedSpace space = space_from_json(run, set.dim(), path);
    LabSequence t_seq =
        sequence_from_json(require_field(run, "t_sequence", path), path + ".t_sequence");
    WindowPair pair = window_from_json(require_field(run, "window", path), path + ".window");
    Index horizon = index_field(run, "horizon", path);
    CompactParams params;
    params.eps = number_or(run, "eps", params.eps, path);
    if (!(params.eps > 0.0)) fail(path + ".eps", "must be > 0");
    params.verdict = verdict_params_from(run, path);
    std::optional<bool> expect;
    if (run.contains("expect")) {
      const json& e = require_field(run["expect"], "positive", path + ".expect");
      if (!e.is_boolean()) fail(path + ".expect.positive", "expected a boolean");
      expect = e.get<bool>();
    }
    if (ctx) {
      params.trace = ctx->trace;
      CompactnessVerdict v =
          guarded(path, [&] { return x_ab_compact_verdict(x, set, space, t_seq, pair, horizon, params); });
      std::ostringstream slab_csv;
      write_csv(v.slabs, slab_csv);
      std::string slab_name = stem + "_slab.csv";
      write_text_file(ctx->out_dir / slab_name, slab_csv.str());
      bool ok = !expect || v.positive == *expect;
      write_report({{"t_verdict", verdict_json(v.t_part->verdict)},
                    {"diam_verdict", verdict_json(v.diam_part.verdict)},
                    {"positive", v.positive},
                    {"witness_vanishes", v.witness_vanishes},
                    {"slab_csv", slab_name}},
                   ok, v.positive ? "windowed verdict positive" : "windowed verdict negative");
    }
    return result;
  }

  if (kind == "farthest") {
    BoundedSet set = set_from_json(require_field(run, "set", path), path + ".set");
    Point x = point_from_json(require_field(run, "x", path), path + ".x");
    if (static_cast<int>(x.size()) != set.dim()) fail(path + ".x", "dimension differs from set");
    NormedSpace space = space_from_json(run, set.dim(), path);
    std::optional<double> expect_distance;
    std::optional<bool> expect_unique;
    if (run.contains("expect")) {
      const json& e = run["expect"];
      if (e.contains("distance")) expect_distance = as_number(e["distance"], path + ".expect.distance");
      if (e.contains("unique")) {
        if (!e["unique"].is_boolean()) fail(path + ".expect.unique", "expected a boolean");
        expect_unique = e["unique"].get<bool>();
      }
    }
    if (ctx) {
      FarthestResult r = guarded(path, [&] { return farthest_points(x, set, space, {}); });
      bool ok = true;
      if (expect_distance) {
        ok = ok && std::abs(r.distance - *expect_distance) <= 1e-12 * (1.0 + std::abs(*expect_distance));
      }
      if (expect_unique) ok = ok && r.unique == *expect_unique;
      write_report({{"farthest", farthest_json(r)}}, ok,
                   "distance " + format_double(r.distance));
    }
    return result;
  }

  if (kind == "chebyshev") {
    BoundedSet set = set_from_json(require_field(run, "set", path), path + ".set");
    NormedSpace space = space_from_json(run, set.dim(), path);
    int grid = static_cast<int>(number_or(run, "grid_resolution", 21, path));
    int iters = static_cast<int>(number_or(run, "refine_iters", 40, path));
    if (grid < 2) fail(path + ".grid_resolution", "must be >= 2");
    if (iters < 0) fail(path + ".refine_iters", "must be >= 0");
    std::optional<Point> expect_center;
    std::optional<double> expect_radius;
    double tol = 1e-6;
    if (run.contains("expect")) {
      const json& e = run["expect"];
      if (e.contains("center")) expect_center = point_from_json(e["center"], path + ".expect.center");
      if (e.contains("radius")) expect_radius = as_number(e["radius"], path + ".expect.radius");
      tol = number_or(e, "tol", tol, path + ".expect");
    }
    if (ctx) {
      ChebyshevResult r = guarded(path, [&] { return chebyshev_center(set, space, grid, iters); });
      bool ok = true;
      if (expect_center) {
        ok = ok && expect_center->size() == r.center.size() &&
             (r.center - *expect_center).cwiseAbs().maxCoeff() <= tol;
      }
      if (expect_radius) ok = ok && std::abs(r.radius - *expect_radius) <= tol;
      write_report({{"center", point_json(r.center)}, {"radius", r.radius}}, ok,
                   "radius " + format_double(r.radius));
    }
    return result;
  }

  if (kind == "remotality") {
    std::string mode = string_field(run, "mode", path);
    if (mode != "div" && mode != "ratio") {
      fail(path + ".mode", "expected \"div\" or \"ratio\"");
    }
    GaugeFunction gauge = gauge_from_json(require_field(run, "gauge", path), path + ".gauge");
    BoundedSet set = set_from_json(require_field(run, "set", path), path + ".set");
    Point x = point_from_json(require_field(run, "x", path), path + ".x");
    Point y = point_from_json(require_field(run, "y", path), path + ".y");
    VectorSequence probe =
        vector_sequence_from_json(require_field(run, "probe", path), path + ".probe");
    if (static_cast<int>(x.size()) != set.dim()) fail(path + ".x", "dimension differs from set");
    if (static_cast<int>(y.size()) != set.dim()) fail(path + ".y", "dimension differs from set");
    NormedSpace space = space_from_json(run, set.dim(), path);
    WindowPair pair = window_from_json(require_field(run, "window", path), path + ".window");
    Index horizon = index_field(run, "horizon", path);

    VerdictParams vparams = verdict_params_from(run, path);
    std::vector<double> bounds;
    double eps = 0.0;
    if (mode == "div") {
      bounds = number_array(require_field(run, "bounds", path), path + ".bounds");
      for (std::size_t i = 0; i < bounds.size(); ++i) {
        if (!(bounds[i] > 0.0)) fail(path + ".bounds[" + std::to_string(i) + "]", "must be > 0");
      }
    } else {
      eps = number_field(run, "eps", path);
      if (!(eps > 0.0)) fail(path + ".eps", "must be > 0");
    }

    std::optional<bool> expect_hyp, expect_conc;
    if (run.contains("expect")) {
      const json& e = run["expect"];
      if (e.contains("hypothesis_positive")) {
        if (!e["hypothesis_positive"].is_boolean()) {
          fail(path + ".expect.hypothesis_positive", "expected a boolean");
        }
        expect_hyp = e["hypothesis_positive"].get<bool>();
      }
      if (e.contains("conclusion_holds")) {
        if (!e["conclusion_holds"].is_boolean()) {
          fail(path + ".expect.conclusion_holds", "expected a boolean");
        }
        expect_conc = e["conclusion_holds"].get<bool>();
      }
    }

    if (ctx) {
      RemotalityParams params;
      params.trace = ctx->trace;
      params.verdict = vparams;
      json report;
      bool hyp = false, conc = false, precond = false;
      if (mode == "div") {
        RemotalityDivReport r = guarded(path, [&] {
          return remotality_hypothesis_div(gauge, probe, x, y, set, space, pair, bounds, horizon,
                                           params);
        });
        hyp = r.hypothesis_positive;
        conc = r.conclusion_holds;
        precond = r.precondition_ok;
        json per_z = json::array();
        for (const auto& entry : r.per_z) {
          per_z.push_back({{"z", point_json(entry.z)},
                           {"skipped", entry.skipped},
                           {"margin", entry.skipped ? json(nullptr) : json(entry.margin)},
                           {"diverges", entry.skipped ? json(nullptr) : json(entry.divergence.diverges)}});
        }
        report = {{"mode", "div"},          {"precondition_ok", precond},
                  {"delta", r.delta},       {"dist_xy", r.dist_xy},
                  {"min_margin", r.min_margin}, {"per_z", per_z}};
      } else {
        RemotalityRatioReport r = guarded(path, [&] {
          return remotality_hypothesis_ratio(gauge, probe, x, y, set, space, pair, eps, horizon,
                                             params);
        });
        hyp = r.hypothesis_positive;
        conc = r.conclusion_holds;
        precond = r.precondition_ok;
        json per_z = json::array();
        for (const auto& entry : r.per_z) {
          per_z.push_back({{"z", point_json(entry.z)},
                           {"skipped", entry.skipped},
                           {"verdict", entry.skipped ? json(nullptr)
                                                     : json(to_string(entry.verdict.outcome))},
                           {"guarded_indices", entry.guarded_indices}});
        }
        report = {{"mode", "ratio"},  {"precondition_ok", precond}, {"delta", r.delta},
                  {"dist_xy", r.dist_xy}, {"per_z", per_z}};
      }
      report["hypothesis_positive"] = hyp;
      report["conclusion_holds"] = conc;
      bool ok = (!expect_hyp || hyp == *expect_hyp) && (!expect_conc || conc == *expect_conc);
      write_report(std::move(report), ok,
                   std::string("hypothesis ") + (hyp ? "positive" : "negative") + ", conclusion " +
                       (conc ? "holds" : "violated"));
    }
    return result;
  }

  fail(path + ".kind",
       "unknown kind \"" + kind +
           "\" (expected scenario, density_trace, convergence, divergence, compactness, "
           "farthest, chebyshev or remotality)");
}

}  // namespace

void validate_run(const json& run, const std::string& path) { process_run(run, nullptr, path); }

RunResult execute_run(const json& run, const RunContext& ctx) {
  std::filesystem::create_directories(ctx.out_dir);
  return process_run(run, &ctx, "runs[" + string_field(run, "name", "run") + "]");
}

}  // namespace remotal
