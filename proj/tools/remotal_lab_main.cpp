#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "remotal/config.hpp"
#include "remotal/errors.hpp"
#include "remotal/scenarios.hpp"

namespace {

// REMOTAL_LAB_CAP overrides the enumeration cap for every run.
std::optional<remotal::Index> cap_from_env() {
  const char* raw = std::getenv("REMOTAL_LAB_CAP");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  long long value = std::strtoll(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 1) {
    throw remotal::ConfigError("REMOTAL_LAB_CAP must be a positive integer, got \"" +
                               std::string(raw) + "\"");
  }
  return static_cast<remotal::Index>(value);
}

void print_result(const std::string& name, bool ok, const std::string& message) {
  std::cout << (ok ? "[ ok ] " : "[FAIL] ") << name;
  if (!message.empty()) std::cout << ": " << message;
  std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"windowed-density laboratory for farthest-point diagnostics"};
  app.require_subcommand(1);

  std::string target;
  std::string out_dir = "out";
  int jobs = 1;
  std::uint64_t seed = 1;

  CLI::App* run_cmd = app.add_subcommand("run", "run a built-in scenario or a JSON config");
  run_cmd->add_option("target", target, "scenario name or config file path")->required();
  run_cmd->add_option("--out", out_dir, "output directory (default: out)");
  run_cmd->add_option("--jobs", jobs, "number of runs executed in parallel")
      ->check(CLI::PositiveNumber);
  CLI::Option* seed_opt = run_cmd->add_option("--seed", seed, "seed for randomized batteries");

  CLI::App* list_cmd = app.add_subcommand("list", "list built-in scenarios");

  std::string config_path;
  CLI::App* validate_cmd = app.add_subcommand("validate-config", "validate a JSON config file");
  validate_cmd->add_option("path", config_path, "config file path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (list_cmd->parsed()) {
      for (const remotal::ScenarioInfo& info : remotal::list_scenarios()) {
        std::cout << info.name << "\n    " << info.description << '\n';
      }
      return 0;
    }

    if (validate_cmd->parsed()) {
      remotal::ParsedConfig config = remotal::parse_config_file(config_path);
      for (std::size_t i = 0; i < config.runs.size(); ++i) {
        remotal::validate_run(config.runs[i], config_path + ".runs[" + std::to_string(i) + "]");
      }
      std::cout << "ok: " << config.runs.size() << " run(s) validated\n";
      return 0;
    }

    // run
    std::optional<remotal::Index> env_cap = cap_from_env();
    remotal::TraceParams trace;

    if (remotal::is_scenario(target)) {
      if (env_cap) trace.enumeration_cap = *env_cap;
      remotal::ScenarioResult result = remotal::run_scenario(target, {out_dir, seed, trace});
      print_result(result.name, result.ok, result.message);
      return result.ok ? 0 : 1;
    }

    remotal::ParsedConfig config = remotal::parse_config_file(target);
    for (std::size_t i = 0; i < config.runs.size(); ++i) {
      remotal::validate_run(config.runs[i], target + ".runs[" + std::to_string(i) + "]");
    }

    remotal::RunContext ctx;
    ctx.out_dir = out_dir;
    ctx.seed = (seed_opt->count() > 0) ? seed : config.seed.value_or(seed);
    if (config.cap) ctx.trace.enumeration_cap = *config.cap;
    if (env_cap) ctx.trace.enumeration_cap = *env_cap;

    std::vector<remotal::RunResult> results(config.runs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= config.runs.size()) break;
        try {
          results[i] = remotal::execute_run(config.runs[i], ctx);
        } catch (const std::exception& e) {
          results[i] = {config.runs[i].value("name", "run[" + std::to_string(i) + "]"), false,
                        e.what()};
        }
      }
    };
    if (jobs <= 1 || config.runs.size() <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      int n = std::min<int>(jobs, static_cast<int>(config.runs.size()));
      pool.reserve(static_cast<std::size_t>(n));
      for (int t = 0; t < n; ++t) pool.emplace_back(worker);
      for (std::thread& t : pool) t.join();
    }

    bool all_ok = true;
    for (const remotal::RunResult& r : results) {
      print_result(r.name, r.ok, r.message);
      all_ok = all_ok && r.ok;
    }
    return all_ok ? 0 : 1;
  } catch (const remotal::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const remotal::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << '\n';
    return 2;
  }
}
