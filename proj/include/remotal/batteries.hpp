#pragma once

// Seeded instance batteries exercising the library's implication claims on
// generated finite instances. Batteries assert implications only on
// non-degenerate instances; degenerate ones (vanishing witnesses) are counted
// and described instead of asserted.

#include <cstdint>
#include <string>
#include <vector>

namespace remotal {

struct BatteryOutcome {
  std::string name;
  int instances = 0;
  int passed = 0;
  // Instances where the implication was reported rather than asserted
  // (degenerate witness); described in `flagged`.
  int reported = 0;
  std::vector<std::string> failures;
  std::vector<std::string> flagged;
  bool ok() const { return failures.empty(); }
};

// Sets with a unique farthest point and a wide spectral gap are plain-compact
// at the probe; the windowed verdict with t_n = 1/n must then be positive for
// every tested window pair.
BatteryOutcome z1_battery(std::uint64_t seed, int instances);

// Ordinary maximizing sequences must classify as windowed-density maximizing
// under every tested window pair.
BatteryOutcome maximizing_battery(std::uint64_t seed, int instances);

// Both directions of the partial-compactness equivalence via the singleton
// subset built from the first attainer.
BatteryOutcome partial_iff_battery(std::uint64_t seed, int instances);

// Positive windowed verdicts with a non-vanishing witness imply attainment
// and a unique attainer; includes one degenerate-witness instance that is
// reported, not asserted.
BatteryOutcome z2_battery(std::uint64_t seed, int instances);

// Gauge divergence checker: instances built so the gauged gap clears the
// whole bound grid; hypothesis positivity with margin >= 1 must coincide
// with y attaining the farthest distance.
BatteryOutcome gauge_div_battery(std::uint64_t seed, int instances);

// The fixed sign-subtlety instance for the ratio checker: hypothesis positive
// yet conclusion false; must be reported as a violation, never asserted.
struct RatioSignOutcome {
  bool hypothesis_positive = false;
  bool conclusion_holds = false;
  bool reported_violation = false;  // hypothesis positive and conclusion false
};

RatioSignOutcome gauge_ratio_sign_instance();

}  // namespace remotal
