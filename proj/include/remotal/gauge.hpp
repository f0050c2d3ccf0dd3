#pragma once

// Gauge functions (strictly increasing, continuous, phi(0) = 0) and the two
// remotality hypothesis checkers built on them: one asks the gauged distance
// gap to diverge in window density, the other asks a gauged ratio to vanish.
// Both report whether the hypothesis holds on the given finite instance and
// whether the claimed conclusion (y attains the farthest distance from x)
// actually holds, without asserting either.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "remotal/geometry.hpp"
#include "remotal/seqlab.hpp"
#include "remotal/windows.hpp"

namespace remotal {

struct GaugeFunction {
  std::function<double(double)> phi;
  std::string label;
};

// phi(t) = t^p for p >= 1 (p < 1 is rejected).
GaugeFunction power_gauge(double p);

struct GaugeCheck {
  bool zero_at_zero = false;
  bool strictly_increasing = false;  // on the sampled grid
  bool continuity_proxy = false;     // |phi(t+h) - phi(t)| shrinks with h on the grid
  bool ok() const { return zero_at_zero && strictly_increasing && continuity_proxy; }
};

// Samples phi on grid_points equally spaced values over [0, scale].
GaugeCheck check_gauge(const GaugeFunction& gauge, double scale = 10.0, int grid_points = 1000);

struct RemotalityParams {
  // Tolerance for "x_seq converges to x" over the tail of checked indices.
  double precondition_eps = 1e-6;
  // Conclusion tolerance; default 1e-9 * (1 + delta).
  std::optional<double> eps_far;
  VerdictParams verdict;
  TraceParams trace;
};

struct DivCandidateReport {
  Point z;
  bool skipped = false;  // z coincides with y: the gap sequence is identically 0
  DivergenceResult divergence;
  // Smallest value of the gap sequence over the tail of checked indices; a
  // quantitative grade of how strongly the hypothesis holds.
  double margin = 0.0;
};

struct RemotalityDivReport {
  bool precondition_ok = false;  // x_seq -> x in the ordinary sense at horizon
  double precondition_gap = 0.0; // max ||x_k - x|| over the tail
  double delta = 0.0;            // farthest distance from x
  double dist_xy = 0.0;
  bool hypothesis_positive = false;  // every non-skipped z diverges on the full bound grid
  double min_margin = 0.0;           // min margin over non-skipped z
  bool conclusion_holds = false;     // dist_xy >= delta - eps_far
  std::vector<DivCandidateReport> per_z;
};

// For each candidate z != y of the set, windowed-divergence check of
// phi(||x_k - y||) - phi(||x_k - z||) against the bound grid.
RemotalityDivReport remotality_hypothesis_div(const GaugeFunction& gauge,
                                              const VectorSequence& x_seq, const Point& x,
                                              const Point& y, const BoundedSet& set,
                                              const NormedSpace& space, const WindowPair& pair,
                                              const std::vector<double>& bound_grid, Index horizon,
                                              const RemotalityParams& params = {});

struct RatioCandidateReport {
  Point z;
  bool skipped = false;
  Verdict verdict;
  DensityTrace trace;
  // Indices with denominator within 1e-12 of zero, counted as deviations
  // instead of crashing; reported for transparency.
  Index guarded_indices = 0;
};

struct RemotalityRatioReport {
  bool precondition_ok = false;
  double precondition_gap = 0.0;
  double delta = 0.0;
  double dist_xy = 0.0;
  bool hypothesis_positive = false;
  bool conclusion_holds = false;
  std::vector<RatioCandidateReport> per_z;
};

// For each candidate z != y, windowed-density check that
// |phi(||x_k - x||) / (phi(||x_k - y||) - phi(||x_k - z||))| has vanishing
// deviation density at threshold eps.
RemotalityRatioReport remotality_hypothesis_ratio(const GaugeFunction& gauge,
                                                  const VectorSequence& x_seq, const Point& x,
                                                  const Point& y, const BoundedSet& set,
                                                  const NormedSpace& space, const WindowPair& pair,
                                                  double eps, Index horizon,
                                                  const RemotalityParams& params = {});

}  // namespace remotal
