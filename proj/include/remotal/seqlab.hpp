#pragma once

// Sequence families and finite-horizon classifiers: windowed-density
// convergence of scalar sequences, divergence past bound grids, maximizing
// diagnostics for vector sequences, and witness-based continuity checks.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "remotal/geometry.hpp"
#include "remotal/windows.hpp"

namespace remotal {

// A real sequence x_k defined for k = 1, 2, ...
struct LabSequence {
  std::function<double(Index)> term;
  std::string label;
};

// A sequence of points in R^d, same indexing convention.
struct VectorSequence {
  std::function<Point(Index)> term;
  std::string label;
};

LabSequence constant_sequence(double value);
LabSequence harmonic_sequence();    // x_k = 1/k
LabSequence alternating_sequence(); // x_k = (-1)^k
LabSequence ramp_sequence();        // x_k = k

// x_k = -1 + c^k when k is a power of two, 0 otherwise (0 < c < 1).
LabSequence sign_probe_sequence(double c);

// x_k = 0 when k is a power of two, k otherwise.
LabSequence blocked_divergent_sequence();

// x_k = 0 when k is a power of two, 1 - c^k otherwise (0 < c < 1).
LabSequence mixed_maximizing_sequence(double c);

// x_k = 1 on perfect squares, 0 otherwise.
LabSequence square_flag_sequence();

// 1-indexed lookup table; indices past the end raise invalid-input.
LabSequence table_sequence(std::vector<double> values, std::string label = "table");

// Pointwise transform f(x_k) with a fresh label.
LabSequence map_sequence(LabSequence base, std::function<double(double)> f, std::string label);

// Embed a scalar sequence into R^1.
VectorSequence embed_1d(LabSequence seq);

// Step sign: -1 for negatives, 0 at 0, +1 for positives.
inline double sign_step(double t) { return (t > 0.0) ? 1.0 : (t < 0.0 ? -1.0 : 0.0); }

// Verdict plus the density trace it was derived from.
struct ClassificationResult {
  Verdict verdict;
  DensityTrace trace;
};

// Density verdict for the deviation set {k : |x_k - limit| >= eps}.
ClassificationResult ab_stat_converges(const LabSequence& seq, double limit, double eps,
                                       const WindowPair& pair, Index horizon,
                                       const VerdictParams& vparams = {},
                                       const TraceParams& tparams = {});

// Divergence to +inf, probed on a finite grid of bounds M: for each M the
// sub-level set {k : x_k < M} must have vanishing window density.
struct DivergenceResult {
  struct PerBound {
    double bound;
    Verdict verdict;
    DensityTrace trace;
  };
  std::vector<PerBound> per_bound;
  bool diverges = false;  // true iff every per-bound verdict converges to zero
};

std::vector<double> default_bound_grid();  // {1, 10, 100, 1000}

DivergenceResult ab_stat_diverges_to_inf(const LabSequence& seq,
                                         const std::vector<double>& bound_grid,
                                         const WindowPair& pair, Index horizon,
                                         const VerdictParams& vparams = {},
                                         const TraceParams& tparams = {});

// Plain-convergence check of ||x_k - x|| toward the farthest distance
// delta(x, set): every index in the final trend window must be within eps.
struct MaximizingCheck {
  bool maximizing = false;
  std::optional<Index> first_violation;  // first offending index in the trend window
  double delta = 0.0;                    // farthest distance delta(x, set)
  double eps = 0.0;
  Index horizon = 0;
  Index trend_window = 0;
};

MaximizingCheck is_maximizing(const VectorSequence& seq, const Point& x, const BoundedSet& set,
                              const NormedSpace& space, double eps, Index horizon,
                              std::optional<Index> trend_window = std::nullopt);

// Windowed-density version of the same property.
ClassificationResult is_ab_stat_maximizing(const VectorSequence& seq, const Point& x,
                                           const BoundedSet& set, const NormedSpace& space,
                                           double eps, const WindowPair& pair, Index horizon,
                                           const VerdictParams& vparams = {},
                                           const TraceParams& tparams = {});

// Witness-based continuity: does density convergence of the probe to x force
// density convergence of f(probe) to f(x)?
struct ContinuityResult {
  ClassificationResult preimage;
  ClassificationResult image;
  bool continuous_for_witness = false;  // preimage converges  =>  image converges
  Index distinct_from_final = 0;        // indices where the probe differs from its last value
};

struct ContinuityParams {
  VerdictParams verdict;
  TraceParams trace;
  // The probe must differ from its final value at at least this many indices
  // (finite stand-in for "not eventually constant").
  Index min_distinct = 3;
};

ContinuityResult partial_ab_stat_continuity(const std::function<double(double)>& f, double x,
                                            const LabSequence& probe, const WindowPair& pair,
                                            double eps, Index horizon,
                                            const ContinuityParams& params = {});

}  // namespace remotal
