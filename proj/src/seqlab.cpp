#include "remotal/seqlab.hpp"

#include <cmath>
#include <memory>
#include <utility>

#include "remotal/errors.hpp"
#include "remotal/report.hpp"

namespace remotal {

namespace {

void require_index(Index k, const char* what) {
  if (k < 1) throw InvalidInputError(std::string(what) + ": index must be >= 1, got " + std::to_string(k));
}

void require_unit_interval(double c, const char* what) {
  if (!(c > 0.0 && c < 1.0)) {
    throw InvalidInputError(std::string(what) + ": parameter c must lie in (0,1), got " +
                            format_double(c));
  }
}

double checked_term(const LabSequence& seq, Index k) {
  require_index(k, seq.label.c_str());
  double v = seq.term(k);
  if (!std::isfinite(v)) {
    throw InvalidInputError(seq.label + ": non-finite term at index " + std::to_string(k));
  }
  return v;
}

}  // namespace

LabSequence constant_sequence(double value) {
  return {[value](Index) { return value; }, "const(" + format_double(value) + ")"};
}

LabSequence harmonic_sequence() {
  return {[](Index k) { return 1.0 / static_cast<double>(k); }, "1/k"};
}

LabSequence alternating_sequence() {
  return {[](Index k) { return (k % 2 == 0) ? 1.0 : -1.0; }, "(-1)^k"};
}

LabSequence ramp_sequence() {
  return {[](Index k) { return static_cast<double>(k); }, "k"};
}

LabSequence sign_probe_sequence(double c) {
  require_unit_interval(c, "sign_probe_sequence");
  return {[c](Index k) {
            return is_power_of_two(k) ? -1.0 + std::pow(c, static_cast<double>(k)) : 0.0;
          },
          "sign_probe(c=" + format_double(c) + ")"};
}

LabSequence blocked_divergent_sequence() {
  return {[](Index k) { return is_power_of_two(k) ? 0.0 : static_cast<double>(k); },
          "blocked_divergent"};
}

LabSequence mixed_maximizing_sequence(double c) {
  require_unit_interval(c, "mixed_maximizing_sequence");
  return {[c](Index k) {
            return is_power_of_two(k) ? 0.0 : 1.0 - std::pow(c, static_cast<double>(k));
          },
          "mixed_maximizing(c=" + format_double(c) + ")"};
}

LabSequence square_flag_sequence() {
  return {[](Index k) { return is_perfect_square(k) ? 1.0 : 0.0; }, "square_flag"};
}

LabSequence table_sequence(std::vector<double> values, std::string label) {
  auto data = std::make_shared<std::vector<double>>(std::move(values));
  return {[data, label](Index k) {
            if (k < 1 || static_cast<std::size_t>(k) > data->size()) {
              throw InvalidInputError(label + ": index " + std::to_string(k) +
                                      " outside table of size " + std::to_string(data->size()));
            }
            return (*data)[static_cast<std::size_t>(k - 1)];
          },
          std::move(label)};
}

LabSequence map_sequence(LabSequence base, std::function<double(double)> f, std::string label) {
  auto inner = std::move(base.term);
  return {[inner = std::move(inner), f = std::move(f)](Index k) { return f(inner(k)); },
          std::move(label)};
}

VectorSequence embed_1d(LabSequence seq) {
  auto inner = std::move(seq.term);
  return {[inner = std::move(inner)](Index k) {
            Point p(1);
            p[0] = inner(k);
            return p;
          },
          std::move(seq.label)};
}

ClassificationResult ab_stat_converges(const LabSequence& seq, double limit, double eps,
                                       const WindowPair& pair, Index horizon,
                                       const VerdictParams& vparams, const TraceParams& tparams) {
  if (!(eps > 0.0)) throw InvalidInputError("ab_stat_converges: eps must be > 0");
  if (!std::isfinite(limit)) throw InvalidInputError("ab_stat_converges: limit must be finite");
  IndexPredicate deviation{
      [&seq, limit, eps](Index k) { return std::abs(checked_term(seq, k) - limit) >= eps; },
      {},
      "|" + seq.label + " - " + format_double(limit) + "| >= " + format_double(eps)};
  ClassificationResult result;
  result.trace = density_trace(deviation, pair, horizon, tparams);
  result.verdict = verdict_converges_to_zero(result.trace, vparams);
  return result;
}

std::vector<double> default_bound_grid() { return {1.0, 10.0, 100.0, 1000.0}; }

DivergenceResult ab_stat_diverges_to_inf(const LabSequence& seq,
                                         const std::vector<double>& bound_grid,
                                         const WindowPair& pair, Index horizon,
                                         const VerdictParams& vparams, const TraceParams& tparams) {
  if (bound_grid.empty()) throw InvalidInputError("ab_stat_diverges_to_inf: empty bound grid");
  DivergenceResult result;
  result.diverges = true;
  for (double bound : bound_grid) {
    if (!(bound > 0.0)) {
      throw InvalidInputError("ab_stat_diverges_to_inf: bounds must be > 0, got " +
                              format_double(bound));
    }
    IndexPredicate below{[&seq, bound](Index k) { return checked_term(seq, k) < bound; },
                         {},
                         seq.label + " < " + format_double(bound)};
    DivergenceResult::PerBound entry;
    entry.bound = bound;
    entry.trace = density_trace(below, pair, horizon, tparams);
    entry.verdict = verdict_converges_to_zero(entry.trace, vparams);
    result.diverges = result.diverges && entry.verdict.outcome == Convergence::kConvergesToZero;
    result.per_bound.push_back(std::move(entry));
  }
  return result;
}

namespace {

LabSequence distance_sequence(const VectorSequence& seq, const Point& x,
                              const NormedSpace& space) {
  return {[term = seq.term, x, space](Index k) { return distance(space, term(k), x); },
          "dist(" + seq.label + ")"};
}

}  // namespace

MaximizingCheck is_maximizing(const VectorSequence& seq, const Point& x, const BoundedSet& set,
                              const NormedSpace& space, double eps, Index horizon,
                              std::optional<Index> trend_window) {
  if (!(eps > 0.0)) throw InvalidInputError("is_maximizing: eps must be > 0");
  if (horizon < 1) throw InvalidInputError("is_maximizing: horizon must be >= 1");
  MaximizingCheck check;
  check.delta = farthest_distance(x, set, space);
  check.eps = eps;
  check.horizon = horizon;
  // Ordinary convergence is judged over the second half of the horizon by
  // default: a long stable tail, not just the last few entries.
  Index trend = trend_window.value_or(std::max<Index>(1, horizon / 2));
  if (trend < 1 || trend > horizon) {
    throw InvalidInputError("is_maximizing: trend_window must lie in [1, horizon]");
  }
  check.trend_window = trend;
  check.maximizing = true;
  for (Index k = horizon - trend + 1; k <= horizon; ++k) {
    double d = distance(space, seq.term(k), x);
    if (!std::isfinite(d)) {
      throw InvalidInputError(seq.label + ": non-finite distance at index " + std::to_string(k));
    }
    if (std::abs(d - check.delta) >= eps) {
      check.maximizing = false;
      check.first_violation = k;
      break;
    }
  }
  return check;
}

ClassificationResult is_ab_stat_maximizing(const VectorSequence& seq, const Point& x,
                                           const BoundedSet& set, const NormedSpace& space,
                                           double eps, const WindowPair& pair, Index horizon,
                                           const VerdictParams& vparams,
                                           const TraceParams& tparams) {
  double delta = farthest_distance(x, set, space);
  return ab_stat_converges(distance_sequence(seq, x, space), delta, eps, pair, horizon, vparams,
                           tparams);
}

ContinuityResult partial_ab_stat_continuity(const std::function<double(double)>& f, double x,
                                            const LabSequence& probe, const WindowPair& pair,
                                            double eps, Index horizon,
                                            const ContinuityParams& params) {
  if (horizon < 1) throw InvalidInputError("partial_ab_stat_continuity: horizon must be >= 1");
  ContinuityResult result;

  double final_value = checked_term(probe, horizon);
  for (Index k = 1; k <= horizon; ++k) {
    if (checked_term(probe, k) != final_value) ++result.distinct_from_final;
  }
  if (result.distinct_from_final < params.min_distinct) {
    throw InvalidWitnessError(probe.label + ": probe is eventually constant within horizon " +
                              std::to_string(horizon) + " (differs from final value at " +
                              std::to_string(result.distinct_from_final) + " < " +
                              std::to_string(params.min_distinct) + " indices)");
  }

  result.preimage = ab_stat_converges(probe, x, eps, pair, horizon, params.verdict, params.trace);
  LabSequence image_seq = map_sequence(probe, f, "f(" + probe.label + ")");
  result.image =
      ab_stat_converges(image_seq, f(x), eps, pair, horizon, params.verdict, params.trace);
  result.continuous_for_witness =
      result.preimage.verdict.outcome != Convergence::kConvergesToZero ||
      result.image.verdict.outcome == Convergence::kConvergesToZero;
  return result;
}

}  // namespace remotal
