#include "remotal/gauge.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <utility>

#include "remotal/errors.hpp"
#include "remotal/report.hpp"

namespace remotal {

GaugeFunction power_gauge(double p) {
  if (!(p >= 1.0)) {
    throw InvalidInputError("power_gauge: exponent must be >= 1, got " + format_double(p));
  }
  return {[p](double t) { return p == 1.0 ? t : std::pow(t, p); },
          "t^" + format_double(p)};
}

GaugeCheck check_gauge(const GaugeFunction& gauge, double scale, int grid_points) {
  if (!(scale > 0.0)) throw InvalidInputError("check_gauge: scale must be > 0");
  if (grid_points < 2) throw InvalidInputError("check_gauge: need at least 2 grid points");

  GaugeCheck check;
  check.zero_at_zero = gauge.phi(0.0) == 0.0;

  std::vector<double> values(static_cast<std::size_t>(grid_points));
  check.strictly_increasing = true;
  for (int i = 0; i < grid_points; ++i) {
    double t = scale * static_cast<double>(i) / (grid_points - 1);
    values[static_cast<std::size_t>(i)] = gauge.phi(t);
    if (!std::isfinite(values[static_cast<std::size_t>(i)])) {
      check.strictly_increasing = false;
      break;
    }
    if (i > 0 && !(values[static_cast<std::size_t>(i - 1)] < values[static_cast<std::size_t>(i)])) {
      check.strictly_increasing = false;
      break;
    }
  }

  // A continuous gauge moves very little over a step far below the grid
  // spacing; a jump shows up as an increment comparable to the total rise.
  if (check.strictly_increasing) {
    double total = gauge.phi(scale) - gauge.phi(0.0);
    double h = scale * 1e-6;
    double max_jump = 0.0;
    for (int i = 0; i < grid_points; ++i) {
      double t = scale * static_cast<double>(i) / (grid_points - 1);
      max_jump = std::max(max_jump, std::abs(gauge.phi(t + h) - gauge.phi(t)));
    }
    check.continuity_proxy = max_jump <= 1e-3 * total;
  }
  return check;
}

namespace {

bool same_point(const Point& a, const Point& b) {
  return a.size() == b.size() && (a.size() == 0 || (a - b).cwiseAbs().maxCoeff() == 0.0);
}

struct InstanceFrame {
  double delta = 0.0;
  double dist_xy = 0.0;
  double eps_far = 0.0;
  Index max_index = 0;
  Index tail_lo = 0;
  double precondition_gap = 0.0;
  bool precondition_ok = false;
  std::vector<Point> candidates;
  std::vector<Point> probe;  // x_seq tabulated for k = 1..max_index
};

InstanceFrame build_frame(const VectorSequence& x_seq, const Point& x, const Point& y,
                          const BoundedSet& set, const NormedSpace& space, const WindowPair& pair,
                          Index horizon, const RemotalityParams& params) {
  if (!contains_point(set, y, 1e-12)) {
    throw InvalidInputError("remotality check: y is not a candidate point of the set");
  }
  InstanceFrame frame;
  frame.delta = farthest_distance(x, set, space);
  frame.dist_xy = distance(space, x, y);
  frame.eps_far = params.eps_far.value_or(1e-9 * (1.0 + frame.delta));
  frame.candidates = candidate_points(set);

  double beta_h = pair.beta(horizon);
  if (!std::isfinite(beta_h) || beta_h < 1.0) {
    throw InvalidInputError(pair.label + ": unusable upper window end at horizon");
  }
  frame.max_index = static_cast<Index>(std::floor(beta_h));
  if (frame.max_index > params.trace.enumeration_cap) {
    throw HorizonExceededError("remotality check: tabulation up to index " +
                               std::to_string(frame.max_index) + " exceeds enumeration cap " +
                               std::to_string(params.trace.enumeration_cap));
  }

  frame.probe.reserve(static_cast<std::size_t>(frame.max_index));
  for (Index k = 1; k <= frame.max_index; ++k) {
    Point p = x_seq.term(k);
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      if (!std::isfinite(p[i])) {
        throw InvalidInputError(x_seq.label + ": non-finite coordinate at index " +
                                std::to_string(k));
      }
    }
    frame.probe.push_back(std::move(p));
  }

  Index tail_len = std::max<Index>(2, frame.max_index / 4);
  tail_len = std::min(tail_len, frame.max_index);
  frame.tail_lo = frame.max_index - tail_len + 1;
  frame.precondition_gap = 0.0;
  for (Index k = frame.tail_lo; k <= frame.max_index; ++k) {
    frame.precondition_gap = std::max(
        frame.precondition_gap, distance(space, frame.probe[static_cast<std::size_t>(k - 1)], x));
  }
  frame.precondition_ok = frame.precondition_gap < params.precondition_eps;
  return frame;
}

}  // namespace

RemotalityDivReport remotality_hypothesis_div(const GaugeFunction& gauge,
                                              const VectorSequence& x_seq, const Point& x,
                                              const Point& y, const BoundedSet& set,
                                              const NormedSpace& space, const WindowPair& pair,
                                              const std::vector<double>& bound_grid, Index horizon,
                                              const RemotalityParams& params) {
  InstanceFrame frame = build_frame(x_seq, x, y, set, space, pair, horizon, params);

  RemotalityDivReport report;
  report.precondition_ok = frame.precondition_ok;
  report.precondition_gap = frame.precondition_gap;
  report.delta = frame.delta;
  report.dist_xy = frame.dist_xy;
  report.hypothesis_positive = true;
  report.min_margin = std::numeric_limits<double>::infinity();

  for (const Point& z : frame.candidates) {
    DivCandidateReport entry;
    entry.z = z;
    if (same_point(z, y)) {
      entry.skipped = true;  // the gap sequence is identically zero
      report.per_z.push_back(std::move(entry));
      continue;
    }
    std::vector<double> gaps;
    gaps.reserve(frame.probe.size());
    for (const Point& xk : frame.probe) {
      gaps.push_back(gauge.phi(distance(space, xk, y)) - gauge.phi(distance(space, xk, z)));
    }
    entry.margin = std::numeric_limits<double>::infinity();
    for (Index k = frame.tail_lo; k <= frame.max_index; ++k) {
      entry.margin = std::min(entry.margin, gaps[static_cast<std::size_t>(k - 1)]);
    }
    entry.divergence =
        ab_stat_diverges_to_inf(table_sequence(std::move(gaps), "gauge_gap"), bound_grid, pair,
                                horizon, params.verdict, params.trace);
    report.hypothesis_positive = report.hypothesis_positive && entry.divergence.diverges;
    report.min_margin = std::min(report.min_margin, entry.margin);
    report.per_z.push_back(std::move(entry));
  }

  report.conclusion_holds = report.dist_xy >= report.delta - frame.eps_far;
  return report;
}

RemotalityRatioReport remotality_hypothesis_ratio(const GaugeFunction& gauge,
                                                  const VectorSequence& x_seq, const Point& x,
                                                  const Point& y, const BoundedSet& set,
                                                  const NormedSpace& space, const WindowPair& pair,
                                                  double eps, Index horizon,
                                                  const RemotalityParams& params) {
  if (!(eps > 0.0)) throw InvalidInputError("remotality_hypothesis_ratio: eps must be > 0");
  InstanceFrame frame = build_frame(x_seq, x, y, set, space, pair, horizon, params);

  RemotalityRatioReport report;
  report.precondition_ok = frame.precondition_ok;
  report.precondition_gap = frame.precondition_gap;
  report.delta = frame.delta;
  report.dist_xy = frame.dist_xy;
  report.hypothesis_positive = true;

  for (const Point& z : frame.candidates) {
    RatioCandidateReport entry;
    entry.z = z;
    if (same_point(z, y)) {
      entry.skipped = true;
      report.per_z.push_back(std::move(entry));
      continue;
    }

    auto numerators = std::make_shared<std::vector<double>>();
    auto denominators = std::make_shared<std::vector<double>>();
    numerators->reserve(frame.probe.size());
    denominators->reserve(frame.probe.size());
    for (const Point& xk : frame.probe) {
      numerators->push_back(gauge.phi(distance(space, xk, x)));
      denominators->push_back(gauge.phi(distance(space, xk, y)) -
                              gauge.phi(distance(space, xk, z)));
    }
    for (double den : *denominators) {
      if (std::abs(den) <= 1e-12) ++entry.guarded_indices;
    }

    // Near-zero denominators count as deviations instead of dividing.
    IndexPredicate deviation{
        [numerators, denominators, eps](Index k) {
          auto i = static_cast<std::size_t>(k - 1);
          if (k < 1 || i >= numerators->size()) {
            throw InvalidInputError("ratio check: index " + std::to_string(k) +
                                    " outside tabulated range");
          }
          double den = (*denominators)[i];
          if (std::abs(den) <= 1e-12) return true;
          return std::abs((*numerators)[i] / den) >= eps;
        },
        {},
        "|gauge ratio| >= " + format_double(eps)};
    entry.trace = density_trace(deviation, pair, horizon, params.trace);
    entry.verdict = verdict_converges_to_zero(entry.trace, params.verdict);
    report.hypothesis_positive =
        report.hypothesis_positive && entry.verdict.outcome == Convergence::kConvergesToZero;
    report.per_z.push_back(std::move(entry));
  }

  report.conclusion_holds = report.dist_xy >= report.delta - frame.eps_far;
  return report;
}

}  // namespace remotal
