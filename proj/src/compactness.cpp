#include "remotal/compactness.hpp"

#include <cmath>
#include <ostream>
#include <utility>

#include "remotal/errors.hpp"
#include "remotal/report.hpp"

namespace remotal {

namespace {

// Precomputed distances for repeated slab queries against one (x, set) pair.
struct SlabEngine {
  double delta = 0.0;
  std::vector<Point> candidates;
  std::vector<double> dist_to_x;
  std::vector<std::vector<double>> pairwise;

  SlabEngine(const Point& x, const BoundedSet& set, const NormedSpace& space) {
    if (set.empty()) throw InvalidInputError("slab of an empty set");
    candidates = candidate_points(set);
    dist_to_x.reserve(candidates.size());
    for (const Point& e : candidates) {
      double d = distance(space, x, e);
      dist_to_x.push_back(d);
      delta = std::max(delta, d);
    }
    pairwise.assign(candidates.size(), std::vector<double>(candidates.size(), 0.0));
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      for (std::size_t j = i + 1; j < candidates.size(); ++j) {
        pairwise[i][j] = pairwise[j][i] = distance(space, candidates[i], candidates[j]);
      }
    }
  }

  void members(double t, std::vector<std::size_t>& out) const {
    out.clear();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (dist_to_x[i] > delta - t) out.push_back(i);
    }
  }

  double diam_of(const std::vector<std::size_t>& members) const {
    double best = 0.0;
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        best = std::max(best, pairwise[members[a]][members[b]]);
      }
    }
    return best;
  }
};

double checked_t(const LabSequence& t_seq, Index k) {
  double t = t_seq.term(k);
  if (!std::isfinite(t)) {
    throw InvalidInputError(t_seq.label + ": non-finite radius offset at index " +
                            std::to_string(k));
  }
  if (t < 0.0) {
    throw InvalidInputError(t_seq.label + ": negative radius offset " + format_double(t) +
                            " at index " + std::to_string(k));
  }
  return t;
}

}  // namespace

std::vector<Point> slab(const Point& x, const BoundedSet& set, double t, const NormedSpace& space) {
  if (!std::isfinite(t) || t < 0.0) {
    throw InvalidInputError("slab: radius offset must be finite and >= 0");
  }
  SlabEngine engine(x, set, space);
  std::vector<std::size_t> members;
  engine.members(t, members);
  std::vector<Point> out;
  out.reserve(members.size());
  for (std::size_t i : members) out.push_back(engine.candidates[i]);
  return out;
}

void write_csv(const SlabTrace& trace, std::ostream& out) {
  out << "n,t_n,slab_size,diam\n";
  for (const SlabEntry& e : trace.entries) {
    out << e.n << ',' << format_double(e.t_n) << ',' << e.slab_size << ',' << format_double(e.diam)
        << '\n';
  }
}

SlabTrace slab_trace(const Point& x, const BoundedSet& set, const NormedSpace& space,
                     const LabSequence& t_seq, Index max_index) {
  if (max_index < 1) throw InvalidInputError("slab_trace: max_index must be >= 1");
  SlabEngine engine(x, set, space);
  SlabTrace trace;
  trace.label = t_seq.label;
  trace.entries.reserve(static_cast<std::size_t>(max_index));
  std::vector<std::size_t> members;
  for (Index k = 1; k <= max_index; ++k) {
    double t = checked_t(t_seq, k);
    engine.members(t, members);
    trace.entries.push_back(
        {k, t, static_cast<std::int64_t>(members.size()), engine.diam_of(members)});
  }
  return trace;
}

namespace {

// Shared core: tabulate the slab trace up to the last index any window can
// reach, then classify both scalar traces through the density machinery.
CompactnessVerdict windowed_verdict(const Point& x, const BoundedSet& set,
                                    const NormedSpace& space, const LabSequence& t_seq,
                                    const WindowPair& pair, Index horizon,
                                    const CompactParams& params, CompactnessKind kind) {
  if (!(params.eps > 0.0)) throw InvalidInputError("compactness: eps must be > 0");
  if (horizon < 2) throw InvalidInputError("compactness: horizon must be >= 2");

  double beta_h = pair.beta(horizon);
  if (!std::isfinite(beta_h) || beta_h < 1.0) {
    throw InvalidInputError(pair.label + ": unusable upper window end at horizon");
  }
  Index max_index = static_cast<Index>(std::floor(beta_h));
  if (max_index > params.trace.enumeration_cap) {
    throw HorizonExceededError("slab tabulation up to index " + std::to_string(max_index) +
                               " exceeds enumeration cap " +
                               std::to_string(params.trace.enumeration_cap));
  }

  CompactnessVerdict verdict;
  verdict.kind = kind;
  verdict.slabs = slab_trace(x, set, space, t_seq, max_index);

  std::vector<double> t_vals, diam_vals;
  t_vals.reserve(verdict.slabs.entries.size());
  diam_vals.reserve(verdict.slabs.entries.size());
  for (const SlabEntry& e : verdict.slabs.entries) {
    t_vals.push_back(e.t_n);
    diam_vals.push_back(e.diam);
    verdict.witness_vanishes = verdict.witness_vanishes || e.t_n == 0.0;
  }

  verdict.diam_part =
      ab_stat_converges(table_sequence(std::move(diam_vals), "diam(slab)"), 0.0, params.eps, pair,
                        horizon, params.verdict, params.trace);
  if (kind == CompactnessKind::kXAlphaBetaCompact) {
    verdict.t_part =
        ab_stat_converges(table_sequence(std::move(t_vals), t_seq.label), 0.0, params.eps, pair,
                          horizon, params.verdict, params.trace);
    verdict.positive =
        verdict.diam_part.verdict.outcome == Convergence::kConvergesToZero &&
        verdict.t_part->verdict.outcome == Convergence::kConvergesToZero;
  } else {
    verdict.positive = verdict.diam_part.verdict.outcome == Convergence::kConvergesToZero;
  }
  return verdict;
}

}  // namespace

CompactnessVerdict x_compact_verdict(const Point& x, const BoundedSet& set,
                                     const NormedSpace& space, Index horizon,
                                     const CompactParams& params) {
  return windowed_verdict(x, set, space, harmonic_sequence(), classical_window(), horizon, params,
                          CompactnessKind::kXCompact);
}

CompactnessVerdict x_ab_compact_verdict(const Point& x, const BoundedSet& set,
                                        const NormedSpace& space, const LabSequence& t_seq,
                                        const WindowPair& pair, Index horizon,
                                        const CompactParams& params) {
  return windowed_verdict(x, set, space, t_seq, pair, horizon, params,
                          CompactnessKind::kXAlphaBetaCompact);
}

AttainmentCheck attainment_check(const Point& x, const BoundedSet& set, const NormedSpace& space,
                                 const FarthestParams& params) {
  AttainmentCheck check;
  check.farthest = farthest_points(x, set, space, params);
  check.attained = !check.farthest.attainers.empty();
  return check;
}

bool max_chebyshev_check(const Point& x, const BoundedSet& set, const NormedSpace& space,
                         const FarthestParams& params) {
  return farthest_points(x, set, space, params).unique;
}

PartialCompactCheck partial_ab_compact_check(const Point& x, const BoundedSet& set,
                                             const NormedSpace& space, const BoundedSet& subset,
                                             const LabSequence& t_seq, const WindowPair& pair,
                                             Index horizon, const CompactParams& params,
                                             std::optional<double> eps_far) {
  if (subset.empty()) throw InvalidSubsetError("partial compactness: empty subset witness");
  for (const Point& h : candidate_points(subset)) {
    if (!contains_point(set, h, 1e-12)) {
      throw InvalidSubsetError("partial compactness: subset candidate point outside the set");
    }
  }

  PartialCompactCheck check;
  check.delta_set = farthest_distance(x, set, space);
  check.delta_subset = farthest_distance(x, subset, space);
  double tol = eps_far.value_or(1e-9 * (1.0 + check.delta_set));
  check.delta_match = std::abs(check.delta_set - check.delta_subset) <= tol;
  check.subset_verdict = x_ab_compact_verdict(x, subset, space, t_seq, pair, horizon, params);
  check.positive = check.delta_match && check.subset_verdict.positive;
  return check;
}

}  // namespace remotal
