// Acceptance gate: one pass/fail line per criterion, non-zero exit when any
// criterion fails. Expected values are checked against the independent
// brute-force oracles in oracles.hpp; tolerances are pinned here, not
// configurable.

#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "remotal/batteries.hpp"
#include "remotal/compactness.hpp"
#include "remotal/gauge.hpp"
#include "remotal/geometry.hpp"
#include "remotal/seqlab.hpp"
#include "remotal/windows.hpp"

using namespace remotal;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::function<std::string()> run;  // returns "" on success, else the reason
};

std::string fail_msg(const std::string& msg) { return msg; }

Point pt1(double v) {
  Point p(1);
  p[0] = v;
  return p;
}

// ---------------------------------------------------------------------------
// Criterion 1: sign-probe continuity example. Deviation counts match the
// powers of 2 carrying a deviating term, density <= 2 log2(n) / n^2 for
// n >= 2, and both verdicts converge at horizon 200, tolerance 1e-2.
// ---------------------------------------------------------------------------
std::string criterion_sign_continuity() {
  const double c = 0.5;
  const double eps = 0.5;
  ContinuityParams params;  // verdict tolerance defaults to 1e-2
  ContinuityResult res = partial_ab_stat_continuity(
      [](double t) { return sign_step(t); }, 0.0, sign_probe_sequence(c), poly_window(1.0, 2.0),
      eps, 200, params);

  if (res.preimage.verdict.outcome != Convergence::kConvergesToZero) {
    return fail_msg("preimage verdict is not ConvergesToZero");
  }
  if (res.image.verdict.outcome != Convergence::kConvergesToZero) {
    return fail_msg("image verdict is not ConvergesToZero");
  }
  if (!res.continuous_for_witness) return fail_msg("witness implication failed");

  for (const DensityEntry& e : res.preimage.trace.values) {
    // Independent recount: powers of 2 in [1, n^2] whose term deviates.
    oracle::Index expected = 0;
    for (oracle::Index k = 2; k <= e.n * e.n; k *= 2) {
      double term = -1.0 + std::pow(c, static_cast<double>(k));
      if (std::abs(term) >= eps) ++expected;
    }
    if (e.count != expected) {
      return fail_msg("preimage count at n=" + std::to_string(e.n) + " is " +
                      std::to_string(e.count) + ", oracle says " + std::to_string(expected));
    }
    if (res.image.trace.values[static_cast<std::size_t>(e.n - 1)].count != expected) {
      return fail_msg("image count differs from oracle at n=" + std::to_string(e.n));
    }
    if (e.n >= 2) {
      double bound = 2.0 * std::log2(static_cast<double>(e.n));
      if (static_cast<double>(e.count) > bound) {
        return fail_msg("count " + std::to_string(e.count) + " above 2*log2(n) at n=" +
                        std::to_string(e.n));
      }
    }
  }
  return "";
}

// ---------------------------------------------------------------------------
// Criterion 2: divergence example under sliding blocks [n^3, n^3 + n^2].
// Densities stay below (M + 1 + log2(beta_n)) / n^2 and every per-M verdict
// converges to zero at horizon 60.
// ---------------------------------------------------------------------------
std::string criterion_divergence() {
  const std::vector<double> grid = {1.0, 10.0, 100.0};
  DivergenceResult res =
      ab_stat_diverges_to_inf(blocked_divergent_sequence(), grid, power_block_window(3.0, 2.0), 60);
  if (!res.diverges) return fail_msg("aggregate divergence verdict is negative");

  for (const auto& pb : res.per_bound) {
    if (pb.verdict.outcome != Convergence::kConvergesToZero) {
      return fail_msg("verdict for M=" + std::to_string(pb.bound) + " is not ConvergesToZero");
    }
    for (const DensityEntry& e : pb.trace.values) {
      oracle::Index lo = e.n * e.n * e.n;
      oracle::Index hi = lo + e.n * e.n;
      oracle::Index expected = oracle::count_in(lo, hi, [&](oracle::Index k) {
        double x = oracle::is_pow2(k) ? 0.0 : static_cast<double>(k);
        return x < pb.bound;
      });
      if (e.count != expected) {
        return fail_msg("count at M=" + std::to_string(pb.bound) + ", n=" + std::to_string(e.n) +
                        " is " + std::to_string(e.count) + ", oracle says " +
                        std::to_string(expected));
      }
      double ell = static_cast<double>(e.n) * static_cast<double>(e.n);
      double bound = (pb.bound + 1.0 + std::log2(e.beta)) / ell;
      if (e.density > bound) {
        return fail_msg("density above the (M + 1 + log2 beta)/l bound at M=" +
                        std::to_string(pb.bound) + ", n=" + std::to_string(e.n));
      }
    }
  }
  return "";
}

// ---------------------------------------------------------------------------
// Criterion 3: maximizing example. Plainly rejected at horizon 500 with the
// first violation at 256, delta computed as exactly 1, windowed verdict
// accepted, and density * n^2 = floor(log2(n^2)) + d with measured d = 1.
// ---------------------------------------------------------------------------
std::string criterion_maximizing() {
  VectorSequence seq = embed_1d(mixed_maximizing_sequence(0.5));
  BoundedSet set = BoundedSet::interval(-1.0, 1.0);
  NormedSpace space = l2_space(1);

  MaximizingCheck plain = is_maximizing(seq, pt1(0.0), set, space, 0.01, 500);
  if (plain.maximizing) return fail_msg("plain check accepted the dropping sequence");
  if (plain.delta != 1.0) return fail_msg("delta(0, [-1,1]) is not exactly 1");
  if (!plain.first_violation || *plain.first_violation != 256) {
    return fail_msg("first violation is not at index 256");
  }

  VerdictParams vparams;
  vparams.tolerance = 0.01;
  ClassificationResult windowed =
      is_ab_stat_maximizing(seq, pt1(0.0), set, space, 0.5, poly_window(1.0, 2.0), 200, vparams);
  if (windowed.verdict.outcome != Convergence::kConvergesToZero) {
    return fail_msg("windowed verdict is not ConvergesToZero");
  }

  oracle::Index measured_d = -1;
  for (const DensityEntry& e : windowed.trace.values) {
    oracle::Index n_sq = e.n * e.n;
    oracle::Index d = e.count - oracle::floor_log2(n_sq);
    if (measured_d < 0) measured_d = d;
    if (d != measured_d) {
      return fail_msg("count offset d is not constant: " + std::to_string(d) + " at n=" +
                      std::to_string(e.n) + " vs " + std::to_string(measured_d));
    }
    // Density is exactly count / n^2.
    if (e.density != static_cast<double>(e.count) / static_cast<double>(n_sq)) {
      return fail_msg("density at n=" + std::to_string(e.n) + " is not exactly count/n^2");
    }
  }
  if (measured_d != 1) {
    return fail_msg("measured d = " + std::to_string(measured_d) + ", expected 1");
  }
  return "";
}

// ---------------------------------------------------------------------------
// Criterion 4: compactness example. Slab diameters on [-1,1] at 0 with the
// square-flag witness follow the 0/2 case table for all n <= 10^4, deviation
// density is exactly 1/n, and the 1/n witness yields DoesNotConverge with
// every slab diameter exactly 2.
// ---------------------------------------------------------------------------
std::string criterion_compactness() {
  BoundedSet seg = BoundedSet::interval(-1.0, 1.0);
  NormedSpace space = l2_space(1);
  Point origin = pt1(0.0);

  CompactParams params;
  params.eps = 0.5;
  params.verdict.tolerance = 0.02;
  CompactnessVerdict windowed = x_ab_compact_verdict(origin, seg, space, square_flag_sequence(),
                                                     poly_window(1.0, 2.0), 100, params);
  if (windowed.slabs.entries.size() != 10000) {
    return fail_msg("slab table does not reach n = 10^4");
  }
  for (const SlabEntry& e : windowed.slabs.entries) {
    double expected = oracle::is_square(e.n) ? 2.0 : 0.0;
    if (e.diam != expected) {
      return fail_msg("slab diameter at n=" + std::to_string(e.n) + " is not exactly " +
                      (expected == 2.0 ? "2" : "0"));
    }
  }
  if (!windowed.t_part) return fail_msg("windowed verdict lacks a t trace");
  for (const DensityEntry& e : windowed.t_part->trace.values) {
    if (e.count != e.n) {
      return fail_msg("deviation count at window n=" + std::to_string(e.n) + " is not n");
    }
    if (e.density != 1.0 / static_cast<double>(e.n)) {
      return fail_msg("deviation density at window n=" + std::to_string(e.n) +
                      " is not exactly 1/n");
    }
  }
  if (!windowed.positive) return fail_msg("windowed verdict is not positive");
  if (!windowed.witness_vanishes) return fail_msg("vanishing witness was not flagged");

  CompactnessVerdict plain = x_compact_verdict(origin, seg, space, 100);
  if (plain.positive || plain.diam_part.verdict.outcome != Convergence::kDoesNotConverge) {
    return fail_msg("1/n witness verdict is not DoesNotConverge");
  }
  for (const SlabEntry& e : plain.slabs.entries) {
    if (e.diam != 2.0) {
      return fail_msg("1/n slab diameter at n=" + std::to_string(e.n) + " is not exactly 2");
    }
  }
  return "";
}

// ---------------------------------------------------------------------------
// Criterion 5: geometry oracle equivalence on 100 seeded clouds with
// d in {1,2,3,8} and p in {1,2,inf}; exact match against exhaustive
// enumeration, exact translation equivariance, scaling within 1e-12 relative.
// ---------------------------------------------------------------------------
std::string criterion_geometry_oracle() {
  std::mt19937_64 eng(20250814);
  const int dims[4] = {1, 2, 3, 8};
  const double ps[3] = {1.0, 2.0, std::numeric_limits<double>::infinity()};

  auto dyadic = [&](double span) {
    // Multiples of 1/1024 in [-span, span]; exact in double precision.
    std::int64_t steps = static_cast<std::int64_t>(span * 1024.0);
    return static_cast<double>(static_cast<std::int64_t>(eng() % (2 * steps + 1)) - steps) /
           1024.0;
  };

  for (int trial = 0; trial < 100; ++trial) {
    int d = dims[trial % 4];
    double p = ps[(trial / 4) % 3];
    NormedSpace space{d, p};
    int m = 2 + static_cast<int>(eng() % 199);  // up to 200 points

    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      Point q(d);
      for (int j = 0; j < d; ++j) q[j] = dyadic(2.0);
      pts.push_back(std::move(q));
    }
    Point x(d), v(d);
    for (int j = 0; j < d; ++j) {
      x[j] = dyadic(2.0);
      v[j] = dyadic(4.0);
    }
    BoundedSet set = BoundedSet::cloud(pts);

    double lib = farthest_distance(x, set, space);
    double ora = oracle::farthest(x, pts, p);
    if (lib != ora) {
      return fail_msg("farthest_distance mismatch at trial " + std::to_string(trial));
    }

    FarthestParams exact;
    exact.eps_far = 0.0;
    FarthestResult fp = farthest_points(x, set, space, exact);
    std::vector<Point> expected;
    for (std::size_t i : oracle::argmax_indices(x, pts, p)) expected.push_back(pts[i]);
    std::sort(expected.begin(), expected.end(), lex_less);
    if (fp.attainers.size() != expected.size()) {
      return fail_msg("attainer count mismatch at trial " + std::to_string(trial));
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
      for (Eigen::Index j = 0; j < expected[i].size(); ++j) {
        if (fp.attainers[i][j] != expected[i][j]) {
          return fail_msg("attainer coordinates differ at trial " + std::to_string(trial));
        }
      }
    }

    // Translation equivariance, exact for dyadic data.
    std::vector<Point> moved;
    moved.reserve(pts.size());
    for (const Point& e : pts) moved.push_back(e + v);
    double shifted = farthest_distance(x + v, BoundedSet::cloud(moved), space);
    if (shifted != lib) {
      return fail_msg("translation changed the farthest distance at trial " +
                      std::to_string(trial));
    }

    // Scaling covariance within 1e-12 relative.
    double lambda = std::pow(2.0, static_cast<double>(static_cast<int>(eng() % 7)) - 3.0);
    std::vector<Point> scaled;
    scaled.reserve(pts.size());
    for (const Point& e : pts) scaled.push_back(lambda * e);
    double big = farthest_distance(lambda * x, BoundedSet::cloud(scaled), space);
    if (std::abs(big - lambda * lib) > 1e-12 * (1.0 + lambda * lib)) {
      return fail_msg("scaling broke the farthest distance at trial " + std::to_string(trial));
    }
  }
  return "";
}

// ---------------------------------------------------------------------------
// Criterion 6: Chebyshev centers. Interval [-1,1] within 1e-6, and on 20
// seeded 2-D clouds the optimizer radius beats a 41x41 grid oracle up to 1e-3.
// ---------------------------------------------------------------------------
std::string criterion_chebyshev() {
  ChebyshevResult seg = chebyshev_center(BoundedSet::interval(-1.0, 1.0), l2_space(1));
  if (std::abs(seg.center[0]) > 1e-6) return fail_msg("interval center misses 0 by > 1e-6");
  if (std::abs(seg.radius - 1.0) > 1e-6) return fail_msg("interval radius misses 1 by > 1e-6");

  std::mt19937_64 eng(20250815);
  for (int trial = 0; trial < 20; ++trial) {
    int m = 3 + static_cast<int>(eng() % 28);
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      Point q(2);
      q[0] = static_cast<double>(static_cast<std::int64_t>(eng() % 1025) - 512) / 512.0;
      q[1] = static_cast<double>(static_cast<std::int64_t>(eng() % 1025) - 512) / 512.0;
      pts.push_back(std::move(q));
    }
    BoundedSet set = BoundedSet::cloud(pts);
    NormedSpace space = l2_space(2);

    ChebyshevResult opt = chebyshev_center(set, space);
    AxisBox bb = bounding_box(set);
    double grid_radius = oracle::chebyshev_radius_grid_2d(pts, 2.0, bb.lo, bb.hi, 41);
    if (opt.radius > grid_radius + 1e-3) {
      return fail_msg("optimizer radius " + std::to_string(opt.radius) + " above grid oracle " +
                      std::to_string(grid_radius) + " + 1e-3 at trial " + std::to_string(trial));
    }
    // Any center must cover half the diameter.
    if (opt.radius < 0.5 * diameter(set, space) - 1e-9) {
      return fail_msg("optimizer radius below diam/2 at trial " + std::to_string(trial));
    }
  }
  return "";
}

// ---------------------------------------------------------------------------
// Criterion 7: implication batteries, 50 instances each.
// ---------------------------------------------------------------------------
std::string criterion_batteries() {
  BatteryOutcome z1 = z1_battery(20250816, 50);
  if (!z1.ok() || z1.passed != 50) {
    return fail_msg("z1 battery: " + std::to_string(z1.passed) + "/50 passed" +
                    (z1.failures.empty() ? "" : ("; first failure: " + z1.failures.front())));
  }
  BatteryOutcome mx = maximizing_battery(20250817, 50);
  if (!mx.ok() || mx.passed != 50) {
    return fail_msg("maximizing battery: " + std::to_string(mx.passed) + "/50 passed" +
                    (mx.failures.empty() ? "" : ("; first failure: " + mx.failures.front())));
  }
  BatteryOutcome pc = partial_iff_battery(20250818, 50);
  if (!pc.ok() || pc.passed != 50) {
    return fail_msg("partial-compactness battery: " + std::to_string(pc.passed) + "/50 passed" +
                    (pc.failures.empty() ? "" : ("; first failure: " + pc.failures.front())));
  }
  return "";
}

// ---------------------------------------------------------------------------
// Criterion 8: gauge soundness. 100 divergence-hypothesis instances where
// positivity with margin >= 1 must coincide with attainment, plus the fixed
// ratio sign-subtlety instance reported as violated, never asserted.
// ---------------------------------------------------------------------------
std::string criterion_gauge() {
  BatteryOutcome div = gauge_div_battery(20250819, 100);
  if (!div.ok() || div.passed != 100) {
    return fail_msg("gauge divergence battery: " + std::to_string(div.passed) + "/100 passed" +
                    (div.failures.empty() ? "" : ("; first failure: " + div.failures.front())));
  }
  RatioSignOutcome sign = gauge_ratio_sign_instance();
  if (!sign.hypothesis_positive) {
    return fail_msg("sign-subtlety instance: hypothesis unexpectedly negative");
  }
  if (sign.conclusion_holds) {
    return fail_msg("sign-subtlety instance: conclusion unexpectedly holds");
  }
  if (!sign.reported_violation) {
    return fail_msg("sign-subtlety instance was not reported as a violation");
  }
  return "";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "sign-probe continuity example (counts, 2*log2(n)/n^2 bound, verdicts)",
       criterion_sign_continuity},
      {2, "blocked divergence example (counts, (M+1+log2 beta)/l bound, verdicts)",
       criterion_divergence},
      {3, "maximizing example (rejection at 256, delta = 1, windowed acceptance, d = 1)",
       criterion_maximizing},
      {4, "compactness example (0/2 slab table to 10^4, density exactly 1/n, 1/n witness fails)",
       criterion_compactness},
      {5, "geometry oracle equivalence on 100 seeded clouds (exact, translation, scaling)",
       criterion_geometry_oracle},
      {6, "chebyshev centers (interval within 1e-6, 20 clouds vs grid oracle + 1e-3)",
       criterion_chebyshev},
      {7, "implication batteries (z1, maximizing, partial-compactness; 50 instances each)",
       criterion_batteries},
      {8, "gauge soundness (100 divergence instances, ratio sign instance reported)",
       criterion_gauge},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string reason;
    try {
      reason = c.run();
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    if (reason.empty()) {
      std::cout << "[PASS] criterion " << c.number << ": " << c.title << "\n";
    } else {
      std::cout << "[FAIL] criterion " << c.number << ": " << c.title << " -- " << reason << "\n";
      ++failures;
    }
  }
  if (failures == 0) {
    std::cout << "acceptance: all " << criteria.size() << " criteria passed\n";
  } else {
    std::cout << "acceptance: " << failures << " of " << criteria.size() << " criteria FAILED\n";
  }
  return failures == 0 ? 0 : 1;
}
