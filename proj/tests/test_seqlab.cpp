#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "remotal/errors.hpp"
#include "remotal/seqlab.hpp"
#include "test_util.hpp"

using namespace remotal;
using testutil::pt;

TEST_CASE("stock sequences produce the documented terms") {
  LabSequence probe = sign_probe_sequence(0.5);
  CHECK(probe.term(1) == 0.0);  // 1 is not a power of two here
  CHECK(probe.term(2) == -0.75);
  CHECK(probe.term(3) == 0.0);
  CHECK(probe.term(4) == -0.9375);

  LabSequence blocked = blocked_divergent_sequence();
  CHECK(blocked.term(1) == 1.0);
  CHECK(blocked.term(2) == 0.0);
  CHECK(blocked.term(3) == 3.0);
  CHECK(blocked.term(1024) == 0.0);

  LabSequence mixed = mixed_maximizing_sequence(0.5);
  CHECK(mixed.term(1) == 0.5);
  CHECK(mixed.term(2) == 0.0);
  CHECK(mixed.term(3) == 0.875);

  LabSequence flag = square_flag_sequence();
  CHECK(flag.term(1) == 1.0);
  CHECK(flag.term(2) == 0.0);
  CHECK(flag.term(4) == 1.0);
  CHECK(flag.term(9) == 1.0);

  CHECK_THROWS_AS(sign_probe_sequence(1.0), InvalidInputError);
  CHECK_THROWS_AS(mixed_maximizing_sequence(0.0), InvalidInputError);
}

TEST_CASE("table sequences guard their index range") {
  LabSequence t = table_sequence({10.0, 20.0, 30.0});
  CHECK(t.term(1) == 10.0);
  CHECK(t.term(3) == 30.0);
  CHECK_THROWS_AS(t.term(4), InvalidInputError);
  CHECK_THROWS_AS(t.term(0), InvalidInputError);
}

TEST_CASE("sign probe converges to 0 in window density but not classically") {
  LabSequence probe = sign_probe_sequence(0.5);
  ClassificationResult res = ab_stat_converges(probe, 0.0, 0.5, poly_window(1.0, 2.0), 200);
  CHECK(res.verdict.outcome == Convergence::kConvergesToZero);
  // The deviation set is exactly the powers of two (every term there is at
  // least 0.5 away from 0).
  for (const DensityEntry& e : res.trace.values) {
    CHECK(e.count == oracle::count_in(1, e.n * e.n, oracle::is_pow2));
  }
  // Classically the sequence keeps visiting -1 + c^k, so it has no limit; a
  // plain trend-window check at the same eps refuses to call it convergent.
  MaximizingCheck plain = is_maximizing(embed_1d(probe), pt({0.0}),
                                        BoundedSet::cloud({pt({0.0})}), l2_space(1), 0.5, 600);
  CHECK_FALSE(plain.maximizing);  // delta = 0 but the probe dips to ~ -1 at 512
  CHECK(plain.first_violation == 512);
}

TEST_CASE("constant sequences converge with identically zero deviation densities") {
  ClassificationResult res =
      ab_stat_converges(constant_sequence(0.7), 0.7, 0.1, classical_window(), 50);
  CHECK(res.verdict.outcome == Convergence::kConvergesToZero);
  for (const DensityEntry& e : res.trace.values) CHECK(e.density == 0.0);
}

TEST_CASE("the alternating sequence has no window-density limit at 1") {
  ClassificationResult res =
      ab_stat_converges(alternating_sequence(), 1.0, 0.5, classical_window(), 200);
  CHECK(res.verdict.outcome == Convergence::kDoesNotConverge);
  // Odd indices deviate: density is about one half on every window.
  CHECK(res.verdict.min_tail_density > 0.45);
  // With a threshold wider than the oscillation the deviation set empties out.
  ClassificationResult wide =
      ab_stat_converges(alternating_sequence(), 1.0, 2.5, classical_window(), 200);
  CHECK(wide.verdict.outcome == Convergence::kConvergesToZero);
}

TEST_CASE("convergence checker validates its inputs") {
  CHECK_THROWS_AS(ab_stat_converges(harmonic_sequence(), 0.0, 0.0, classical_window(), 50),
                  InvalidInputError);
  CHECK_THROWS_AS(
      ab_stat_converges(harmonic_sequence(), std::nan(""), 0.1, classical_window(), 50),
      InvalidInputError);
  LabSequence bad{[](Index k) { return k == 5 ? std::nan("") : 0.0; }, "bad"};
  try {
    ab_stat_converges(bad, 0.0, 0.1, classical_window(), 50);
    FAIL("expected InvalidInputError");
  } catch (const InvalidInputError& e) {
    CHECK(std::string(e.what()).find("5") != std::string::npos);
  }
}

TEST_CASE("ramp diverges past every bound on the grid") {
  VerdictParams vparams;
  vparams.tolerance = 0.05;
  DivergenceResult res =
      ab_stat_diverges_to_inf(ramp_sequence(), {1.0, 5.0, 20.0}, classical_window(), 800, vparams);
  CHECK(res.diverges);
  REQUIRE(res.per_bound.size() == 3);
  for (const auto& pb : res.per_bound) {
    CHECK(pb.verdict.outcome == Convergence::kConvergesToZero);
    // Sub-level counts are exactly min(n, M-1) members below M.
    for (const DensityEntry& e : pb.trace.values) {
      Index expected = std::min<Index>(e.n, static_cast<Index>(pb.bound) - 1);
      CHECK(e.count == expected);
    }
  }
}

TEST_CASE("zeroing out a sparse index set does not stop window divergence") {
  // x_k = 0 at powers of two, k otherwise: the sequence crashes back to 0
  // infinitely often yet each sliding block [n^3, n^3+n^2] catches at most a
  // couple of those crashes.
  DivergenceResult res = ab_stat_diverges_to_inf(blocked_divergent_sequence(), {1.0, 10.0},
                                                 power_block_window(3.0, 2.0), 40);
  CHECK(res.diverges);
  for (const auto& pb : res.per_bound) {
    for (const DensityEntry& e : pb.trace.values) {
      Index lo = e.n * e.n * e.n;
      Index hi = lo + e.n * e.n;
      Index expected = oracle::count_in(lo, hi, [&](Index k) {
        double x = oracle::is_pow2(k) ? 0.0 : static_cast<double>(k);
        return x < pb.bound;
      });
      CHECK(e.count == expected);
    }
  }
}

TEST_CASE("bounded sequences do not diverge") {
  DivergenceResult res =
      ab_stat_diverges_to_inf(harmonic_sequence(), {1.0}, classical_window(), 100);
  CHECK_FALSE(res.diverges);
  CHECK(res.per_bound[0].verdict.outcome == Convergence::kDoesNotConverge);
  CHECK_THROWS_AS(ab_stat_diverges_to_inf(ramp_sequence(), {}, classical_window(), 100),
                  InvalidInputError);
  CHECK_THROWS_AS(ab_stat_diverges_to_inf(ramp_sequence(), {-1.0}, classical_window(), 100),
                  InvalidInputError);
}

TEST_CASE("a monotone approach to the boundary is maximizing") {
  VectorSequence seq = embed_1d(LabSequence{
      [](Index k) { return 1.0 - 1.0 / static_cast<double>(k); }, "1-1/k"});
  BoundedSet set = BoundedSet::interval(-1.0, 1.0);
  MaximizingCheck check = is_maximizing(seq, pt({0.0}), set, l2_space(1), 0.05, 100);
  CHECK(check.maximizing);
  CHECK(check.delta == 1.0);
  CHECK_FALSE(check.first_violation.has_value());
  CHECK(check.trend_window == 50);
}

TEST_CASE("a sequence that keeps dropping to the center is not plainly maximizing") {
  VectorSequence seq = embed_1d(mixed_maximizing_sequence(0.5));
  BoundedSet set = BoundedSet::interval(-1.0, 1.0);
  MaximizingCheck check = is_maximizing(seq, pt({0.0}), set, l2_space(1), 0.01, 500);
  CHECK_FALSE(check.maximizing);
  CHECK(check.delta == 1.0);
  REQUIRE(check.first_violation.has_value());
  CHECK(*check.first_violation == 256);  // first power of two in the trend half
}

TEST_CASE("the same dropping sequence is window-density maximizing") {
  VectorSequence seq = embed_1d(mixed_maximizing_sequence(0.5));
  BoundedSet set = BoundedSet::interval(-1.0, 1.0);
  ClassificationResult res =
      is_ab_stat_maximizing(seq, pt({0.0}), set, l2_space(1), 0.5, poly_window(1.0, 2.0), 200);
  CHECK(res.verdict.outcome == Convergence::kConvergesToZero);
  // Deviators are index 1 (distance 0.5 from the farthest distance 1) plus
  // the powers of two (distance 0 there).
  CHECK(res.trace.values[9].count == 7);  // n=10: {1, 2, 4, 8, 16, 32, 64}
  for (const DensityEntry& e : res.trace.values) {
    Index expected = 1 + oracle::count_in(1, e.n * e.n, oracle::is_pow2);
    CHECK(e.count == expected);
  }
}

TEST_CASE("a sequence pinned at the center is not maximizing in any sense") {
  VectorSequence seq = embed_1d(constant_sequence(0.0));
  BoundedSet set = BoundedSet::interval(-1.0, 1.0);
  CHECK_FALSE(is_maximizing(seq, pt({0.0}), set, l2_space(1), 0.5, 100).maximizing);
  ClassificationResult res =
      is_ab_stat_maximizing(seq, pt({0.0}), set, l2_space(1), 0.5, classical_window(), 100);
  CHECK(res.verdict.outcome == Convergence::kDoesNotConverge);
}

TEST_CASE("sign continuity transfers along the canonical witness") {
  ContinuityResult res = partial_ab_stat_continuity(
      [](double t) { return sign_step(t); }, 0.0, sign_probe_sequence(0.5), poly_window(1.0, 2.0),
      0.5, 200);
  CHECK(res.preimage.verdict.outcome == Convergence::kConvergesToZero);
  CHECK(res.image.verdict.outcome == Convergence::kConvergesToZero);
  CHECK(res.continuous_for_witness);
  CHECK(res.distinct_from_final == 7);  // probe is nonzero exactly at 2,4,...,128
  // Preimage and image deviate at exactly the same indices for this witness.
  for (std::size_t i = 0; i < res.preimage.trace.values.size(); ++i) {
    CHECK(res.preimage.trace.values[i].count == res.image.trace.values[i].count);
  }
}

TEST_CASE("a one-sided probe exposes the sign discontinuity") {
  ContinuityResult res = partial_ab_stat_continuity(
      [](double t) { return sign_step(t); }, 0.0, harmonic_sequence(), poly_window(1.0, 2.0), 0.5,
      200);
  CHECK(res.preimage.verdict.outcome == Convergence::kConvergesToZero);
  CHECK(res.image.verdict.outcome == Convergence::kDoesNotConverge);
  CHECK_FALSE(res.continuous_for_witness);
}

TEST_CASE("affine maps transfer convergence along any witness") {
  ContinuityResult res = partial_ab_stat_continuity(
      [](double t) { return 2.0 * t + 1.0; }, 0.0, sign_probe_sequence(0.5), poly_window(1.0, 2.0),
      0.5, 200);
  CHECK(res.continuous_for_witness);
  CHECK(res.image.verdict.outcome == Convergence::kConvergesToZero);
}

TEST_CASE("a non-converging witness makes the implication vacuously true") {
  ContinuityResult res = partial_ab_stat_continuity(
      [](double t) { return sign_step(t); }, 0.0, alternating_sequence(), classical_window(), 0.5,
      200);
  CHECK(res.preimage.verdict.outcome == Convergence::kDoesNotConverge);
  CHECK(res.continuous_for_witness);
}

TEST_CASE("eventually constant probes are rejected as witnesses") {
  CHECK_THROWS_AS(partial_ab_stat_continuity([](double t) { return t; }, 0.3,
                                             constant_sequence(0.3), classical_window(), 0.1, 100),
                  InvalidWitnessError);
  // Two early blips are still below the distinctness floor.
  LabSequence blips{[](Index k) { return k <= 2 ? 1.0 : 0.0; }, "blips"};
  CHECK_THROWS_AS(partial_ab_stat_continuity([](double t) { return t; }, 0.0, blips,
                                             classical_window(), 0.1, 100),
                  InvalidWitnessError);
}

TEST_CASE("affine reparametrization preserves deviation sets and verdicts") {
  LabSequence base = mixed_maximizing_sequence(0.5);
  LabSequence scaled = map_sequence(base, [](double t) { return 2.0 * t - 3.0; }, "2x-3");
  ClassificationResult a = ab_stat_converges(base, 1.0, 0.5, poly_window(1.0, 2.0), 120);
  ClassificationResult b = ab_stat_converges(scaled, -1.0, 1.0, poly_window(1.0, 2.0), 120);
  CHECK(a.verdict.outcome == b.verdict.outcome);
  REQUIRE(a.trace.values.size() == b.trace.values.size());
  for (std::size_t i = 0; i < a.trace.values.size(); ++i) {
    CHECK(a.trace.values[i].count == b.trace.values[i].count);
  }
}
