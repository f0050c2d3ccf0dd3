#ifndef REMOTAL_WINDOWS_HPP
#define REMOTAL_WINDOWS_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace remotal {

using Index = std::int64_t;

/// A pair of window-edge sequences n -> (alpha_n, beta_n) of positive reals.
/// A valid pair has both edges non-decreasing (P1), beta_n >= alpha_n (P2)
/// and window lengths growing without bound (P3, checked through a finite
/// proxy, see validate_window_pair).
struct WindowPair {
  std::function<double(Index)> alpha;
  std::function<double(Index)> beta;
  std::string label;
};

/// alpha_n = 1, beta_n = n. Window densities under this pair reduce to the
/// classical prefix (natural) densities.
WindowPair classical_window();

/// alpha_n = a, beta_n = n^b_exp.
WindowPair poly_window(double a, double b_exp);

/// alpha_n = n^q, beta_n = n^q + n^r. A sliding block window; with q=3, r=2
/// the block length n^r + 1 dominates log(beta_n).
WindowPair power_block_window(double q = 3.0, double r = 2.0);

/// Membership test over positive integers, with an optional closed-form
/// count certificate. When `count` is set it must return the exact number of
/// members in [k_lo, k_hi]; it lets traces skip enumeration (and the
/// enumeration cap).
struct IndexPredicate {
  std::function<bool(Index)> member;
  std::function<Index(Index k_lo, Index k_hi)> count;
  std::string label;
};

IndexPredicate always_true_predicate();
IndexPredicate always_false_predicate();
/// k = 2^m for some m >= 1 (so k = 1 is not a member). Carries a certificate.
IndexPredicate power_of_two_predicate();
/// k = m^2 for some m >= 1. Carries a certificate.
IndexPredicate perfect_square_predicate();

bool is_power_of_two(Index k);
bool is_perfect_square(Index k);

/// Resource limits for trace enumeration.
struct TraceParams {
  /// Total integer window elements a single trace may enumerate.
  /// Certificate-mode counting bypasses the cap.
  Index enumeration_cap = 10'000'000;
};

struct WindowValidationParams {
  /// P3 proxy: beta_N - alpha_N at the horizon must reach this floor.
  double growth_floor = 10.0;
  /// Window lengths must be non-decreasing over this many final indices.
  /// Defaults to max(2, horizon/4).
  std::optional<Index> trend_window;
};

/// Per-condition outcome of checking P1-P3 on the prefix n <= horizon.
struct WindowValidation {
  bool p1_ok = false;
  bool p2_ok = false;
  bool p3_ok = false;
  std::optional<Index> p1_first_violation;
  std::optional<Index> p2_first_violation;
  std::optional<Index> p3_first_violation;
  double final_length = 0.0;  // beta_N - alpha_N at the horizon

  bool ok() const { return p1_ok && p2_ok && p3_ok; }
};

/// Checks P1/P2 at every n <= horizon and P3 through the finite proxy
/// (length floor at the horizon plus non-decreasing lengths over the final
/// trend window). Throws InvalidInputError on a non-finite edge, naming the
/// index.
WindowValidation validate_window_pair(const WindowPair& pair, Index horizon,
                                      const WindowValidationParams& params = {});

/// Exact number of integers k with alpha_n <= k <= beta_n and pred(k).
/// Uses the certificate when present; otherwise enumerates, throwing
/// HorizonExceededError if the window holds more than params.enumeration_cap
/// integers. When both routes are feasible they are cross-checked.
Index window_count(const IndexPredicate& pred, const WindowPair& pair, Index n,
                   const TraceParams& params = {});

struct DensityEntry {
  Index n;
  double alpha;
  double beta;
  Index count;
  double density;  // count / (beta - alpha + 1)
};

/// Window densities of a predicate's member set for every n <= horizon.
struct DensityTrace {
  std::string window_label;
  std::string predicate_label;
  Index horizon = 0;
  std::vector<DensityEntry> values;
};

/// Builds the per-n density trace of pred under the pair. The pair is
/// validated at the horizon first. The enumeration cap applies to the total
/// element count across all windows of the trace.
DensityTrace density_trace(const IndexPredicate& pred, const WindowPair& pair,
                           Index horizon, const TraceParams& params = {});

/// Writes `n,alpha,beta,count,density` rows ('.' decimal separator,
/// shortest round-trip doubles).
void write_csv(const DensityTrace& trace, std::ostream& out);

enum class Convergence {
  kConvergesToZero,
  kDoesNotConverge,
  kInconclusive,
};

const char* to_string(Convergence c);

/// Decision rule parameters for the finite-horizon limit proxy.
struct VerdictParams {
  double tolerance = 1e-2;
  /// Number of final trace entries inspected; defaults to max(1, horizon/4).
  std::optional<Index> trend_window;
  /// A tail whose second-half minimum stays above stall_ratio times its
  /// first-half minimum counts as stalled (not decaying).
  double stall_ratio = 0.9;
};

/// Three-valued verdict with the evidence the rule looked at.
struct Verdict {
  Convergence outcome = Convergence::kInconclusive;
  double final_density = 0.0;
  double max_tail_density = 0.0;
  double min_tail_density = 0.0;
  Index horizon = 0;
  Index trend_window = 0;
  double tolerance = 0.0;
};

/// Finite-horizon stand-in for "density -> 0". Over the final trend window:
///   - ConvergesToZero: every density < tolerance and the second-half maximum
///     does not exceed the first-half maximum (no upward trend);
///   - DoesNotConverge: every density >= tolerance and the window minimum is
///     stalled (second-half min >= stall_ratio * first-half min);
///   - Inconclusive otherwise.
/// Throws InvalidInputError on an empty trace.
Verdict verdict_converges_to_zero(const DensityTrace& trace,
                                  const VerdictParams& params = {});

/// Integer endpoints of the integer slice of [lo, hi] intersected with
/// {1, 2, ...}; empty when k_hi < k_lo.
struct IntegerWindow {
  Index k_lo;
  Index k_hi;
  Index size() const { return k_hi >= k_lo ? k_hi - k_lo + 1 : 0; }
};
IntegerWindow integer_window(double lo, double hi);

}  // namespace remotal

#endif  // REMOTAL_WINDOWS_HPP
