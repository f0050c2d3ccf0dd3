#include "remotal/windows.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "remotal/errors.hpp"
#include "remotal/report.hpp"

namespace remotal {

namespace {

// Exact integer powers stay exact; fractional exponents fall back to pow.
double ipow(double base, double exponent) {
  if (exponent >= 0.0 && exponent <= 62.0 && exponent == std::floor(exponent)) {
    double r = 1.0;
    for (int i = 0; i < static_cast<int>(exponent); ++i) r *= base;
    return r;
  }
  return std::pow(base, exponent);
}

void require_finite(double v, const char* which, Index n) {
  if (!std::isfinite(v)) {
    throw InvalidInputError(std::string("window edge ") + which + "_n is not finite at index n=" +
                            std::to_string(n));
  }
}

}  // namespace

WindowPair classical_window() {
  return {[](Index) { return 1.0; }, [](Index n) { return static_cast<double>(n); },
          "alpha=1,beta=n"};
}

WindowPair poly_window(double a, double b_exp) {
  std::string label = "alpha=" + format_double(a) + ",beta=n^" + format_double(b_exp);
  return {[a](Index) { return a; },
          [b_exp](Index n) { return ipow(static_cast<double>(n), b_exp); }, std::move(label)};
}

WindowPair power_block_window(double q, double r) {
  std::string label = "alpha=n^" + format_double(q) + ",beta=n^" + format_double(q) + "+n^" +
                      format_double(r);
  return {[q](Index n) { return ipow(static_cast<double>(n), q); },
          [q, r](Index n) {
            double nn = static_cast<double>(n);
            return ipow(nn, q) + ipow(nn, r);
          },
          std::move(label)};
}

bool is_power_of_two(Index k) { return k >= 2 && (k & (k - 1)) == 0; }

bool is_perfect_square(Index k) {
  if (k < 1) return false;
  Index root = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(k))));
  for (Index r = std::max<Index>(0, root - 1); r <= root + 1; ++r) {
    if (r * r == k) return true;
  }
  return false;
}

IndexPredicate always_true_predicate() {
  return {[](Index) { return true; },
          [](Index lo, Index hi) { return hi >= lo ? hi - lo + 1 : 0; }, "all"};
}

IndexPredicate always_false_predicate() {
  return {[](Index) { return false; }, [](Index, Index) { return Index{0}; }, "none"};
}

IndexPredicate power_of_two_predicate() {
  auto count = [](Index lo, Index hi) {
    Index c = 0;
    for (Index p = 2; p <= hi; p <<= 1) {
      if (p >= lo) ++c;
      if (p > (std::numeric_limits<Index>::max() >> 1)) break;
    }
    return c;
  };
  return {[](Index k) { return is_power_of_two(k); }, count, "powers_of_two"};
}

IndexPredicate perfect_square_predicate() {
  auto count = [](Index lo, Index hi) {
    if (hi < lo || hi < 1) return Index{0};
    lo = std::max<Index>(lo, 1);
    auto isqrt_floor = [](Index v) {
      Index r = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(v))));
      while (r * r > v) --r;
      while ((r + 1) * (r + 1) <= v) ++r;
      return r;
    };
    Index hi_root = isqrt_floor(hi);
    Index lo_root = isqrt_floor(lo - 1);  // squares strictly below lo
    return hi_root - lo_root;
  };
  return {[](Index k) { return is_perfect_square(k); }, count, "perfect_squares"};
}

IntegerWindow integer_window(double lo, double hi) {
  double k_lo = std::max(1.0, std::ceil(lo));
  double k_hi = std::floor(hi);
  constexpr double kMaxIndex = 9.0e18;
  if (k_lo > kMaxIndex || k_hi > kMaxIndex) {
    throw InvalidInputError("window edge exceeds the integer index range");
  }
  return {static_cast<Index>(k_lo), static_cast<Index>(k_hi)};
}

WindowValidation validate_window_pair(const WindowPair& pair, Index horizon,
                                      const WindowValidationParams& params) {
  if (horizon < 2) throw InvalidInputError("validate_window_pair requires horizon >= 2");
  WindowValidation report;
  report.p1_ok = report.p2_ok = true;

  std::vector<double> lengths(static_cast<std::size_t>(horizon));
  double prev_alpha = 0.0;
  double prev_beta = 0.0;
  for (Index n = 1; n <= horizon; ++n) {
    double a = pair.alpha(n);
    double b = pair.beta(n);
    require_finite(a, "alpha", n);
    require_finite(b, "beta", n);
    if (n > 1 && report.p1_ok && (a < prev_alpha || b < prev_beta)) {
      report.p1_ok = false;
      report.p1_first_violation = n;
    }
    if (report.p2_ok && b < a) {
      report.p2_ok = false;
      report.p2_first_violation = n;
    }
    lengths[static_cast<std::size_t>(n - 1)] = b - a;
    prev_alpha = a;
    prev_beta = b;
  }

  report.final_length = lengths.back();
  Index trend = params.trend_window.value_or(std::max<Index>(2, horizon / 4));
  trend = std::clamp<Index>(trend, 2, horizon);
  report.p3_ok = true;
  if (report.final_length < params.growth_floor) {
    report.p3_ok = false;
    report.p3_first_violation = horizon;
  }
  for (Index n = horizon - trend + 2; report.p3_ok && n <= horizon; ++n) {
    if (lengths[static_cast<std::size_t>(n - 1)] < lengths[static_cast<std::size_t>(n - 2)]) {
      report.p3_ok = false;
      report.p3_first_violation = n;
    }
  }
  return report;
}

namespace {

Index enumerate_count(const IndexPredicate& pred, IntegerWindow iw) {
  Index c = 0;
  for (Index k = iw.k_lo; k <= iw.k_hi; ++k) {
    if (pred.member(k)) ++c;
  }
  return c;
}

}  // namespace

Index window_count(const IndexPredicate& pred, const WindowPair& pair, Index n,
                   const TraceParams& params) {
  if (n < 1) throw InvalidInputError("window_count requires n >= 1");
  double a = pair.alpha(n);
  double b = pair.beta(n);
  require_finite(a, "alpha", n);
  require_finite(b, "beta", n);
  IntegerWindow iw = integer_window(a, b);
  if (iw.size() == 0) return 0;

  bool enumerable = iw.size() <= params.enumeration_cap;
  if (pred.count) {
    Index certified = pred.count(iw.k_lo, iw.k_hi);
    if (enumerable) {
      Index brute = enumerate_count(pred, iw);
      if (brute != certified) {
        throw CertificateMismatchError(
            "closed-form count " + std::to_string(certified) + " != enumeration " +
            std::to_string(brute) + " on window [" + std::to_string(iw.k_lo) + "," +
            std::to_string(iw.k_hi) + "] at n=" + std::to_string(n));
      }
    }
    return certified;
  }
  if (!enumerable) {
    throw HorizonExceededError("window at n=" + std::to_string(n) + " holds " +
                               std::to_string(iw.size()) + " integers, above the enumeration cap " +
                               std::to_string(params.enumeration_cap));
  }
  return enumerate_count(pred, iw);
}

DensityTrace density_trace(const IndexPredicate& pred, const WindowPair& pair, Index horizon,
                           const TraceParams& params) {
  WindowValidation validation = validate_window_pair(pair, horizon);
  if (!validation.ok()) {
    throw InvalidInputError("window pair '" + pair.label +
                            "' fails P1/P2/P3 validation at horizon " + std::to_string(horizon));
  }

  DensityTrace trace;
  trace.window_label = pair.label;
  trace.predicate_label = pred.label;
  trace.horizon = horizon;
  trace.values.reserve(static_cast<std::size_t>(horizon));

  Index budget = params.enumeration_cap;
  for (Index n = 1; n <= horizon; ++n) {
    double a = pair.alpha(n);
    double b = pair.beta(n);
    IntegerWindow iw = integer_window(a, b);
    Index count = 0;
    if (iw.size() > 0) {
      if (pred.count) {
        count = pred.count(iw.k_lo, iw.k_hi);
      } else {
        if (iw.size() > budget) {
          throw HorizonExceededError(
              "density trace exceeds the enumeration cap " + std::to_string(params.enumeration_cap) +
              " at n=" + std::to_string(n));
        }
        budget -= iw.size();
        count = enumerate_count(pred, iw);
      }
    }
    double denom = b - a + 1.0;
    trace.values.push_back({n, a, b, count, static_cast<double>(count) / denom});
  }
  return trace;
}

void write_csv(const DensityTrace& trace, std::ostream& out) {
  out << "n,alpha,beta,count,density\n";
  for (const auto& e : trace.values) {
    out << e.n << ',' << format_double(e.alpha) << ',' << format_double(e.beta) << ',' << e.count
        << ',' << format_double(e.density) << '\n';
  }
}

const char* to_string(Convergence c) {
  switch (c) {
    case Convergence::kConvergesToZero:
      return "ConvergesToZero";
    case Convergence::kDoesNotConverge:
      return "DoesNotConverge";
    case Convergence::kInconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

Verdict verdict_converges_to_zero(const DensityTrace& trace, const VerdictParams& params) {
  if (trace.values.empty()) throw InvalidInputError("verdict requested on an empty trace");
  if (!(params.tolerance > 0.0)) throw InvalidInputError("verdict tolerance must be positive");

  const Index size = static_cast<Index>(trace.values.size());
  Index trend = params.trend_window.value_or(std::max<Index>(1, size / 4));
  if (trend < 1 || trend > size) {
    throw InvalidInputError("trend window " + std::to_string(trend) +
                            " is outside [1, horizon=" + std::to_string(size) + "]");
  }

  const auto tail_begin = trace.values.end() - static_cast<std::ptrdiff_t>(trend);
  double max_tail = 0.0;
  double min_tail = std::numeric_limits<double>::infinity();
  for (auto it = tail_begin; it != trace.values.end(); ++it) {
    max_tail = std::max(max_tail, it->density);
    min_tail = std::min(min_tail, it->density);
  }

  // Halves of the tail; a single-entry tail is its own first and second half.
  Index half = std::max<Index>(1, trend / 2);
  auto second_begin = trace.values.end() - static_cast<std::ptrdiff_t>(half);
  auto first_end = (trend == 1) ? trace.values.end() : second_begin;
  double max_first = 0.0, min_first = std::numeric_limits<double>::infinity();
  for (auto it = tail_begin; it != first_end; ++it) {
    max_first = std::max(max_first, it->density);
    min_first = std::min(min_first, it->density);
  }
  double max_second = 0.0, min_second = std::numeric_limits<double>::infinity();
  for (auto it = second_begin; it != trace.values.end(); ++it) {
    max_second = std::max(max_second, it->density);
    min_second = std::min(min_second, it->density);
  }

  Verdict v;
  v.final_density = trace.values.back().density;
  v.max_tail_density = max_tail;
  v.min_tail_density = min_tail;
  v.horizon = trace.horizon;
  v.trend_window = trend;
  v.tolerance = params.tolerance;

  if (max_tail < params.tolerance && max_second <= max_first) {
    v.outcome = Convergence::kConvergesToZero;
  } else if (min_tail >= params.tolerance && min_second >= params.stall_ratio * min_first) {
    v.outcome = Convergence::kDoesNotConverge;
  } else {
    v.outcome = Convergence::kInconclusive;
  }
  return v;
}

}  // namespace remotal
