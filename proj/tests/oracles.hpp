#pragma once

// Brute-force reference implementations used to cross-check the library.
// Everything here is written as plain loops with no shared code with
// src/, so an agreement between the two is meaningful evidence.

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Index = std::int64_t;
using Point = Eigen::VectorXd;

// k = 2^m with m >= 1 (so 1 is not counted).
inline bool is_pow2(Index k) {
  if (k < 2) return false;
  while (k % 2 == 0) k /= 2;
  return k == 1;
}

inline bool is_square(Index k) {
  if (k < 1) return false;
  for (Index i = 1; i * i <= k; ++i) {
    if (i * i == k) return true;
  }
  return false;
}

// floor(log2(k)) for k >= 1, by doubling.
inline Index floor_log2(Index k) {
  Index m = 0;
  Index v = 1;
  while (v * 2 <= k) {
    v *= 2;
    ++m;
  }
  return m;
}

template <typename Pred>
inline Index count_in(Index lo, Index hi, Pred pred) {
  Index c = 0;
  for (Index k = lo; k <= hi; ++k) {
    if (pred(k)) ++c;
  }
  return c;
}

// l_p norm accumulated coordinate by coordinate, in index order. This matches
// the accumulation order the library promises, so for p in {1, 2, inf} the
// comparison can be exact.
inline double lp_norm(const Point& v, double p) {
  const auto d = v.size();
  if (std::isinf(p)) {
    double m = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) {
      double a = std::fabs(v[i]);
      if (a > m) m = a;
    }
    return m;
  }
  if (p == 1.0) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) s += std::fabs(v[i]);
    return s;
  }
  if (p == 2.0) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) s += v[i] * v[i];
    return std::sqrt(s);
  }
  double s = 0.0;
  for (Eigen::Index i = 0; i < d; ++i) s += std::pow(std::fabs(v[i]), p);
  return std::pow(s, 1.0 / p);
}

inline double lp_dist(const Point& a, const Point& b, double p) { return lp_norm(a - b, p); }

inline double farthest(const Point& x, const std::vector<Point>& pts, double p) {
  double best = -std::numeric_limits<double>::infinity();
  for (const Point& e : pts) {
    double d = lp_dist(x, e, p);
    if (d > best) best = d;
  }
  return best;
}

// Indices of the points attaining the farthest distance exactly (bitwise).
inline std::vector<std::size_t> argmax_indices(const Point& x, const std::vector<Point>& pts,
                                               double p) {
  double best = farthest(x, pts, p);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (lp_dist(x, pts[i], p) == best) out.push_back(i);
  }
  return out;
}

inline double diam(const std::vector<Point>& pts, double p) {
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      double d = lp_dist(pts[i], pts[j], p);
      if (d > best) best = d;
    }
  }
  return best;
}

// Minimax-center radius by exhaustive grid search over [lo, hi] (componentwise
// bounds), resolution points per axis. 2-D only; used as an upper-bound
// certificate for the optimizer.
inline double chebyshev_radius_grid_2d(const std::vector<Point>& pts, double p, const Point& lo,
                                       const Point& hi, int resolution) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < resolution; ++j) {
      Point g(2);
      g[0] = lo[0] + (hi[0] - lo[0]) * static_cast<double>(i) / (resolution - 1);
      g[1] = lo[1] + (hi[1] - lo[1]) * static_cast<double>(j) / (resolution - 1);
      double r = farthest(g, pts, p);
      if (r < best) best = r;
    }
  }
  return best;
}

}  // namespace oracle
