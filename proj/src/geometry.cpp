#include "remotal/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "remotal/errors.hpp"

namespace remotal {

namespace {

constexpr int kBoxVertexDimCap = 25;
constexpr int kChebyshevDimCap = 6;

void require_dim(const NormedSpace& space, const Point& v, const char* what) {
  if (v.size() != space.dim) {
    throw InvalidInputError(std::string(what) + ": point dimension " + std::to_string(v.size()) +
                            " != space dimension " + std::to_string(space.dim));
  }
}

void require_finite_point(const Point& v, const char* what) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i])) {
      throw InvalidInputError(std::string(what) + ": non-finite coordinate at position " +
                              std::to_string(i));
    }
  }
}

}  // namespace

NormedSpace l1_space(int dim) { return {dim, 1.0}; }
NormedSpace l2_space(int dim) { return {dim, 2.0}; }
NormedSpace linf_space(int dim) { return {dim, std::numeric_limits<double>::infinity()}; }

double norm(const NormedSpace& space, const Point& v) {
  require_dim(space, v, "norm");
  if (!(space.p >= 1.0)) throw InvalidInputError("norm exponent p must satisfy p >= 1");
  const Eigen::Index d = v.size();
  if (std::isinf(space.p)) {
    double m = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) m = std::max(m, std::abs(v[i]));
    return m;
  }
  if (space.p == 1.0) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) s += std::abs(v[i]);
    return s;
  }
  if (space.p == 2.0) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) s += v[i] * v[i];
    return std::sqrt(s);
  }
  double s = 0.0;
  for (Eigen::Index i = 0; i < d; ++i) s += std::pow(std::abs(v[i]), space.p);
  return std::pow(s, 1.0 / space.p);
}

double distance(const NormedSpace& space, const Point& a, const Point& b) {
  return norm(space, a - b);
}

BoundedSet BoundedSet::cloud(std::vector<Point> points) {
  if (!points.empty()) {
    const Eigen::Index d = points.front().size();
    if (d < 1) throw InvalidInputError("cloud points must have dimension >= 1");
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (points[i].size() != d) {
        throw InvalidInputError("cloud point " + std::to_string(i) + " has mismatched dimension");
      }
      require_finite_point(points[i], "cloud point");
    }
  }
  return BoundedSet(PointCloud{std::move(points)});
}

BoundedSet BoundedSet::box(Point lo, Point hi) {
  if (lo.size() != hi.size() || lo.size() < 1) {
    throw InvalidInputError("box corners must share a dimension >= 1");
  }
  require_finite_point(lo, "box lo");
  require_finite_point(hi, "box hi");
  for (Eigen::Index i = 0; i < lo.size(); ++i) {
    if (lo[i] > hi[i]) {
      throw InvalidInputError("box has lo > hi at coordinate " + std::to_string(i));
    }
  }
  return BoundedSet(AxisBox{std::move(lo), std::move(hi)});
}

BoundedSet BoundedSet::interval(double lo, double hi) {
  Point l(1), h(1);
  l[0] = lo;
  h[0] = hi;
  return box(std::move(l), std::move(h));
}

int BoundedSet::dim() const {
  if (is_box()) return static_cast<int>(as_box().lo.size());
  const auto& pts = as_cloud().points;
  return pts.empty() ? 0 : static_cast<int>(pts.front().size());
}

bool BoundedSet::empty() const { return !is_box() && as_cloud().points.empty(); }

std::int64_t BoundedSet::candidate_count() const {
  if (is_box()) return std::int64_t{1} << dim();
  return static_cast<std::int64_t>(as_cloud().points.size());
}

namespace {

// Invokes fn on every vertex of the box, reusing one scratch vector.
template <typename Fn>
void for_each_vertex(const AxisBox& box, Fn&& fn) {
  const int d = static_cast<int>(box.lo.size());
  if (d > kBoxVertexDimCap) {
    throw DimensionCapError("box vertex enumeration refused for dimension " + std::to_string(d) +
                            " > " + std::to_string(kBoxVertexDimCap));
  }
  Point v(d);
  const std::int64_t total = std::int64_t{1} << d;
  for (std::int64_t mask = 0; mask < total; ++mask) {
    for (int i = 0; i < d; ++i) {
      v[i] = ((mask >> i) & 1) ? box.hi[i] : box.lo[i];
    }
    fn(v);
  }
}

}  // namespace

std::vector<Point> candidate_points(const BoundedSet& set) {
  if (set.is_box()) {
    std::vector<Point> vertices;
    vertices.reserve(static_cast<std::size_t>(set.candidate_count()));
    for_each_vertex(set.as_box(), [&](const Point& v) { vertices.push_back(v); });
    return vertices;
  }
  return set.as_cloud().points;
}

double farthest_distance(const Point& x, const BoundedSet& set, const NormedSpace& space) {
  if (set.empty()) throw InvalidInputError("farthest_distance of an empty set");
  require_dim(space, x, "farthest_distance");
  double best = -1.0;
  if (set.is_box()) {
    for_each_vertex(set.as_box(), [&](const Point& v) { best = std::max(best, distance(space, x, v)); });
  } else {
    for (const Point& e : set.as_cloud().points) best = std::max(best, distance(space, x, e));
  }
  return best;
}

bool lex_less(const Point& a, const Point& b) {
  for (Eigen::Index i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return a.size() < b.size();
}

FarthestResult farthest_points(const Point& x, const BoundedSet& set, const NormedSpace& space,
                               const FarthestParams& params) {
  FarthestResult result;
  result.distance = farthest_distance(x, set, space);
  const double eps_far = params.eps_far.value_or(1e-9 * (1.0 + result.distance));
  if (eps_far < 0.0) throw InvalidInputError("eps_far must be non-negative");
  const double delta_unique = params.delta_unique.value_or(1e-6 * (1.0 + result.distance));

  auto consider = [&](const Point& e) {
    if (distance(space, x, e) >= result.distance - eps_far) result.attainers.push_back(e);
  };
  if (set.is_box()) {
    for_each_vertex(set.as_box(), consider);
  } else {
    for (const Point& e : set.as_cloud().points) consider(e);
  }
  std::sort(result.attainers.begin(), result.attainers.end(), lex_less);
  result.unique = diameter(result.attainers, space) <= delta_unique;
  return result;
}

double diameter(const std::vector<Point>& points, const NormedSpace& space) {
  double best = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      best = std::max(best, distance(space, points[i], points[j]));
    }
  }
  return best;
}

double diameter(const BoundedSet& set, const NormedSpace& space) {
  if (set.empty()) return 0.0;
  if (set.is_box()) {
    // The pairwise max over vertices is attained at the opposite corners.
    return distance(space, set.as_box().lo, set.as_box().hi);
  }
  return diameter(set.as_cloud().points, space);
}

AxisBox bounding_box(const BoundedSet& set) {
  if (set.empty()) throw InvalidInputError("bounding_box of an empty set");
  if (set.is_box()) return set.as_box();
  const auto& pts = set.as_cloud().points;
  Point lo = pts.front();
  Point hi = pts.front();
  for (const Point& p : pts) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  return {lo, hi};
}

bool contains_point(const BoundedSet& set, const Point& q, double tol) {
  if (set.empty()) return false;
  if (static_cast<int>(q.size()) != set.dim()) return false;
  if (set.is_box()) {
    const auto& b = set.as_box();
    for (Eigen::Index i = 0; i < q.size(); ++i) {
      if (q[i] < b.lo[i] - tol || q[i] > b.hi[i] + tol) return false;
    }
    return true;
  }
  for (const Point& p : set.as_cloud().points) {
    if ((q - p).cwiseAbs().maxCoeff() <= tol) return true;
  }
  return false;
}

namespace {

// Best grid point of the objective over [center - half, center + half].
struct GridBest {
  Point where;
  double value;
};

template <typename Objective>
GridBest grid_min(const Objective& objective, const Point& center, const Point& half,
                  int points_per_axis) {
  const int d = static_cast<int>(center.size());
  GridBest best{center, objective(center)};
  std::vector<int> idx(static_cast<std::size_t>(d), 0);
  Point candidate(d);
  const int g = points_per_axis;
  while (true) {
    for (int i = 0; i < d; ++i) {
      double frac = (g == 1) ? 0.5 : static_cast<double>(idx[static_cast<std::size_t>(i)]) / (g - 1);
      candidate[i] = center[i] - half[i] + 2.0 * half[i] * frac;
    }
    double value = objective(candidate);
    if (value < best.value) {
      best.value = value;
      best.where = candidate;
    }
    int axis = 0;
    while (axis < d && ++idx[static_cast<std::size_t>(axis)] == g) {
      idx[static_cast<std::size_t>(axis)] = 0;
      ++axis;
    }
    if (axis == d) break;
  }
  return best;
}

}  // namespace

ChebyshevResult chebyshev_center(const BoundedSet& set, const NormedSpace& space,
                                 int grid_resolution, int refine_iters) {
  if (set.empty()) throw InvalidInputError("chebyshev_center of an empty set");
  const int d = set.dim();
  if (d > kChebyshevDimCap) {
    throw DimensionCapError("chebyshev_center supports dimension <= " +
                            std::to_string(kChebyshevDimCap) + ", got " + std::to_string(d));
  }

  const double diam = diameter(set, space);
  auto objective = [&](const Point& c) { return farthest_distance(c, set, space); };

  AxisBox bb = bounding_box(set);
  if (diam == 0.0) {
    // Single distinct point.
    return {bb.lo, 0.0};
  }

  Point center = 0.5 * (bb.lo + bb.hi);
  Point half = 0.5 * (bb.hi - bb.lo) + Point::Constant(d, diam);

  // Per-axis grid size capped so a full sweep stays near 2^14 evaluations.
  int g = std::max(2, grid_resolution);
  while (std::pow(static_cast<double>(g), d) > 16384.0 && g > 3) g -= 2;

  GridBest best = grid_min(objective, center, half, g);
  for (int iter = 0; iter < refine_iters; ++iter) {
    center = best.where;
    half *= 0.5;
    GridBest refined = grid_min(objective, center, half, g);
    if (refined.value < best.value) best = refined;
  }

  // Compass polish over all sign directions, step halving from the last cell.
  std::vector<Point> directions;
  const std::int64_t patterns = static_cast<std::int64_t>(std::pow(3.0, d));
  for (std::int64_t code = 1; code < patterns; ++code) {
    Point dir = Point::Zero(d);
    std::int64_t c = code;
    bool nonzero = false;
    for (int i = 0; i < d; ++i) {
      int trit = static_cast<int>(c % 3);
      c /= 3;
      dir[i] = (trit == 0) ? 0.0 : (trit == 1 ? 1.0 : -1.0);
      nonzero = nonzero || trit != 0;
    }
    if (nonzero) directions.push_back(dir);
  }
  double step = half.maxCoeff() * 2.0;
  const double step_floor = 1e-13 * (1.0 + diam);
  // A move must clear rounding noise: accepting bare ulp-level decreases lets
  // a sweep keep "improving" forever on flat valleys, and the step never
  // shrinks. The sweep budget bounds the stage outright; ~45 halvings span
  // the whole step range.
  int sweep_budget = 256;
  while (step > step_floor && sweep_budget-- > 0) {
    bool moved = false;
    for (const Point& dir : directions) {
      Point trial = best.where + step * dir;
      double value = objective(trial);
      if (value < best.value - 1e-15 * (1.0 + best.value)) {
        best.value = value;
        best.where = trial;
        moved = true;
      }
    }
    if (!moved) step *= 0.5;
  }

  return {best.where, best.value};
}

RemotalityScan remotality_scan(const BoundedSet& set, const NormedSpace& space,
                               const std::vector<Point>& probes, const FarthestParams& params) {
  if (probes.empty()) throw InvalidInputError("remotality_scan requires at least one probe");
  RemotalityScan scan;
  scan.per_probe.reserve(probes.size());
  scan.remotal_on_probes = true;
  scan.uniquely_remotal_on_probes = true;
  for (const Point& x : probes) {
    FarthestResult r = farthest_points(x, set, space, params);
    scan.remotal_on_probes = scan.remotal_on_probes && !r.attainers.empty();
    scan.uniquely_remotal_on_probes = scan.uniquely_remotal_on_probes && r.unique;
    scan.per_probe.push_back(std::move(r));
  }
  return scan;
}

}  // namespace remotal
