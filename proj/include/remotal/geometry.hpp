#ifndef REMOTAL_GEOMETRY_HPP
#define REMOTAL_GEOMETRY_HPP

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace remotal {

using Point = Eigen::VectorXd;

/// (R^d, l_p) with p in [1, inf]. Use std::numeric_limits<double>::infinity()
/// for the max norm.
struct NormedSpace {
  int dim = 1;
  double p = 2.0;
};

NormedSpace l1_space(int dim);
NormedSpace l2_space(int dim);
NormedSpace linf_space(int dim);

/// l_p norm, accumulated coordinate by coordinate in index order so results
/// are reproducible across builds.
double norm(const NormedSpace& space, const Point& v);
double distance(const NormedSpace& space, const Point& a, const Point& b);

struct PointCloud {
  std::vector<Point> points;
};

struct AxisBox {
  Point lo;
  Point hi;
};

/// A bounded subset of R^d given by a representation whose supremum of any
/// convex function is attained on an explicit finite candidate list: a finite
/// point cloud (the points themselves) or an axis-aligned box (its vertices).
/// An empty cloud is permitted only where an operation says so (diameter).
class BoundedSet {
 public:
  static BoundedSet cloud(std::vector<Point> points);
  static BoundedSet box(Point lo, Point hi);
  /// 1-D interval [lo, hi] as a box.
  static BoundedSet interval(double lo, double hi);

  bool is_box() const { return std::holds_alternative<AxisBox>(rep_); }
  const AxisBox& as_box() const { return std::get<AxisBox>(rep_); }
  const PointCloud& as_cloud() const { return std::get<PointCloud>(rep_); }

  int dim() const;
  bool empty() const;
  /// Number of candidate points (cloud size or 2^d for a box).
  std::int64_t candidate_count() const;

 private:
  explicit BoundedSet(std::variant<PointCloud, AxisBox> rep) : rep_(std::move(rep)) {}
  std::variant<PointCloud, AxisBox> rep_;
};

/// Candidate points of the set, materialized. Box vertices are enumerated in
/// lexicographic bit order; dimensions above 25 are refused
/// (DimensionCapError).
std::vector<Point> candidate_points(const BoundedSet& set);

/// sup over e in set of ||x - e||. Exact over the candidate list; throws
/// InvalidInputError on an empty set and DimensionCapError for box vertex
/// enumeration beyond d = 25.
double farthest_distance(const Point& x, const BoundedSet& set, const NormedSpace& space);

struct FarthestResult {
  double distance = 0.0;
  /// Candidates within eps_far of the farthest distance, lexicographically
  /// sorted.
  std::vector<Point> attainers;
  /// Diameter of the attainer list is at most delta_unique.
  bool unique = false;
};

/// Attainer tolerances; defaults are relative: eps_far = 1e-9 (1 + delta),
/// delta_unique = 1e-6 (1 + delta).
struct FarthestParams {
  std::optional<double> eps_far;
  std::optional<double> delta_unique;
};

FarthestResult farthest_points(const Point& x, const BoundedSet& set, const NormedSpace& space,
                               const FarthestParams& params = {});

/// Max pairwise distance over candidate points; 0 for the empty set and
/// singletons.
double diameter(const BoundedSet& set, const NormedSpace& space);
double diameter(const std::vector<Point>& points, const NormedSpace& space);

struct ChebyshevResult {
  Point center;
  double radius = 0.0;
};

/// Minimizes x -> delta(x, set) by coarse grid search over the bounding box
/// of the set inflated by its diameter, followed by shrinking-grid and
/// compass refinement. Supported up to d = 6 (DimensionCapError above).
ChebyshevResult chebyshev_center(const BoundedSet& set, const NormedSpace& space,
                                 int grid_resolution = 21, int refine_iters = 40);

struct RemotalityScan {
  std::vector<FarthestResult> per_probe;
  /// Every probe has a non-empty attainer set.
  bool remotal_on_probes = false;
  /// Every probe additionally has a unique attainer.
  bool uniquely_remotal_on_probes = false;
};

/// Farthest-point diagnostics over a finite probe list.
RemotalityScan remotality_scan(const BoundedSet& set, const NormedSpace& space,
                               const std::vector<Point>& probes,
                               const FarthestParams& params = {});

/// Strict lexicographic order on coordinates.
bool lex_less(const Point& a, const Point& b);

/// Componentwise bounding box of the candidate points.
AxisBox bounding_box(const BoundedSet& set);

/// True when q matches some candidate point of the set within tol in every
/// coordinate (for boxes: lies inside the box within tol).
bool contains_point(const BoundedSet& set, const Point& q, double tol = 1e-12);

}  // namespace remotal

#endif  // REMOTAL_GEOMETRY_HPP
