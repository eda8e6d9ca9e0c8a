#ifndef SCENIC_GEOMETRY_HPP
#define SCENIC_GEOMETRY_HPP

#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "scenic/errors.hpp"

namespace scenic {

/// Relative tolerance used for point-coincidence and on-line tests.
/// Absolute tolerances are derived as `kEpsGeom * <bounding-box diagonal>`.
inline constexpr double kEpsGeom = 1e-9;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  Point2() = default;
  Point2(double px, double py) : x(px), y(py) {
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw Error(Errc::validation_error, "point coordinates must be finite");
    }
  }
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
inline bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

/// Implicit line a*x + b*y = c with (a, b) a unit normal, sign-canonicalized
/// (a > 0, or a == 0 and b > 0) so coincident lines compare equal.
struct Line {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;

  /// Signed residual of the line equation at p (distance, since |(a,b)| = 1).
  double eval(Point2 p) const { return a * p.x + b * p.y - c; }
  /// Unit direction vector along the line.
  Point2 direction() const { return {-b, a}; }
  /// Foot of the perpendicular from the origin.
  Point2 origin_foot() const { return {a * c, b * c}; }
  /// Scalar position of p's projection along direction(), measured from origin_foot().
  double param(Point2 p) const { return dot(p - origin_foot(), direction()); }
  Point2 at(double t) const { return origin_foot() + t * direction(); }
};

/// Builds a normalized, sign-canonicalized line from raw implicit coefficients.
Line make_line(double a, double b, double c);

/// True when the two canonical lines coincide within tolerance. `eps` bounds the
/// normal-component difference; the offset difference is bounded by eps * scale.
bool lines_coincident(const Line& l1, const Line& l2, double eps, double scale);

struct Segment {
  Point2 p;
  Point2 q;
  double length() const { return distance(p, q); }
  Point2 at(double t) const { return {p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)}; }
};

struct BoundingBox {
  Point2 min;
  Point2 max;
  double delta = 0.0;

  double width() const { return max.x - min.x; }
  double height() const { return max.y - min.y; }
  double diagonal() const { return std::hypot(width(), height()); }
  /// Closed-box membership with slack `eps` on every side.
  bool contains(Point2 p, double eps = 0.0) const {
    return p.x >= min.x - eps && p.x <= max.x + eps && p.y >= min.y - eps && p.y <= max.y + eps;
  }
};

/// Perpendicular bisector of the segment r-b: the locus equidistant to both.
/// Throws CoincidentPair when |r - b| <= eps.
Line perpendicular_bisector(Point2 r, Point2 b, double eps = 0.0);

/// Intersection of two normalized lines, or nullopt when the cross product of
/// their normals is within eps of zero (parallel or coincident).
std::optional<Point2> intersect_lines(const Line& l1, const Line& l2, double eps);

/// Axis-aligned extent of `points` expanded by `delta` on all four sides.
/// Throws EmptyInput / DegenerateBox.
BoundingBox make_bounding_box(std::span<const Point2> points, double delta);

/// Chord of the line inside the closed box, or nullopt when the line misses it
/// (or touches only at a corner).
std::optional<Segment> clip_line_to_box(const Line& line, const BoundingBox& box);

/// Strict convex hull (collinear boundary points dropped), counter-clockwise,
/// starting at the lexicographically smallest vertex. Uses QuickHull.
/// 1 or 2 distinct points return themselves; collinear input returns the two extremes.
std::vector<Point2> convex_hull(const std::vector<Point2>& points);

/// Same as convex_hull but returns indices into `points`.
std::vector<int> convex_hull_indices(const std::vector<Point2>& points);

/// True iff |cross(q-p, r-p)| <= eps * max(1, |q-p| * |r-p|).
bool collinear(Point2 p, Point2 q, Point2 r, double eps);

enum class PairMode { two_class, single_class };

/// Smallest equidistance defect of p over all admissible pairs:
/// two_class minimizes | |p-r| - |p-b| | over (r, b) in reds x blues;
/// single_class minimizes over unordered distinct pairs of `reds`.
double scenic_residual(Point2 p, std::span<const Point2> reds, std::span<const Point2> blues,
                       PairMode mode);

/// True iff some pair sees p equidistantly within eps * scale, where scale is
/// the diagonal of the points' axis-aligned extent (1 when degenerate).
bool is_scenic(Point2 p, std::span<const Point2> reds, std::span<const Point2> blues, double eps,
               PairMode mode);

/// Delaunay triangulation (Bowyer-Watson). Returns triangles as index triples,
/// CCW, ordered canonically. Requires >= 3 points not all collinear.
std::vector<std::array<int, 3>> delaunay_triangulation(const std::vector<Point2>& points);

/// Circumradius of a triangle; +infinity for a degenerate one.
double circumradius(Point2 a, Point2 b, Point2 c);

struct AlphaShape {
  /// Boundary loops as index lists into the input (closed implicitly; the last
  /// vertex connects back to the first). Outer loops run CCW, holes CW.
  std::vector<std::vector<int>> loops;
  /// Triangles of the alpha complex (circumradius <= 1/alpha).
  std::vector<std::array<int, 3>> kept_triangles;
  /// The alpha actually used (resolved value in auto mode).
  double alpha = 0.0;
  /// True when no triangle survived the radius filter.
  bool no_shape = false;
};

/// Alpha shape via circumradius filtering of the Delaunay triangulation.
/// `alpha` == nullopt selects the auto rule: the largest alpha whose kept-triangle
/// union is still one connected component containing every input point.
/// Throws DegenerateInput for < 3 distinct points or all-collinear input.
AlphaShape alpha_shape_indices(const std::vector<Point2>& points, std::optional<double> alpha);

/// Convenience wrapper returning boundary loops as point lists.
std::vector<std::vector<Point2>> alpha_shape(const std::vector<Point2>& points, double alpha);

}  // namespace scenic

#endif  // SCENIC_GEOMETRY_HPP
