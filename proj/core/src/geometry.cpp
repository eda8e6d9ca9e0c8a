#include "scenic/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

namespace scenic {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double cross3(Point2 a, Point2 b, Point2 c) { return cross(b - a, c - a); }

}  // namespace

Line make_line(double a, double b, double c) {
  const double n = std::hypot(a, b);
  if (!(n > 0.0) || !std::isfinite(n) || !std::isfinite(c)) {
    throw Error(Errc::validation_error, "degenerate line coefficients");
  }
  a /= n;
  b /= n;
  c /= n;
  if (a < 0.0 || (a == 0.0 && b < 0.0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  return Line{a, b, c};
}

bool lines_coincident(const Line& l1, const Line& l2, double eps, double scale) {
  const double cs = eps * std::max(1.0, scale);
  auto close = [&](const Line& u, const Line& v, double sense) {
    return std::abs(u.a - sense * v.a) <= eps && std::abs(u.b - sense * v.b) <= eps &&
           std::abs(u.c - sense * v.c) <= cs;
  };
  return close(l1, l2, 1.0) || close(l1, l2, -1.0);
}

Line perpendicular_bisector(Point2 r, Point2 b, double eps) {
  const Point2 d = b - r;
  if (norm(d) <= eps) {
    throw Error(Errc::coincident_pair, "bisector undefined for coincident points");
  }
  const Point2 mid{(r.x + b.x) / 2.0, (r.y + b.y) / 2.0};
  return make_line(d.x, d.y, dot(d, mid));
}

std::optional<Point2> intersect_lines(const Line& l1, const Line& l2, double eps) {
  const double det = l1.a * l2.b - l2.a * l1.b;
  if (std::abs(det) <= eps) return std::nullopt;
  return Point2{(l1.c * l2.b - l2.c * l1.b) / det, (l1.a * l2.c - l2.a * l1.c) / det};
}

BoundingBox make_bounding_box(std::span<const Point2> points, double delta) {
  if (points.empty()) throw Error(Errc::empty_input, "bounding box needs at least one point");
  double minx = kInf, miny = kInf, maxx = -kInf, maxy = -kInf;
  for (const Point2& p : points) {
    minx = std::min(minx, p.x);
    miny = std::min(miny, p.y);
    maxx = std::max(maxx, p.x);
    maxy = std::max(maxy, p.y);
  }
  BoundingBox box{{minx - delta, miny - delta}, {maxx + delta, maxy + delta}, delta};
  if (box.min.x > box.max.x || box.min.y > box.max.y) {
    throw Error(Errc::degenerate_box, "negative delta inverts the box");
  }
  return box;
}

std::optional<Segment> clip_line_to_box(const Line& line, const BoundingBox& box) {
  // Liang-Barsky on the parametric form p0 + t * dir, t unbounded.
  const Point2 p0 = line.origin_foot();
  const Point2 dir = line.direction();
  double t0 = -kInf, t1 = kInf;
  const double pcoef[4] = {-dir.x, dir.x, -dir.y, dir.y};
  const double qcoef[4] = {p0.x - box.min.x, box.max.x - p0.x, p0.y - box.min.y,
                           box.max.y - p0.y};
  for (int side = 0; side < 4; ++side) {
    if (pcoef[side] == 0.0) {
      if (qcoef[side] < 0.0) return std::nullopt;  // parallel and outside this slab
      continue;
    }
    const double t = qcoef[side] / pcoef[side];
    if (pcoef[side] < 0.0) {
      t0 = std::max(t0, t);
    } else {
      t1 = std::min(t1, t);
    }
  }
  if (!(t0 < t1)) return std::nullopt;  // missed, or touches a single corner
  if (!std::isfinite(t0) || !std::isfinite(t1)) return std::nullopt;
  const double span = std::abs(t1 - t0);
  if (span <= kEpsGeom * std::max(1.0, box.diagonal())) return std::nullopt;
  return Segment{line.at(t0), line.at(t1)};
}

namespace {

// Emits hull vertices strictly between ia and ib (CCW) from the candidates
// strictly to the right of the directed edge ia -> ib.
void quickhull_side(const std::vector<Point2>& pts, const std::vector<int>& cand, int ia, int ib,
                    std::vector<int>& out) {
  if (cand.empty()) return;
  int far = -1;
  double far_d = 0.0;
  for (int i : cand) {
    const double d = -cross3(pts[ia], pts[ib], pts[i]);
    if (far < 0 || d > far_d || (d == far_d && i < far)) {
      far = i;
      far_d = d;
    }
  }
  std::vector<int> right1, right2;
  for (int i : cand) {
    if (i == far) continue;
    if (cross3(pts[ia], pts[far], pts[i]) < 0.0) {
      right1.push_back(i);
    } else if (cross3(pts[far], pts[ib], pts[i]) < 0.0) {
      right2.push_back(i);
    }
  }
  quickhull_side(pts, right1, ia, far, out);
  out.push_back(far);
  quickhull_side(pts, right2, far, ib, out);
}

}  // namespace

std::vector<int> convex_hull_indices(const std::vector<Point2>& points) {
  if (points.empty()) throw Error(Errc::empty_input, "convex hull needs at least one point");
  auto lex_less = [&](int i, int j) {
    return points[i].x < points[j].x || (points[i].x == points[j].x && points[i].y < points[j].y);
  };
  int lo = 0, hi = 0;
  for (int i = 1; i < static_cast<int>(points.size()); ++i) {
    if (lex_less(i, lo)) lo = i;
    if (lex_less(hi, i)) hi = i;
  }
  if (points[lo] == points[hi]) return {lo};  // all points coincide

  std::vector<int> below, above;
  for (int i = 0; i < static_cast<int>(points.size()); ++i) {
    const double side = cross3(points[lo], points[hi], points[i]);
    if (side < 0.0) {
      below.push_back(i);
    } else if (side > 0.0) {
      above.push_back(i);
    }
  }
  std::vector<int> hull;
  hull.push_back(lo);
  quickhull_side(points, below, lo, hi, hull);
  hull.push_back(hi);
  quickhull_side(points, above, hi, lo, hull);
  return hull;
}

std::vector<Point2> convex_hull(const std::vector<Point2>& points) {
  std::vector<Point2> out;
  for (int i : convex_hull_indices(points)) out.push_back(points[i]);
  return out;
}

bool collinear(Point2 p, Point2 q, Point2 r, double eps) {
  const double c = std::abs(cross(q - p, r - p));
  return c <= eps * std::max(1.0, norm(q - p) * norm(r - p));
}

double scenic_residual(Point2 p, std::span<const Point2> reds, std::span<const Point2> blues,
                       PairMode mode) {
  double best = kInf;
  if (mode == PairMode::two_class) {
    for (const Point2& r : reds) {
      const double dr = distance(p, r);
      for (const Point2& b : blues) {
        best = std::min(best, std::abs(dr - distance(p, b)));
      }
    }
  } else {
    for (size_t i = 0; i < reds.size(); ++i) {
      const double du = distance(p, reds[i]);
      for (size_t j = i + 1; j < reds.size(); ++j) {
        best = std::min(best, std::abs(du - distance(p, reds[j])));
      }
    }
  }
  return best;
}

bool is_scenic(Point2 p, std::span<const Point2> reds, std::span<const Point2> blues, double eps,
               PairMode mode) {
  std::vector<Point2> all(reds.begin(), reds.end());
  all.insert(all.end(), blues.begin(), blues.end());
  if (all.empty()) return false;
  double scale = 1.0;
  if (all.size() > 1) {
    const double diag = make_bounding_box(all, 0.0).diagonal();
    if (diag > 0.0) scale = diag;
  }
  return scenic_residual(p, reds, blues, mode) <= eps * scale;
}

// ---------------------------------------------------------------------------
// Delaunay triangulation (Bowyer-Watson) and alpha shapes
// ---------------------------------------------------------------------------

namespace {

struct WorkTri {
  int a, b, c;  // CCW
};

// Positive iff p lies strictly inside the circumcircle of CCW triangle (a,b,c).
long double incircle(Point2 a, Point2 b, Point2 c, Point2 p) {
  const long double ax = (long double)a.x - p.x, ay = (long double)a.y - p.y;
  const long double bx = (long double)b.x - p.x, by = (long double)b.y - p.y;
  const long double cx = (long double)c.x - p.x, cy = (long double)c.y - p.y;
  const long double a2 = ax * ax + ay * ay;
  const long double b2 = bx * bx + by * by;
  const long double c2 = cx * cx + cy * cy;
  return ax * (by * c2 - b2 * cy) - ay * (bx * c2 - b2 * cx) + a2 * (bx * cy - by * cx);
}

long double orient(Point2 a, Point2 b, Point2 c) {
  return ((long double)b.x - a.x) * ((long double)c.y - a.y) -
         ((long double)b.y - a.y) * ((long double)c.x - a.x);
}

}  // namespace

std::vector<std::array<int, 3>> delaunay_triangulation(const std::vector<Point2>& points) {
  const int n = static_cast<int>(points.size());
  if (n < 3) throw Error(Errc::degenerate_input, "triangulation needs >= 3 points");

  // Normalize to a centered unit-scale frame; only combinatorics are used, so
  // the uniform transform does not change the result.
  BoundingBox ext = make_bounding_box(points, 0.0);
  const double scale = std::max({ext.width(), ext.height(), 1e-300});
  const Point2 center{(ext.min.x + ext.max.x) / 2.0, (ext.min.y + ext.max.y) / 2.0};
  std::vector<Point2> pts(points.size() + 3);
  for (int i = 0; i < n; ++i) {
    pts[i] = Point2{(points[i].x - center.x) / scale, (points[i].y - center.y) / scale};
  }
  const double m = 1e6;
  pts[n] = Point2{0.0, 3.0 * m};
  pts[n + 1] = Point2{-3.0 * m, -3.0 * m};
  pts[n + 2] = Point2{3.0 * m, -3.0 * m};

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    return pts[i].x < pts[j].x || (pts[i].x == pts[j].x && pts[i].y < pts[j].y);
  });
  for (int k = 1; k < n; ++k) {
    if (pts[order[k]] == pts[order[k - 1]]) {
      throw Error(Errc::degenerate_input, "triangulation requires distinct points");
    }
  }

  std::vector<WorkTri> tris{{n, n + 1, n + 2}};
  std::vector<WorkTri> next;
  std::map<std::pair<int, int>, int> edge_count;
  for (int ip : order) {
    const Point2 p = pts[ip];
    edge_count.clear();
    next.clear();
    for (const WorkTri& t : tris) {
      if (incircle(pts[t.a], pts[t.b], pts[t.c], p) > 0.0L) {
        // cavity triangle: record its directed edges
        ++edge_count[{t.a, t.b}];
        ++edge_count[{t.b, t.c}];
        ++edge_count[{t.c, t.a}];
      } else {
        next.push_back(t);
      }
    }
    // boundary = directed edges whose reverse is not in the cavity
    for (const auto& [e, cnt] : edge_count) {
      (void)cnt;
      if (edge_count.find({e.second, e.first}) == edge_count.end()) {
        next.push_back(WorkTri{e.first, e.second, ip});
      }
    }
    tris.swap(next);
  }

  std::vector<std::array<int, 3>> out;
  for (const WorkTri& t : tris) {
    if (t.a >= n || t.b >= n || t.c >= n) continue;  // touches the super triangle
    std::array<int, 3> tri{t.a, t.b, t.c};
    // guarantee CCW in the original frame, then rotate smallest index first
    if (orient(points[tri[0]], points[tri[1]], points[tri[2]]) < 0.0L) {
      std::swap(tri[1], tri[2]);
    }
    int lo = static_cast<int>(std::min_element(tri.begin(), tri.end()) - tri.begin());
    std::array<int, 3> rot{tri[lo], tri[(lo + 1) % 3], tri[(lo + 2) % 3]};
    out.push_back(rot);
  }
  std::sort(out.begin(), out.end());
  if (out.empty()) throw Error(Errc::degenerate_input, "collinear input has no triangulation");
  return out;
}

double circumradius(Point2 a, Point2 b, Point2 c) {
  const double area2 = std::abs(cross(b - a, c - a));
  if (area2 <= 0.0) return kInf;
  return distance(a, b) * distance(b, c) * distance(c, a) / (2.0 * area2);
}

namespace {

struct AlphaComplex {
  std::vector<std::array<int, 3>> tris;   // all Delaunay triangles
  std::vector<double> radii;              // parallel circumradii
};

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// True when the triangles kept at radius threshold r form one connected
// component whose vertices cover every point index in [0, n).
bool complex_spans(const AlphaComplex& cx, double r, int n) {
  DisjointSet ds(n);
  std::vector<char> seen(n, 0);
  bool any = false;
  for (size_t i = 0; i < cx.tris.size(); ++i) {
    if (cx.radii[i] > r) continue;
    any = true;
    const auto& t = cx.tris[i];
    seen[t[0]] = seen[t[1]] = seen[t[2]] = 1;
    ds.unite(t[0], t[1]);
    ds.unite(t[1], t[2]);
  }
  if (!any) return false;
  for (int i = 0; i < n; ++i) {
    if (!seen[i]) return false;
  }
  const int root = ds.find(0);
  for (int i = 1; i < n; ++i) {
    if (ds.find(i) != root) return false;
  }
  return true;
}

std::vector<std::vector<int>> trace_boundary_loops(const std::vector<std::array<int, 3>>& kept) {
  // Boundary = directed edges of kept CCW triangles whose undirected twin is
  // used exactly once; orientation keeps the complex interior on the left.
  std::map<std::pair<int, int>, int> undirected;
  for (const auto& t : kept) {
    for (int k = 0; k < 3; ++k) {
      int u = t[k], v = t[(k + 1) % 3];
      ++undirected[{std::min(u, v), std::max(u, v)}];
    }
  }
  std::map<int, std::vector<int>> outgoing;
  int boundary_edges = 0;
  for (const auto& t : kept) {
    for (int k = 0; k < 3; ++k) {
      int u = t[k], v = t[(k + 1) % 3];
      if (undirected[{std::min(u, v), std::max(u, v)}] == 1) {
        outgoing[u].push_back(v);
        ++boundary_edges;
      }
    }
  }
  for (auto& [u, heads] : outgoing) {
    (void)u;
    std::sort(heads.begin(), heads.end());
  }

  std::vector<std::vector<int>> loops;
  std::map<std::pair<int, int>, bool> used;
  int consumed = 0;
  while (consumed < boundary_edges) {
    // deterministic start: smallest unused (tail, head)
    int start_u = -1, start_v = -1;
    for (const auto& [u, heads] : outgoing) {
      for (int v : heads) {
        if (!used[{u, v}]) {
          start_u = u;
          start_v = v;
          break;
        }
      }
      if (start_u >= 0) break;
    }
    std::vector<int> loop{start_u};
    int u = start_u, v = start_v;
    while (true) {
      used[{u, v}] = true;
      ++consumed;
      if (v == start_u) break;
      loop.push_back(v);
      int next = -1;
      for (int w : outgoing[v]) {
        if (!used[{v, w}]) {
          next = w;
          break;
        }
      }
      if (next < 0) break;  // open chain cannot occur; guard anyway
      u = v;
      v = next;
    }
    loops.push_back(std::move(loop));
  }
  return loops;
}

}  // namespace

AlphaShape alpha_shape_indices(const std::vector<Point2>& points, std::optional<double> alpha) {
  if (alpha.has_value() && *alpha < 0.0) {
    throw Error(Errc::validation_error, "alpha must be >= 0");
  }
  // Collapse exact duplicates, remembering the first index of each position.
  std::vector<Point2> unique;
  std::vector<int> to_input;
  std::map<std::pair<double, double>, int> index_of;
  for (int i = 0; i < static_cast<int>(points.size()); ++i) {
    auto key = std::make_pair(points[i].x, points[i].y);
    if (index_of.emplace(key, static_cast<int>(unique.size())).second) {
      unique.push_back(points[i]);
      to_input.push_back(i);
    }
  }
  if (unique.size() < 3) throw Error(Errc::degenerate_input, "alpha shape needs >= 3 points");

  AlphaComplex cx;
  cx.tris = delaunay_triangulation(unique);
  cx.radii.reserve(cx.tris.size());
  for (const auto& t : cx.tris) {
    cx.radii.push_back(circumradius(unique[t[0]], unique[t[1]], unique[t[2]]));
  }

  AlphaShape result;
  double r_thresh;
  if (alpha.has_value()) {
    result.alpha = *alpha;
    r_thresh = (*alpha == 0.0) ? kInf : 1.0 / *alpha;
  } else {
    // auto: smallest radius threshold keeping one connected component over all
    // points; thresholds only change at actual circumradius values.
    std::vector<double> radii = cx.radii;
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
    int lo = 0, hi = static_cast<int>(radii.size()) - 1;
    const int n = static_cast<int>(unique.size());
    while (lo < hi) {
      const int mid = (lo + hi) / 2;
      if (complex_spans(cx, radii[mid] * (1.0 + 1e-12), n)) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    r_thresh = radii[lo];
    result.alpha = (r_thresh == 0.0 || std::isinf(r_thresh)) ? 0.0 : 1.0 / r_thresh;
    r_thresh = std::isinf(r_thresh) ? kInf : r_thresh;
  }

  const double cutoff = std::isinf(r_thresh) ? kInf : r_thresh * (1.0 + 1e-12);
  for (size_t i = 0; i < cx.tris.size(); ++i) {
    if (cx.radii[i] <= cutoff) result.kept_triangles.push_back(cx.tris[i]);
  }
  if (result.kept_triangles.empty()) {
    result.no_shape = true;
    return result;
  }

  result.loops = trace_boundary_loops(result.kept_triangles);
  for (auto& loop : result.loops) {
    for (int& v : loop) v = to_input[v];
    // rotate so the loop starts at its smallest vertex index
    auto lo_it = std::min_element(loop.begin(), loop.end());
    std::rotate(loop.begin(), lo_it, loop.end());
  }
  std::sort(result.loops.begin(), result.loops.end());
  for (auto& tri : result.kept_triangles) {
    for (int& v : tri) v = to_input[v];
  }
  return result;
}

std::vector<std::vector<Point2>> alpha_shape(const std::vector<Point2>& points, double alpha) {
  AlphaShape shape = alpha_shape_indices(points, alpha);
  std::vector<std::vector<Point2>> loops;
  for (const auto& loop : shape.loops) {
    std::vector<Point2> poly;
    for (int i : loop) poly.push_back(points[i]);
    loops.push_back(std::move(poly));
  }
  return loops;
}

}  // namespace scenic
