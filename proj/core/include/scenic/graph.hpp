#ifndef SCENIC_GRAPH_HPP
#define SCENIC_GRAPH_HPP

#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "scenic/geometry.hpp"

namespace scenic {

/// Input points of interest. In single_class mode all points live in `reds`.
struct PointSet {
  std::vector<Point2> reds;
  std::vector<Point2> blues;
  PairMode mode = PairMode::two_class;

  /// Number of distinct pairs a route could view:
  /// |R|*|B| in two_class mode, C(n,2) in single_class mode.
  std::int64_t pair_count() const {
    if (mode == PairMode::two_class) {
      return static_cast<std::int64_t>(reds.size()) * static_cast<std::int64_t>(blues.size());
    }
    const std::int64_t n = static_cast<std::int64_t>(reds.size());
    return n * (n - 1) / 2;
  }
  std::vector<Point2> all_points() const {
    std::vector<Point2> all = reds;
    all.insert(all.end(), blues.begin(), blues.end());
    return all;
  }
};

/// One scenic path: a canonical bisector line, the point pairs it bisects
/// (several, when pairs share a bisector), and its chord inside the box.
struct Bisector {
  int id = -1;
  Line line;
  std::vector<std::pair<int, int>> pairs;  // (red index, blue index); both into reds when single_class
  Segment clip;
};

struct IntersectionNode {
  int id = -1;
  Point2 pos;
  std::set<int> bisector_ids;
};

struct ScenicEdge {
  int id = -1;
  int u = -1;
  int v = -1;
  double weight = 0.0;
  int bisector_id = -1;
};

struct ScenicGraph {
  std::vector<IntersectionNode> nodes;
  std::vector<ScenicEdge> edges;
  std::vector<std::vector<int>> adjacency;  // node id -> incident edge ids
  BoundingBox box;
  std::vector<Bisector> bisectors;
  std::vector<std::string> warnings;
  double eps_abs = 0.0;  // kEpsGeom * box diagonal unless overridden

  bool empty() const { return edges.empty(); }
  /// Edge id joining u and v, or -1. At most one exists: two nodes determine
  /// a unique line, and coincident bisectors are merged.
  int edge_between(int u, int v) const;
  int other_end(int edge_id, int node) const {
    const ScenicEdge& e = edges[edge_id];
    return e.u == node ? e.v : e.u;
  }
  /// Rebuilds adjacency and the edge lookup from `edges` (used after manual
  /// surgery in tests and by build_graph itself).
  void reindex();

 private:
  std::unordered_map<std::int64_t, int> edge_lookup_;
};

/// All bisector candidates of the point set, coincident lines merged (pairs
/// accumulated), clipped to the box; lines missing the box are dropped.
/// Coincident red/blue pairs are skipped and reported through `warnings`.
std::vector<Bisector> enumerate_bisectors(const PointSet& ps, const BoundingBox& box,
                                          std::vector<std::string>* warnings = nullptr,
                                          double eps_rel = kEpsGeom);

/// Builds G(I_P, E_P): intersection nodes of bisector pairs inside the closed
/// box (concurrent intersections merged), and edges between consecutive nodes
/// along each bisector, weighted by Euclidean length.
ScenicGraph build_graph(const PointSet& ps, double delta, double eps_rel = kEpsGeom);

/// All-pairs shortest path tables over the node set.
struct ApspTables {
  int n = 0;
  std::vector<double> dist;  // n*n, infinity when unreachable
  std::vector<int> next;     // n*n, first hop on a shortest path, -1 when none

  double d(int u, int v) const { return dist[static_cast<size_t>(u) * n + v]; }
  int hop(int u, int v) const { return next[static_cast<size_t>(u) * n + v]; }
};

ApspTables floyd_warshall(const ScenicGraph& g);

/// Node sequence of a shortest path (inclusive of both ends). Throws
/// Unreachable when dist is infinite.
std::vector<int> shortest_path(const ApspTables& t, int u, int v);

/// Minimum-weight edge, ties broken by lowest edge id. Throws EmptyGraph.
const ScenicEdge& smallest_edge(const ScenicGraph& g);

}  // namespace scenic

#endif  // SCENIC_GRAPH_HPP
