#include "scenic/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace scenic {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::int64_t pair_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::int64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);  // keep lowest index as root
  }
};

void check_no_duplicates(const std::vector<Point2>& pts, double eps, const char* label) {
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t j = i + 1; j < pts.size(); ++j) {
      if (distance(pts[i], pts[j]) <= eps) {
        std::ostringstream msg;
        msg << "duplicate " << label << " points at indices " << i << " and " << j;
        throw Error(Errc::validation_error, msg.str());
      }
    }
  }
}

}  // namespace

int ScenicGraph::edge_between(int u, int v) const {
  auto it = edge_lookup_.find(pair_key(u, v));
  return it == edge_lookup_.end() ? -1 : it->second;
}

void ScenicGraph::reindex() {
  adjacency.assign(nodes.size(), {});
  edge_lookup_.clear();
  for (const ScenicEdge& e : edges) {
    adjacency[e.u].push_back(e.id);
    adjacency[e.v].push_back(e.id);
    edge_lookup_[pair_key(e.u, e.v)] = e.id;
  }
}

std::vector<Bisector> enumerate_bisectors(const PointSet& ps, const BoundingBox& box,
                                          std::vector<std::string>* warnings, double eps_rel) {
  const double scale = std::max(1.0, box.diagonal());
  const double eps_abs = eps_rel * scale;

  struct Candidate {
    Line line;
    std::pair<int, int> pair;
  };
  std::vector<Candidate> cands;
  auto add_pair = [&](int i, int j, Point2 a, Point2 b) {
    if (distance(a, b) <= eps_abs) {
      if (warnings) {
        std::ostringstream msg;
        msg << "skipped coincident pair (" << i << "," << j << "): bisector undefined";
        warnings->push_back(msg.str());
      }
      return;
    }
    cands.push_back({perpendicular_bisector(a, b), {i, j}});
  };

  if (ps.mode == PairMode::two_class) {
    for (int i = 0; i < static_cast<int>(ps.reds.size()); ++i) {
      for (int j = 0; j < static_cast<int>(ps.blues.size()); ++j) {
        add_pair(i, j, ps.reds[i], ps.blues[j]);
      }
    }
  } else {
    for (int i = 0; i < static_cast<int>(ps.reds.size()); ++i) {
      for (int j = i + 1; j < static_cast<int>(ps.reds.size()); ++j) {
        add_pair(i, j, ps.reds[i], ps.reds[j]);
      }
    }
  }

  // Merge coincident candidate lines so one Bisector carries all its pairs.
  DisjointSet ds(static_cast<int>(cands.size()));
  for (size_t i = 0; i < cands.size(); ++i) {
    for (size_t j = i + 1; j < cands.size(); ++j) {
      if (lines_coincident(cands[i].line, cands[j].line, eps_rel, scale)) {
        ds.unite(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  std::vector<std::vector<int>> groups(cands.size());
  for (size_t i = 0; i < cands.size(); ++i) {
    groups[ds.find(static_cast<int>(i))].push_back(static_cast<int>(i));
  }

  std::vector<Bisector> merged;
  for (size_t g = 0; g < groups.size(); ++g) {
    if (groups[g].empty()) continue;
    Bisector b;
    b.line = cands[groups[g][0]].line;
    for (int idx : groups[g]) b.pairs.push_back(cands[idx].pair);
    std::sort(b.pairs.begin(), b.pairs.end());
    auto clip = clip_line_to_box(b.line, box);
    if (!clip) continue;
    b.clip = *clip;
    merged.push_back(std::move(b));
  }

  // Canonical ordering by line coefficients makes ids input-order independent.
  std::sort(merged.begin(), merged.end(), [](const Bisector& x, const Bisector& y) {
    if (x.line.a != y.line.a) return x.line.a < y.line.a;
    if (x.line.b != y.line.b) return x.line.b < y.line.b;
    return x.line.c < y.line.c;
  });
  for (int i = 0; i < static_cast<int>(merged.size()); ++i) merged[i].id = i;
  return merged;
}

ScenicGraph build_graph(const PointSet& ps, double delta, double eps_rel) {
  if (ps.mode == PairMode::two_class) {
    if (ps.reds.empty() || ps.blues.empty()) {
      throw Error(Errc::validation_error, "two_class mode needs at least one red and one blue");
    }
  } else if (ps.reds.size() < 2) {
    throw Error(Errc::validation_error, "single_class mode needs at least two points");
  }

  ScenicGraph g;
  const std::vector<Point2> all = ps.all_points();
  g.box = make_bounding_box(all, delta);
  g.eps_abs = eps_rel * std::max(1.0, g.box.diagonal());

  check_no_duplicates(ps.reds, g.eps_abs, ps.mode == PairMode::two_class ? "red" : "input");
  if (ps.mode == PairMode::two_class) check_no_duplicates(ps.blues, g.eps_abs, "blue");

  g.bisectors = enumerate_bisectors(ps, g.box, &g.warnings, eps_rel);

  // Raw pairwise intersections inside the closed box.
  struct RawPoint {
    Point2 pos;
    int bis_i, bis_j;
  };
  std::vector<RawPoint> raw;
  const int m = static_cast<int>(g.bisectors.size());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      auto p = intersect_lines(g.bisectors[i].line, g.bisectors[j].line, eps_rel);
      if (!p) continue;
      if (!g.box.contains(*p, g.eps_abs)) continue;
      raw.push_back({*p, i, j});
    }
  }

  // Spatial-hash clustering: points within eps_abs of each other become one
  // node (this is what merges concurrent bisector intersections).
  const double cell = std::max(g.eps_abs, 1e-300);
  auto cell_of = [&](double v) { return static_cast<std::int64_t>(std::floor(v / cell)); };
  std::unordered_map<std::int64_t, std::vector<int>> grid;
  auto grid_key = [](std::int64_t cx, std::int64_t cy) {
    return (cx * 73856093) ^ (cy * 19349663);
  };
  DisjointSet clusters(static_cast<int>(raw.size()));
  for (int i = 0; i < static_cast<int>(raw.size()); ++i) {
    const std::int64_t cx = cell_of(raw[i].pos.x);
    const std::int64_t cy = cell_of(raw[i].pos.y);
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        auto it = grid.find(grid_key(cx + dx, cy + dy));
        if (it == grid.end()) continue;
        for (int j : it->second) {
          if (distance(raw[i].pos, raw[j].pos) <= g.eps_abs) {
            clusters.unite(i, j);
          }
        }
      }
    }
    grid[grid_key(cx, cy)].push_back(i);
  }

  struct Cluster {
    Point2 pos;  // representative: first raw point of the cluster
    std::set<int> bisector_ids;
  };
  std::vector<int> root_of(raw.size());
  std::unordered_map<int, Cluster> by_root;
  for (int i = 0; i < static_cast<int>(raw.size()); ++i) {
    const int r = clusters.find(i);
    root_of[i] = r;
    auto [it, inserted] = by_root.try_emplace(r);
    if (inserted) it->second.pos = raw[r].pos;
    it->second.bisector_ids.insert(raw[i].bis_i);
    it->second.bisector_ids.insert(raw[i].bis_j);
  }

  std::vector<Cluster> ordered;
  ordered.reserve(by_root.size());
  for (auto& [root, c] : by_root) {
    (void)root;
    ordered.push_back(std::move(c));
  }
  std::sort(ordered.begin(), ordered.end(), [](const Cluster& a, const Cluster& b) {
    return a.pos.x < b.pos.x || (a.pos.x == b.pos.x && a.pos.y < b.pos.y);
  });

  g.nodes.reserve(ordered.size());
  for (int id = 0; id < static_cast<int>(ordered.size()); ++id) {
    g.nodes.push_back(IntersectionNode{id, ordered[id].pos, std::move(ordered[id].bisector_ids)});
  }

  // Edges: consecutive nodes along each bisector.
  std::vector<std::vector<int>> nodes_on(m);
  for (const IntersectionNode& node : g.nodes) {
    for (int b : node.bisector_ids) nodes_on[b].push_back(node.id);
  }
  for (int b = 0; b < m; ++b) {
    auto& lst = nodes_on[b];
    const Line& line = g.bisectors[b].line;
    std::sort(lst.begin(), lst.end(), [&](int x, int y) {
      return line.param(g.nodes[x].pos) < line.param(g.nodes[y].pos);
    });
    for (size_t k = 0; k + 1 < lst.size(); ++k) {
      ScenicEdge e;
      e.id = static_cast<int>(g.edges.size());
      e.u = lst[k];
      e.v = lst[k + 1];
      e.weight = distance(g.nodes[e.u].pos, g.nodes[e.v].pos);
      e.bisector_id = b;
      g.edges.push_back(e);
    }
  }

  g.reindex();
  return g;
}

ApspTables floyd_warshall(const ScenicGraph& g) {
  ApspTables t;
  t.n = static_cast<int>(g.nodes.size());
  const size_t n = static_cast<size_t>(t.n);
  t.dist.assign(n * n, kInf);
  t.next.assign(n * n, -1);
  for (size_t i = 0; i < n; ++i) {
    t.dist[i * n + i] = 0.0;
    t.next[i * n + i] = static_cast<int>(i);
  }
  for (const ScenicEdge& e : g.edges) {
    const size_t u = e.u, v = e.v;
    if (e.weight < t.dist[u * n + v]) {
      t.dist[u * n + v] = t.dist[v * n + u] = e.weight;
      t.next[u * n + v] = e.v;
      t.next[v * n + u] = e.u;
    }
  }
  for (size_t k = 0; k < n; ++k) {
    for (size_t i = 0; i < n; ++i) {
      const double dik = t.dist[i * n + k];
      if (dik == kInf) continue;
      for (size_t j = 0; j < n; ++j) {
        const double via = dik + t.dist[k * n + j];
        if (via < t.dist[i * n + j]) {
          t.dist[i * n + j] = via;
          t.next[i * n + j] = t.next[i * n + k];
        }
      }
    }
  }
  return t;
}

std::vector<int> shortest_path(const ApspTables& t, int u, int v) {
  if (u == v) return {u};
  if (t.d(u, v) == kInf) {
    throw Error(Errc::unreachable, "no path between requested nodes");
  }
  std::vector<int> path{u};
  int cur = u;
  while (cur != v) {
    cur = t.hop(cur, v);
    path.push_back(cur);
  }
  return path;
}

const ScenicEdge& smallest_edge(const ScenicGraph& g) {
  if (g.edges.empty()) throw Error(Errc::empty_graph, "graph has no edges");
  const ScenicEdge* best = &g.edges[0];
  for (const ScenicEdge& e : g.edges) {
    if (e.weight < best->weight) best = &e;  // lowest id wins ties by scan order
  }
  return *best;
}

}  // namespace scenic
