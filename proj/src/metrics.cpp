#include "emanet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <vector>

#include "emanet/coord.hpp"
#include "emanet/errors.hpp"

namespace emanet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDegPerRad = 180.0 / 3.14159265358979323846;

// Graph re-indexed by vertex position, with per-edge floats computed from
// exact coordinate differences (subtract in rationals, then round once).
struct Indexed {
  struct Arc {
    int to;
    double len;
    double dx, dy;
  };
  std::vector<std::vector<Arc>> adj;
  std::vector<int> original;  // positions, ascending id order
};

int position_of(const PlaneGraph& g, std::int64_t id) {
  auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), id,
                             [](const Vertex& v, std::int64_t key) { return v.id < key; });
  if (it == g.vertices.end() || it->id != id) return -1;
  return int(it - g.vertices.begin());
}

Indexed index_graph(const PlaneGraph& g) {
  Indexed ix;
  ix.adj.resize(g.vertices.size());
  for (int i = 0; i < int(g.vertices.size()); ++i) {
    if (g.vertices[i].kind == VertexKind::Original) ix.original.push_back(i);
  }
  for (const Edge& e : g.edges) {
    int u = position_of(g, e.u);
    int v = position_of(g, e.v);
    if (u < 0 || v < 0) fail(Errc::InternalInvariant, "edge endpoint not among vertices");
    double dx = coord_to_double(Coord(g.vertices[v].x - g.vertices[u].x));
    double dy = coord_to_double(Coord(g.vertices[v].y - g.vertices[u].y));
    double len = std::hypot(dx, dy);
    ix.adj[u].push_back({v, len, dx, dy});
    ix.adj[v].push_back({u, len, -dx, -dy});
  }
  return ix;
}

std::vector<double> dijkstra(const Indexed& ix, int src) {
  std::vector<double> dist(ix.adj.size(), kInf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  dist[src] = 0.0;
  heap.push({0.0, src});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    for (const auto& arc : ix.adj[u]) {
      double nd = d + arc.len;
      if (nd < dist[arc.to]) {
        dist[arc.to] = nd;
        heap.push({nd, arc.to});
      }
    }
  }
  return dist;
}

double euclid(const PlaneGraph& g, int u, int v) {
  double dx = coord_to_double(Coord(g.vertices[v].x - g.vertices[u].x));
  double dy = coord_to_double(Coord(g.vertices[v].y - g.vertices[u].y));
  return std::hypot(dx, dy);
}

}  // namespace

std::map<std::int64_t, double> shortest_paths_from(const PlaneGraph& g, std::int64_t source) {
  int src = position_of(g, source);
  if (src < 0) fail(Errc::InvalidConfig, "shortest-path source is not a vertex");
  auto dist = dijkstra(index_graph(g), src);
  std::map<std::int64_t, double> out;
  for (int i = 0; i < int(g.vertices.size()); ++i) out[g.vertices[i].id] = dist[i];
  return out;
}

std::pair<double, std::pair<std::int64_t, std::int64_t>> spanning_ratio(const PlaneGraph& g) {
  Indexed ix = index_graph(g);
  if (ix.original.size() < 2) {
    std::int64_t id = ix.original.empty() ? 0 : g.vertices[ix.original[0]].id;
    return {1.0, {id, id}};
  }
  double best = 1.0;
  std::pair<std::int64_t, std::int64_t> witness{g.vertices[ix.original[0]].id,
                                                g.vertices[ix.original[0]].id};
  bool any = false;
  for (std::size_t a = 0; a + 1 < ix.original.size(); ++a) {
    int u = ix.original[a];
    auto dist = dijkstra(ix, u);
    for (std::size_t b = a + 1; b < ix.original.size(); ++b) {
      int v = ix.original[b];
      std::pair<std::int64_t, std::int64_t> pair{g.vertices[u].id, g.vertices[v].id};
      if (dist[v] == kInf) return {kInf, pair};  // first disconnected pair
      double de = euclid(g, u, v);
      if (de == 0.0) {
        if (dist[v] > 0.0) return {kInf, pair};
        continue;  // coincident and at distance zero: no stretch to measure
      }
      double r = dist[v] / de;
      if (!any || r > best) {
        best = r;
        witness = pair;
        any = true;
      }
    }
  }
  // straight single-edge paths can round a hair under 1; stretch is never
  // truly below it
  if (best < 1.0) best = 1.0;
  return {best, witness};
}

double min_angle(const PlaneGraph& g) {
  if (g.vertices.empty()) fail(Errc::EmptyGraph, "min_angle of an empty graph");
  Indexed ix = index_graph(g);
  double best = 360.0;
  std::vector<double> angles;
  for (const auto& arcs : ix.adj) {
    if (arcs.size() < 2) continue;
    angles.clear();
    for (const auto& arc : arcs) angles.push_back(std::atan2(arc.dy, arc.dx) * kDegPerRad);
    std::sort(angles.begin(), angles.end());
    for (std::size_t i = 0; i + 1 < angles.size(); ++i) {
      best = std::min(best, angles[i + 1] - angles[i]);
    }
    best = std::min(best, 360.0 - (angles.back() - angles.front()));
  }
  return best;
}

MetricsReport metrics_report(const PlaneGraph& g) {
  MetricsReport r;
  r.point_count = int(g.count_kind(VertexKind::Original));
  r.steiner_points = int(g.count_kind(VertexKind::Steiner));
  r.edge_count = int(g.edges.size());

  Indexed ix = index_graph(g);
  for (const auto& arcs : ix.adj) r.max_degree = std::max(r.max_degree, int(arcs.size()));
  if (!g.vertices.empty()) {
    r.avg_degree = 2.0 * double(g.edges.size()) / double(g.vertices.size());
  }
  for (const Edge& e : g.edges) {
    double len = euclid(g, position_of(g, e.u), position_of(g, e.v));
    r.total_edge_len += len;
    r.max_edge_len = std::max(r.max_edge_len, len);
  }
  if (!g.edges.empty()) r.avg_edge_len = r.total_edge_len / double(g.edges.size());

  r.min_angle_deg = min_angle(g);
  auto [ratio, witness] = spanning_ratio(g);
  r.spanning_ratio = ratio;
  r.witness_pair = witness;
  return r;
}

}  // namespace emanet
