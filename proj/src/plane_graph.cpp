#include "emanet/plane_graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <utility>

#include "detail/kernel.hpp"
#include "emanet/errors.hpp"

namespace emanet {

std::string to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::Original: return "original";
    case VertexKind::Steiner: return "steiner";
    default: return "boundary";
  }
}

VertexKind vertex_kind_from_string(const std::string& s) {
  if (s == "original") return VertexKind::Original;
  if (s == "steiner") return VertexKind::Steiner;
  if (s == "boundary") return VertexKind::Boundary;
  fail(Errc::ParseError, "unknown vertex kind '" + s + "'");
}

const Vertex* PlaneGraph::find_vertex(std::int64_t id) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), id,
                             [](const Vertex& v, std::int64_t key) { return v.id < key; });
  return it != vertices.end() && it->id == id ? &*it : nullptr;
}

std::size_t PlaneGraph::count_kind(VertexKind kind) const {
  return std::size_t(std::count_if(vertices.begin(), vertices.end(),
                                   [&](const Vertex& v) { return v.kind == kind; }));
}

void validate_graph(const PlaneGraph& g) {
  auto broken = [](const std::string& what) { fail(Errc::InternalInvariant, "graph invariant: " + what); };
  std::set<std::pair<Coord, Coord>> coords;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    if (i > 0 && g.vertices[i - 1].id >= g.vertices[i].id) broken("vertex ids not strictly ascending");
    if (!coords.insert({g.vertices[i].x, g.vertices[i].y}).second) broken("coincident vertices");
  }
  std::map<std::int64_t, int> degree;
  const Edge* prev = nullptr;
  for (const Edge& e : g.edges) {
    if (e.u >= e.v) broken("edge not normalized (u < v)");
    if (prev && !(*prev < e)) broken("edges not sorted and unique");
    prev = &e;
    const Vertex* a = g.find_vertex(e.u);
    const Vertex* b = g.find_vertex(e.v);
    if (!a || !b) broken("edge endpoint not a vertex");
    if (a->x == b->x && a->y == b->y) broken("zero-length edge");
    ++degree[e.u];
    ++degree[e.v];
  }
  for (const Vertex& v : g.vertices) {
    if (v.kind != VertexKind::Original && degree[v.id] == 0) {
      broken("isolated " + to_string(v.kind) + " vertex " + std::to_string(v.id));
    }
  }
}

namespace {

using K = detail::RationalKernel;

detail::Vec2<K> vec(const Vertex& v) { return {v.x, v.y}; }

bool point_in_segment_interior(const detail::Vec2<K>& a, const detail::Vec2<K>& b,
                               const detail::Vec2<K>& p) {
  if (detail::orient_sign<K>(a, b, p) != 0) return false;
  Coord fwd = (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y);
  Coord back = (p.x - b.x) * (a.x - b.x) + (p.y - b.y) * (a.y - b.y);
  return fwd > 0 && back > 0;
}

}  // namespace

PlanarityReport check_planarity(const PlaneGraph& g) {
  PlanarityReport report;
  const std::size_t m = g.edges.size();

  struct Geo {
    double x0, x1, y0, y1;
    std::size_t idx;
  };
  std::vector<detail::Vec2<K>> ea(m), eb(m);
  std::vector<Geo> bounds(m), geo(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Vertex* a = g.find_vertex(g.edges[i].u);
    const Vertex* b = g.find_vertex(g.edges[i].v);
    ea[i] = vec(*a);
    eb[i] = vec(*b);
    double ax = coord_to_double(a->x), ay = coord_to_double(a->y);
    double bx = coord_to_double(b->x), by = coord_to_double(b->y);
    double pad = 1e-9 * (1.0 + std::max({std::fabs(ax), std::fabs(ay), std::fabs(bx), std::fabs(by)}));
    bounds[i] = Geo{std::min(ax, bx) - pad, std::max(ax, bx) + pad,
                    std::min(ay, by) - pad, std::max(ay, by) + pad, i};
    geo[i] = bounds[i];
  }
  std::sort(geo.begin(), geo.end(), [](const Geo& a, const Geo& b) {
    if (a.x0 != b.x0) return a.x0 < b.x0;
    return a.idx < b.idx;
  });
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m && geo[j].x0 <= geo[i].x1; ++j) {
      if (geo[j].y0 > geo[i].y1 || geo[j].y1 < geo[i].y0) continue;
      std::size_t p = geo[i].idx, q = geo[j].idx;
      const auto &a = ea[p], &b = eb[p], &c = ea[q], &d = eb[q];
      int o1 = detail::orient_sign<K>(a, b, c), o2 = detail::orient_sign<K>(a, b, d);
      int o3 = detail::orient_sign<K>(c, d, a), o4 = detail::orient_sign<K>(c, d, b);
      if (o1 * o2 < 0 && o3 * o4 < 0) {
        ++report.proper_crossings;
        continue;
      }
      if (o1 == 0 && o2 == 0) {  // collinear pair overlaps iff an endpoint is strictly interior
        if (point_in_segment_interior(a, b, c) || point_in_segment_interior(a, b, d) ||
            point_in_segment_interior(c, d, a) || point_in_segment_interior(c, d, b)) {
          ++report.overlapping_collinear;
        }
      }
    }
  }

  // vertices in the strict interior of an edge (T-junctions)
  std::vector<std::size_t> vs(g.vertices.size());
  for (std::size_t i = 0; i < vs.size(); ++i) vs[i] = i;
  std::vector<double> vx(g.vertices.size());
  for (std::size_t i = 0; i < vx.size(); ++i) vx[i] = coord_to_double(g.vertices[i].x);
  std::sort(vs.begin(), vs.end(), [&](std::size_t a, std::size_t b) { return vx[a] < vx[b]; });
  std::vector<double> sorted_x(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) sorted_x[i] = vx[vs[i]];
  for (std::size_t e = 0; e < m; ++e) {
    const Geo* ge = &bounds[e];
    auto lo = std::lower_bound(sorted_x.begin(), sorted_x.end(), ge->x0) - sorted_x.begin();
    for (std::size_t k = std::size_t(lo); k < vs.size() && sorted_x[k] <= ge->x1; ++k) {
      const Vertex& v = g.vertices[vs[k]];
      if (v.id == g.edges[e].u || v.id == g.edges[e].v) continue;
      if (point_in_segment_interior(ea[e], eb[e], vec(v))) ++report.vertex_on_edge_interior;
    }
  }
  return report;
}

}  // namespace emanet
