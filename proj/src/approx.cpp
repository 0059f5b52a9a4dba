#include "detail/approx.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "detail/rays.hpp"
#include "emanet/errors.hpp"

namespace emanet::detail {

namespace {

struct FRay {
  double ox, oy, ux, uy;
  std::int64_t owner_id;
  int pub_dir;
};

struct FStop {
  double t;
  double x, y;
  bool bbox = true;
};

double cross(double ax, double ay, double bx, double by) { return ax * by - ay * bx; }

int tie_victim(const std::vector<FRay>& rays, int a, int b, const TiePolicy& tie) {
  const auto& ra = rays[a];
  const auto& rb = rays[b];
  bool a_larger = std::pair(ra.owner_id, ra.pub_dir) > std::pair(rb.owner_id, rb.pub_dir);
  if (tie.kind != TiePolicyKind::Seeded) return a_larger ? a : b;
  int lo = a_larger ? b : a, hi = a_larger ? a : b;
  std::uint64_t h = tie.seed;
  h = splitmix64(h ^ (std::uint64_t(rays[lo].owner_id) * 8u + std::uint64_t(rays[lo].pub_dir)));
  h = splitmix64(h ^ (std::uint64_t(rays[hi].owner_id) * 8u + std::uint64_t(rays[hi].pub_dir)));
  return (h & 1) ? lo : hi;
}

}  // namespace

PlaneGraph build_emanation_approx(const std::vector<Point>& by_id, int grade, const BBox& bbox,
                                  const TiePolicy& tie) {
  const int ray_count = 1 << (grade + 1);
  const double xmin = coord_to_double(bbox.xmin), xmax = coord_to_double(bbox.xmax);
  const double ymin = coord_to_double(bbox.ymin), ymax = coord_to_double(bbox.ymax);
  const double extent = std::max({1.0, xmax - xmin, ymax - ymin});
  const double eps = 1e-9 * extent;

  std::vector<double> ux(ray_count), uy(ray_count);
  const double step = M_PI / double(1 << grade);
  for (int i = 0; i < ray_count; ++i) {
    ux[i] = std::cos(step * i);
    uy[i] = std::sin(step * i);
  }

  std::vector<FRay> rays;
  rays.reserve(by_id.size() * std::size_t(ray_count));
  for (const Point& p : by_id) {
    double px = coord_to_double(p.x), py = coord_to_double(p.y);
    for (int i = 0; i < ray_count; ++i) rays.push_back({px, py, ux[i], uy[i], p.id, i});
  }
  const int n = int(rays.size());

  std::vector<FStop> stops(n);
  for (int i = 0; i < n; ++i) {
    const FRay& r = rays[i];
    double t = std::numeric_limits<double>::infinity();
    if (r.ux > eps) t = std::min(t, (xmax - r.ox) / r.ux);
    if (r.ux < -eps) t = std::min(t, (xmin - r.ox) / r.ux);
    if (r.uy > eps) t = std::min(t, (ymax - r.oy) / r.uy);
    if (r.uy < -eps) t = std::min(t, (ymin - r.oy) / r.uy);
    t = std::max(t, 0.0);
    stops[i] = FStop{t, r.ox + t * r.ux, r.oy + t * r.uy, true};
  }

  struct Ev {
    double key, x, y, t1, t2;
    int r1, r2;
    bool head_on;
  };
  std::vector<Ev> events;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const FRay &a = rays[i], &b = rays[j];
      if (a.owner_id == b.owner_id) continue;
      double wx = b.ox - a.ox, wy = b.oy - a.oy;
      double denom = cross(a.ux, a.uy, b.ux, b.uy);
      double t1, t2, px, py;
      bool head_on = false;
      if (std::fabs(denom) < 1e-12) {
        if (std::fabs(cross(a.ux, a.uy, wx, wy)) > eps) continue;  // parallel, offset lines
        double s = a.ux * wx + a.uy * wy;  // position of b's origin along ray a
        if (a.ux * b.ux + a.uy * b.uy < 0) {  // anti-parallel
          if (s <= eps) continue;             // diverging
          t1 = t2 = s / 2;
          px = a.ox + t1 * a.ux;
          py = a.oy + t1 * a.uy;
          head_on = true;
        } else if (s > eps) {  // co-directed, a trails b
          t1 = s;
          t2 = 0;
          px = b.ox;
          py = b.oy;
        } else {  // co-directed, b trails a
          t1 = 0;
          t2 = -s;
          px = a.ox;
          py = a.oy;
        }
      } else {
        t1 = cross(wx, wy, b.ux, b.uy) / denom;
        t2 = cross(wx, wy, a.ux, a.uy) / denom;
        if (t1 < -eps || t2 < -eps) continue;
        t1 = std::max(t1, 0.0);
        t2 = std::max(t2, 0.0);
        px = a.ox + t1 * a.ux;
        py = a.oy + t1 * a.uy;
      }
      if (t1 > stops[i].t + eps || t2 > stops[j].t + eps) continue;
      events.push_back(Ev{std::max(t1, t2), px, py, t1, t2, i, j, head_on});
    }
  }
  std::sort(events.begin(), events.end(), [](const Ev& a, const Ev& b) {
    if (a.key != b.key) return a.key < b.key;
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    if (a.r1 != b.r1) return a.r1 < b.r1;
    return a.r2 < b.r2;
  });

  auto stop_ray = [&](int r, double t, double x, double y) {
    if (t < stops[r].t - eps) stops[r] = FStop{t, x, y, false};
  };
  for (const Ev& e : events) {
    if (e.t1 > stops[e.r1].t + eps || e.t2 > stops[e.r2].t + eps) continue;
    if (e.head_on) {
      stop_ray(e.r1, e.t1, e.x, e.y);
      stop_ray(e.r2, e.t2, e.x, e.y);
    } else if (std::fabs(e.t1 - e.t2) <= eps) {
      int v = tie_victim(rays, e.r1, e.r2, tie);
      stop_ray(v, v == e.r1 ? e.t1 : e.t2, e.x, e.y);
    } else if (e.t1 < e.t2) {
      stop_ray(e.r2, e.t2, e.x, e.y);
    } else {
      stop_ray(e.r1, e.t1, e.x, e.y);
    }
  }

  // vertex registry on the tolerance grid; originals first so they win merges
  std::map<std::pair<std::int64_t, std::int64_t>, int> cells;
  struct V {
    double x, y;
    Coord cx, cy;
    int kind;
  };
  std::vector<V> verts;
  auto cell_key = [&](double x, double y) {
    return std::pair{std::int64_t(std::llround(x / eps)), std::int64_t(std::llround(y / eps))};
  };
  auto register_vertex = [&](double x, double y, const Coord& cx, const Coord& cy, int kind) {
    auto [it, fresh] = cells.try_emplace(cell_key(x, y), int(verts.size()));
    if (fresh) {
      verts.push_back(V{x, y, cx, cy, kind});
    } else if (kind < verts[it->second].kind) {
      verts[it->second].kind = kind;
    }
    return it->second;
  };
  for (const Point& p : by_id) {
    int idx = register_vertex(coord_to_double(p.x), coord_to_double(p.y), p.x, p.y, 0);
    if (idx != int(verts.size()) - 1) {
      fail(Errc::DegenerateInput, "approximate mode: points closer than the merge tolerance");
    }
  }
  for (int i = 0; i < n; ++i) {
    if (stops[i].t <= eps) continue;  // degenerate trace
    register_vertex(stops[i].x, stops[i].y, coord_from_double(stops[i].x),
                    coord_from_double(stops[i].y), stops[i].bbox ? 2 : 1);
  }

  // subdivide each trace at every vertex within tolerance of it
  std::set<std::pair<int, int>> edge_set;
  for (int i = 0; i < n; ++i) {
    if (stops[i].t <= eps) continue;
    const FRay& r = rays[i];
    std::vector<std::pair<double, int>> on_trace;
    for (int v = 0; v < int(verts.size()); ++v) {
      double wx = verts[v].x - r.ox, wy = verts[v].y - r.oy;
      double s = wx * r.ux + wy * r.uy;
      if (s < -eps || s > stops[i].t + eps) continue;
      if (std::fabs(cross(r.ux, r.uy, wx, wy)) > eps) continue;
      on_trace.push_back({s, v});
    }
    std::sort(on_trace.begin(), on_trace.end());
    for (std::size_t k = 1; k < on_trace.size(); ++k) {
      int u = on_trace[k - 1].second, v = on_trace[k].second;
      if (u == v) continue;
      edge_set.insert({std::min(u, v), std::max(u, v)});
    }
  }

  // public ids: originals keep theirs, fresh vertices follow in coord order;
  // fresh vertices that ended up isolated (degenerate-trace remnants) are dropped
  const int orig = int(by_id.size());
  std::vector<int> degree(verts.size(), 0);
  for (auto [a, b] : edge_set) {
    ++degree[a];
    ++degree[b];
  }
  std::vector<int> fresh;
  for (int v = orig; v < int(verts.size()); ++v) {
    if (degree[v] > 0) fresh.push_back(v);
  }
  std::sort(fresh.begin(), fresh.end(), [&](int a, int b) {
    if (verts[a].x != verts[b].x) return verts[a].x < verts[b].x;
    return verts[a].y < verts[b].y;
  });
  std::vector<std::int64_t> ids(verts.size());
  for (int v = 0; v < orig; ++v) ids[v] = by_id[v].id;
  std::int64_t next = by_id.back().id + 1;
  for (int v : fresh) ids[v] = next++;

  PlaneGraph g;
  g.meta.algorithm = "emanation";
  g.meta.grade = grade;
  g.meta.tie_policy =
      tie.kind == TiePolicyKind::Seeded ? "seeded:" + std::to_string(tie.seed) : "lex";
  g.meta.diagnostics.warnings.push_back(
      "approximate mode: grade >= 3 uses float64 simulation with 1e-9 tolerances; "
      "planarity not exactly enforced");
  auto kind_of = [](int rank) {
    return rank == 0 ? VertexKind::Original
         : rank == 1 ? VertexKind::Steiner
                     : VertexKind::Boundary;
  };
  for (int v = 0; v < orig; ++v) g.vertices.push_back({ids[v], verts[v].cx, verts[v].cy, kind_of(verts[v].kind)});
  for (int v : fresh) g.vertices.push_back({ids[v], verts[v].cx, verts[v].cy, kind_of(verts[v].kind)});
  for (auto [a, b] : edge_set) {
    std::int64_t u = ids[a], v = ids[b];
    if (v < u) std::swap(u, v);
    g.edges.push_back({u, v});
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

}  // namespace emanet::detail
