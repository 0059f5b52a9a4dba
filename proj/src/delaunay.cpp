#include "emanet/delaunay.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "detail/validate.hpp"
#include "emanet/errors.hpp"

namespace emanet {

namespace {

int sgn(const Coord& v) { return v.is_zero() ? 0 : (v > 0 ? 1 : -1); }

// Incremental triangulation over points inserted in lexicographic (x, y)
// order. The mesh is stored as a map from each directed edge (a, b) of a
// counterclockwise triangle (a, b, c) to its opposite vertex c, so the
// neighbor across an edge is the entry for the reversed direction and hull
// edges are the ones with only a single direction present.
class Triangulator {
 public:
  Triangulator(std::vector<Coord> xs, std::vector<Coord> ys)
      : xs_(std::move(xs)), ys_(std::move(ys)), hnext_(xs_.size(), -1), hprev_(xs_.size(), -1) {}

  int orient(int a, int b, int c) const {
    return sgn((xs_[b] - xs_[a]) * (ys_[c] - ys_[a]) - (ys_[b] - ys_[a]) * (xs_[c] - xs_[a]));
  }

  // > 0 when d lies strictly inside the circumcircle of the counterclockwise
  // triangle (a, b, c); 0 when the four points are concyclic.
  int incircle(int a, int b, int c, int d) const {
    Coord adx = xs_[a] - xs_[d], ady = ys_[a] - ys_[d];
    Coord bdx = xs_[b] - xs_[d], bdy = ys_[b] - ys_[d];
    Coord cdx = xs_[c] - xs_[d], cdy = ys_[c] - ys_[d];
    Coord alift = adx * adx + ady * ady;
    Coord blift = bdx * bdx + bdy * bdy;
    Coord clift = cdx * cdx + cdy * cdy;
    return sgn(adx * (bdy * clift - cdy * blift) - ady * (bdx * clift - cdx * blift) +
               alift * (bdx * cdy - cdx * bdy));
  }

  // Seeds the mesh with a fan from a collinear chain (sorted along its line)
  // to the first off-line point, then records the hull cycle and the last
  // inserted point.
  void seed(const std::vector<int>& chain, int apex) {
    int s = orient(chain[0], chain[1], apex);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      if (s > 0)
        add_tri(chain[i], chain[i + 1], apex);
      else
        add_tri(chain[i + 1], chain[i], apex);
    }
    std::vector<int> cycle;  // counterclockwise hull
    if (s > 0)
      cycle.assign(chain.begin(), chain.end());
    else
      cycle.assign(chain.rbegin(), chain.rend());
    cycle.push_back(apex);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
      hnext_[u] = v;
      hprev_[v] = u;
    }
    last_ = apex;
  }

  // Inserts p, which must be lexicographically greater than every point
  // inserted so far (and therefore strictly outside the current hull).
  void insert(int p) {
    std::vector<std::pair<int, int>> vis;  // strictly visible hull edges, ccw
    std::size_t guard = xs_.size() + 2;
    int u = last_;
    while (orient(hprev_[u], u, p) < 0) {
      vis.push_back({hprev_[u], u});
      u = hprev_[u];
      if (vis.size() > guard) fail(Errc::InternalInvariant, "hull walk did not terminate");
    }
    std::reverse(vis.begin(), vis.end());
    int a = vis.empty() ? last_ : vis.front().first;
    u = last_;
    while (orient(u, hnext_[u], p) < 0) {
      vis.push_back({u, hnext_[u]});
      u = hnext_[u];
      if (vis.size() > guard) fail(Errc::InternalInvariant, "hull walk did not terminate");
    }
    int b = vis.empty() ? last_ : vis.back().second;
    if (vis.empty()) fail(Errc::InternalInvariant, "no hull edge visible from new point");

    for (auto [s, t] : vis) add_tri(t, s, p);
    hnext_[a] = p;
    hprev_[p] = a;
    hnext_[p] = b;
    hprev_[b] = p;
    for (auto [s, t] : vis) legalize(p, t, s);
    last_ = p;
  }

  // Flips every exactly concyclic pair of adjacent triangles whose shared
  // diagonal is not the lexicographically smallest of the quadrilateral's
  // two, sweeping in deterministic order until stable. Returns the number of
  // diagonals replaced.
  std::int64_t normalize_cocircular() {
    std::int64_t flips = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<std::pair<int, int>> interior;
      for (const auto& [e, apex] : tri_)
        if (e.first < e.second && tri_.count({e.second, e.first})) interior.push_back(e);
      for (auto [a, b] : interior) {
        auto fwd = tri_.find({a, b});
        auto rev = tri_.find({b, a});
        if (fwd == tri_.end() || rev == tri_.end()) continue;  // flipped away this sweep
        int c = fwd->second, d = rev->second;
        if (incircle(a, b, c, d) != 0) continue;
        if (diag_key(c, d) < diag_key(a, b)) {
          remove_tri(a, b, c);
          remove_tri(b, a, d);
          add_tri(c, a, d);
          add_tri(d, b, c);
          ++flips;
          changed = true;
        }
      }
    }
    return flips;
  }

  const std::map<std::pair<int, int>, int>& triangles() const { return tri_; }

 private:
  void add_tri(int a, int b, int c) {
    bool ok = tri_.emplace(std::pair{a, b}, c).second;
    ok = tri_.emplace(std::pair{b, c}, a).second && ok;
    ok = tri_.emplace(std::pair{c, a}, b).second && ok;
    if (!ok) fail(Errc::InternalInvariant, "triangulation edge written twice");
  }

  void remove_tri(int a, int b, int c) {
    std::size_t n = tri_.erase({a, b}) + tri_.erase({b, c}) + tri_.erase({c, a});
    if (n != 3) fail(Errc::InternalInvariant, "triangulation edge missing on removal");
  }

  // Restores the Delaunay condition around p; requires tri_[{x, y}] == p.
  void legalize(int p, int x, int y) {
    auto rev = tri_.find({y, x});
    if (rev == tri_.end()) return;
    int w = rev->second;
    if (incircle(y, x, w, p) > 0) {
      remove_tri(x, y, p);
      remove_tri(y, x, w);
      add_tri(p, x, w);
      add_tri(w, y, p);
      legalize(p, x, w);
      legalize(p, w, y);
    }
  }

  using PointKey = std::pair<Coord, Coord>;
  std::pair<PointKey, PointKey> diag_key(int u, int v) const {
    PointKey pu{xs_[u], ys_[u]}, pv{xs_[v], ys_[v]};
    return pu < pv ? std::pair{pu, pv} : std::pair{pv, pu};
  }

  std::vector<Coord> xs_, ys_;
  std::map<std::pair<int, int>, int> tri_;
  std::vector<int> hnext_, hprev_;
  int last_ = -1;
};

}  // namespace

DelaunayResult delaunay_mesh(const std::vector<Point>& points) {
  auto by_id = detail::validated_sorted_points(points);
  int n = int(by_id.size());

  DelaunayResult out;
  PlaneGraph& g = out.graph;
  g.meta.algorithm = "delaunay";
  g.meta.grade = 0;
  g.meta.tie_policy = "lex";
  for (const Point& p : by_id) g.vertices.push_back({p.id, p.x, p.y, VertexKind::Original});

  std::vector<Coord> xs(n), ys(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = by_id[i].x;
    ys[i] = by_id[i].y;
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    return xs[i] != xs[j] ? xs[i] < xs[j] : ys[i] < ys[j];
  });

  Triangulator tr(xs, ys);
  int first_off_line = n;  // index into `order` of the first non-collinear point
  for (int k = 2; k < n; ++k) {
    if (tr.orient(order[0], order[1], order[k]) != 0) {
      first_off_line = k;
      break;
    }
  }

  if (n < 3 || first_off_line == n) {
    g.meta.diagnostics.warnings.push_back(
        n < 3 ? "degenerate input: fewer than 3 points; built a path graph instead of a "
                "triangulation"
              : "degenerate input: all points collinear; built a path graph instead of a "
                "triangulation");
    for (int i = 0; i + 1 < n; ++i) {
      std::int64_t u = by_id[order[i]].id, v = by_id[order[i + 1]].id;
      g.edges.push_back({std::min(u, v), std::max(u, v)});
    }
    std::sort(g.edges.begin(), g.edges.end());
    return out;
  }

  std::vector<int> chain(order.begin(), order.begin() + first_off_line);
  tr.seed(chain, order[first_off_line]);
  for (int k = first_off_line + 1; k < n; ++k) tr.insert(order[k]);
  g.meta.diagnostics.cocircular_flips = tr.normalize_cocircular();

  std::set<std::pair<std::int64_t, std::int64_t>> edge_set;
  for (const auto& [e, c] : tr.triangles()) {
    std::int64_t u = by_id[e.first].id, v = by_id[e.second].id;
    edge_set.insert({std::min(u, v), std::max(u, v)});
    if (e.first < e.second && e.first < c) {
      std::array<std::int64_t, 3> tri{u, v, by_id[c].id};
      std::sort(tri.begin(), tri.end());
      out.triangles.push_back(tri);
    }
  }
  for (auto [u, v] : edge_set) g.edges.push_back({u, v});
  std::sort(out.triangles.begin(), out.triangles.end());
  return out;
}

PlaneGraph delaunay(const std::vector<Point>& points) {
  return delaunay_mesh(points).graph;
}

namespace {

struct MeshLine {
  long number = 0;
  std::vector<std::string> tokens;
};

std::vector<MeshLine> tokenize_mesh(const std::string& text) {
  std::vector<MeshLine> out;
  std::istringstream in(text);
  std::string line;
  long number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    MeshLine ml{number, {}};
    std::string tok;
    while (fields >> tok) ml.tokens.push_back(std::move(tok));
    if (!ml.tokens.empty()) out.push_back(std::move(ml));
  }
  return out;
}

long long parse_mesh_count(const std::string& tok, const char* what, long line) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos == tok.size() && v >= 0) return v;
  } catch (const std::exception&) {
  }
  fail_at(Errc::ParseError, std::string("bad ") + what + " '" + tok + "'", line);
}

// Coordinate literal from a mesh file; tolerates the exponent form that
// %.17g-style writers produce ("2.5e-03") on top of plain decimals.
Coord parse_mesh_coord(const std::string& tok, long line) {
  try {
    auto epos = tok.find_first_of("eE");
    if (epos == std::string::npos) return parse_coord(tok);
    Coord mant = parse_coord(tok.substr(0, epos));
    std::string exp_part = tok.substr(epos + 1);
    std::size_t pos = 0;
    long ex = std::stol(exp_part, &pos);
    if (pos != exp_part.size()) fail(Errc::ParseError, "bad exponent");
    BigInt p10 = 1;
    for (long i = 0; i < (ex < 0 ? -ex : ex); ++i) p10 *= 10;
    return ex >= 0 ? Coord(coord_num(mant) * p10, coord_den(mant)) : mant / Coord(p10);
  } catch (const std::exception&) {
    fail_at(Errc::ParseError, "bad coordinate '" + tok + "'", line);
  }
}

}  // namespace

PlaneGraph import_triangle(const TriangleMeshFiles& files, const std::vector<Point>& originals) {
  auto node_lines = tokenize_mesh(files.node_text);
  if (node_lines.empty()) fail_at(Errc::ParseError, "node data: missing header", 1);
  const MeshLine& nh = node_lines.front();
  if (nh.tokens.size() < 4)
    fail_at(Errc::ParseError, "node header needs <count> <dim> <#attrs> <#markers>", nh.number);
  long long vertex_count = parse_mesh_count(nh.tokens[0], "vertex count", nh.number);
  long long dim = parse_mesh_count(nh.tokens[1], "dimension", nh.number);
  if (dim != 2) fail_at(Errc::ParseError, "only dimension 2 is supported", nh.number);
  if (std::ssize(node_lines) - 1 != vertex_count)
    fail_at(Errc::ParseError,
            "vertex count " + std::to_string(vertex_count) + " does not match " +
                std::to_string(node_lines.size() - 1) + " records",
            nh.number);

  std::set<std::pair<Coord, Coord>> known;
  for (const Point& p : originals) known.insert({p.x, p.y});

  PlaneGraph g;
  g.meta.algorithm = "triangle-import";
  std::map<long long, std::int64_t> id_by_index;
  long long base = -1;
  for (std::size_t r = 1; r < node_lines.size(); ++r) {
    const MeshLine& ln = node_lines[r];
    if (ln.tokens.size() < 3)
      fail_at(Errc::ParseError, "vertex record needs <index> <x> <y>", ln.number);
    long long idx = parse_mesh_count(ln.tokens[0], "vertex index", ln.number);
    if (base < 0) {
      base = idx;
      if (base != 0 && base != 1)
        fail_at(Errc::ParseError, "vertex indices must start at 0 or 1", ln.number);
    }
    Coord x = parse_mesh_coord(ln.tokens[1], ln.number);
    Coord y = parse_mesh_coord(ln.tokens[2], ln.number);
    std::int64_t id = idx - base + 1;
    if (!id_by_index.emplace(idx, id).second)
      fail_at(Errc::ParseError, "duplicate vertex index " + std::to_string(idx), ln.number);
    VertexKind kind = (known.empty() || known.count({x, y})) ? VertexKind::Original
                                                             : VertexKind::Steiner;
    g.vertices.push_back({id, x, y, kind});
  }
  std::sort(g.vertices.begin(), g.vertices.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });

  auto ele_lines = tokenize_mesh(files.ele_text);
  if (ele_lines.empty()) fail_at(Errc::ParseError, "element data: missing header", 1);
  const MeshLine& eh = ele_lines.front();
  if (eh.tokens.size() < 3)
    fail_at(Errc::ParseError, "element header needs <count> <nodes-per-element> <#attrs>",
            eh.number);
  long long element_count = parse_mesh_count(eh.tokens[0], "element count", eh.number);
  long long per_element = parse_mesh_count(eh.tokens[1], "nodes per element", eh.number);
  if (per_element != 3)
    fail_at(Errc::ParseError, "only 3-node elements are supported", eh.number);
  if (std::ssize(ele_lines) - 1 != element_count)
    fail_at(Errc::ParseError,
            "element count " + std::to_string(element_count) + " does not match " +
                std::to_string(ele_lines.size() - 1) + " records",
            eh.number);

  std::set<std::pair<std::int64_t, std::int64_t>> edge_set;
  for (std::size_t r = 1; r < ele_lines.size(); ++r) {
    const MeshLine& ln = ele_lines[r];
    if (ln.tokens.size() < 4)
      fail_at(Errc::ParseError, "element record needs <index> <v1> <v2> <v3>", ln.number);
    std::array<std::int64_t, 3> ids{};
    for (int k = 0; k < 3; ++k) {
      long long ref = parse_mesh_count(ln.tokens[k + 1], "vertex reference", ln.number);
      auto it = id_by_index.find(ref);
      if (it == id_by_index.end())
        fail_at(Errc::ParseError, "unknown vertex index " + std::to_string(ref), ln.number);
      ids[k] = it->second;
    }
    if (ids[0] == ids[1] || ids[1] == ids[2] || ids[0] == ids[2])
      fail_at(Errc::ParseError, "degenerate element with a repeated vertex", ln.number);
    for (int k = 0; k < 3; ++k) {
      std::int64_t u = ids[k], v = ids[(k + 1) % 3];
      edge_set.insert({std::min(u, v), std::max(u, v)});
    }
  }
  for (auto [u, v] : edge_set) g.edges.push_back({u, v});
  return g;
}

}  // namespace emanet
