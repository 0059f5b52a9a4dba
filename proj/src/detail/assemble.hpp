#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "detail/kernel.hpp"
#include "detail/rays.hpp"
#include "emanet/errors.hpp"

namespace emanet::detail {

// Assembles ray traces / elbow legs into a plane graph. All segments must lie
// on the four grade-2 line families. Per supporting line, the covered portion
// is the union of the registered intervals, and edges are emitted between
// consecutive registered vertices inside that union — which both subdivides
// traces at every vertex lying on them and merges collinear overlaps.
// kind ranks: 0 original, 1 steiner, 2 boundary; the lowest rank wins when
// several registrations coincide.
template <class K>
class GraphAssembler {
  using S = typename K::S;

 public:
  int add_vertex(const Vec2<K>& pt, int kind_rank) {
    auto [it, fresh] = index_.try_emplace(std::pair<S, S>{pt.x, pt.y}, int(coords_.size()));
    if (fresh) {
      coords_.push_back(pt);
      kinds_.push_back(kind_rank);
    } else if (kind_rank < kinds_[it->second]) {
      kinds_[it->second] = kind_rank;
    }
    return it->second;
  }

  // both endpoints must already be registered; zero-length segments dropped
  void add_segment(const Vec2<K>& a, const Vec2<K>& b) {
    if (a == b) return;
    Vec2<K> d{S(b.x - a.x), S(b.y - a.y)};
    int fam;
    if (K::sign(d.y) == 0) fam = 0;
    else if (K::sign(d.x) == 0) fam = 2;
    else fam = K::sign(d.x) == K::sign(d.y) ? 1 : 3;
    assert(fam == 0 || fam == 2 || (fam == 1 ? d.x == d.y : K::sign(S(d.x + d.y)) == 0));
    S lo = line_param<K>(a, fam), hi = line_param<K>(b, fam);
    if (hi < lo) std::swap(lo, hi);
    lines_[fam][line_key<K>(a, fam)].push_back({lo, hi});
  }

  struct Built {
    std::vector<Vec2<K>> coords;  // registration order: originals first
    std::vector<int> kinds;
    std::vector<std::pair<int, int>> edges;  // index pairs into coords
    std::int64_t repairs = 0;
  };

  // repair: true inserts steiner vertices at residual proper crossings and
  // counts them; false treats any residual crossing as a broken invariant.
  Built finish(bool repair) {
    Built out;
    emit_line_edges(out.edges);
    while (true) {
      auto hits = proper_crossing_points(out.edges);
      if (hits.empty()) break;
      if (!repair) fail(Errc::InternalInvariant, "edge crossing survived assembly");
      out.repairs += subdivide_at(out.edges, hits);
    }
    out.coords = std::move(coords_);
    out.kinds = std::move(kinds_);
    return out;
  }

 private:
  struct Cut {
    S param;
    int vertex;
  };

  void emit_line_edges(std::vector<std::pair<int, int>>& edges) {
    // cut every populated line at every vertex lying on it
    std::array<std::map<S, std::vector<Cut>>, 4> cuts;
    for (int idx = 0; idx < int(coords_.size()); ++idx) {
      const Vec2<K>& p = coords_[idx];
      for (int fam = 0; fam < 4; ++fam) {
        if (lines_[fam].empty()) continue;
        auto it = lines_[fam].find(line_key<K>(p, fam));
        if (it != lines_[fam].end()) cuts[fam][it->first].push_back({line_param<K>(p, fam), idx});
      }
    }
    for (int fam = 0; fam < 4; ++fam) {
      for (auto& [key, spans] : lines_[fam]) {
        auto& cl = cuts[fam][key];
        std::sort(cl.begin(), cl.end(), [](const Cut& a, const Cut& b) { return a.param < b.param; });
        std::sort(spans.begin(), spans.end());
        std::size_t ci = 0;
        for (std::size_t i = 0; i < spans.size();) {
          S lo = spans[i].first, hi = spans[i].second;
          std::size_t j = i + 1;
          while (j < spans.size() && !(hi < spans[j].first)) {
            if (hi < spans[j].second) hi = spans[j].second;
            ++j;
          }
          i = j;
          while (ci < cl.size() && cl[ci].param < lo) ++ci;
          assert(ci < cl.size() && cl[ci].param == lo);
          while (ci + 1 < cl.size() && !(hi < cl[ci + 1].param)) {
            edges.emplace_back(cl[ci].vertex, cl[ci + 1].vertex);
            ++ci;
          }
          assert(cl[ci].param == hi);
        }
      }
    }
  }

  // every residual proper crossing point, in deterministic scan order, under a
  // banded x-interval scan with float prefilters; exact confirmation via
  // orientation signs
  std::vector<Vec2<K>> proper_crossing_points(const std::vector<std::pair<int, int>>& edges) const {
    struct Geo {
      double x0, x1, y0, y1;
      std::size_t idx;
    };
    std::vector<Geo> geo(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Vec2<K>& a = coords_[edges[i].first];
      const Vec2<K>& b = coords_[edges[i].second];
      double ax = K::approx(a.x), ay = K::approx(a.y);
      double bx = K::approx(b.x), by = K::approx(b.y);
      double pad = 1e-9 * (1.0 + std::max(std::abs(ax) + std::abs(ay), std::abs(bx) + std::abs(by)));
      geo[i] = Geo{std::min(ax, bx) - pad, std::max(ax, bx) + pad,
                   std::min(ay, by) - pad, std::max(ay, by) + pad, i};
    }
    std::sort(geo.begin(), geo.end(), [&](const Geo& a, const Geo& b) {
      if (a.x0 != b.x0) return a.x0 < b.x0;
      return edges[a.idx] < edges[b.idx];
    });
    std::vector<Vec2<K>> hits;
    for (std::size_t i = 0; i < geo.size(); ++i) {
      for (std::size_t j = i + 1; j < geo.size() && geo[j].x0 <= geo[i].x1; ++j) {
        if (geo[j].y0 > geo[i].y1 || geo[j].y1 < geo[i].y0) continue;
        std::size_t ei = geo[i].idx, ej = geo[j].idx;
        const Vec2<K>& a = coords_[edges[ei].first];
        const Vec2<K>& b = coords_[edges[ei].second];
        const Vec2<K>& c = coords_[edges[ej].first];
        const Vec2<K>& d = coords_[edges[ej].second];
        if (orient_sign<K>(a, b, c) * orient_sign<K>(a, b, d) >= 0) continue;
        if (orient_sign<K>(c, d, a) * orient_sign<K>(c, d, b) >= 0) continue;
        hits.push_back(segment_crossing(a, b, c, d));
      }
    }
    return hits;
  }

  static int fam_of(const Vec2<K>& p, const Vec2<K>& q) {
    Vec2<K> v{S(q.x - p.x), S(q.y - p.y)};
    if (K::sign(v.y) == 0) return 0;
    if (K::sign(v.x) == 0) return 2;
    return K::sign(v.x) == K::sign(v.y) ? 1 : 3;
  }

  // crossing point of two properly crossing family-line segments
  static Vec2<K> segment_crossing(const Vec2<K>& a, const Vec2<K>& b, const Vec2<K>& c,
                                  const Vec2<K>& d) {
    int f1 = fam_of(a, b), f2 = fam_of(c, d);
    assert(f1 != f2);  // parallel family segments cannot properly cross
    return f1 < f2 ? family_crossing<K>(f1, line_key<K>(a, f1), f2, line_key<K>(c, f2))
                   : family_crossing<K>(f2, line_key<K>(c, f2), f1, line_key<K>(a, f1));
  }

  // insert one steiner vertex per distinct crossing point, then cut every edge
  // at every inserted vertex lying in its interior — a vertex subdivides all
  // segments through it, the same convention emit_line_edges applies. Returns
  // the number of vertices inserted.
  std::int64_t subdivide_at(std::vector<std::pair<int, int>>& edges, const std::vector<Vec2<K>>& pts) {
    std::vector<int> fresh;
    for (const Vec2<K>& p : pts) {
      int before = int(coords_.size());
      int w = add_vertex(p, 1);
      if (w == before) fresh.push_back(w);
    }
    // no edge holds a pre-existing vertex in its interior, so every crossing
    // point must be new; a stale point here would stall the repair loop
    if (fresh.empty()) fail(Errc::InternalInvariant, "edge crossing at an existing vertex");
    // the supporting lines a vertex can subdivide, one per family
    std::array<std::map<S, std::vector<std::pair<S, int>>>, 4> on_line;
    for (int w : fresh) {
      for (int fam = 0; fam < 4; ++fam) {
        on_line[fam][line_key<K>(coords_[w], fam)].emplace_back(line_param<K>(coords_[w], fam), w);
      }
    }
    for (auto& fam_lines : on_line) {
      for (auto& [key, cl] : fam_lines) std::sort(cl.begin(), cl.end());
    }
    std::size_t m = edges.size();
    for (std::size_t e = 0; e < m; ++e) {
      auto [u, v] = edges[e];
      int fam = fam_of(coords_[u], coords_[v]);
      auto it = on_line[fam].find(line_key<K>(coords_[u], fam));
      if (it == on_line[fam].end()) continue;
      S pu = line_param<K>(coords_[u], fam), pv = line_param<K>(coords_[v], fam);
      if (pv < pu) {
        std::swap(u, v);
        std::swap(pu, pv);
      }
      const auto& all = it->second;
      auto first = std::upper_bound(
          all.begin(), all.end(), pu,
          [](const S& val, const std::pair<S, int>& c) { return val < c.first; });
      std::vector<std::pair<S, int>> cuts;  // strictly interior (param, vertex)
      for (auto q = first; q != all.end() && q->first < pv; ++q) cuts.push_back(*q);
      if (cuts.empty()) continue;
      edges[e] = {u, cuts.front().second};
      for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        edges.emplace_back(cuts[i].second, cuts[i + 1].second);
      }
      edges.emplace_back(cuts.back().second, v);
    }
    return std::int64_t(fresh.size());
  }

  std::map<std::pair<S, S>, int> index_;
  std::vector<Vec2<K>> coords_;
  std::vector<int> kinds_;
  std::array<std::map<S, std::vector<std::pair<S, S>>>, 4> lines_;
};

}  // namespace emanet::detail
