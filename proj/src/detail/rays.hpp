#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "detail/kernel.hpp"

namespace emanet::detail {

// Grade <= 2 ray traces live on four line families; every pairwise
// interaction reduces to integer-linear forms of the endpoints, so on the
// prescaled lattice all constructed points (crossings, head-on midpoints)
// are again lattice points.
//
// family of a grade-2 direction: 0 horizontal, 1 rising diagonal, 2 vertical,
// 3 falling diagonal; dir and dir+4 share a family.
inline int line_family(int dir8) { return dir8 & 3; }

template <class K>
typename K::S line_key(const Vec2<K>& o, int fam) {
  using S = typename K::S;
  switch (fam) {
    case 0: return o.y;
    case 1: return S(o.y - o.x);
    case 2: return o.x;
    default: return S(o.y + o.x);
  }
}

// position along a line of the given family: x, or y for verticals
template <class K>
typename K::S line_param(const Vec2<K>& p, int fam) {
  return fam == 2 ? p.y : p.x;
}

// signed step count m with pt == o + m * kRayDir[dir8]; pt must lie on the
// ray's supporting line (components of kRayDir are in {-1,0,1})
template <class K>
typename K::S ray_steps(const Vec2<K>& o, int dir8, const Vec2<K>& pt) {
  const auto& v = kRayDir[dir8];
  using S = typename K::S;
  return v[0] != 0 ? S((pt.x - o.x) * v[0]) : S((pt.y - o.y) * v[1]);
}

// arc length of m steps: axis steps have unit length, diagonal steps sqrt(2)
template <class K>
Root2<K> step_time(int dir8, const typename K::S& m) {
  using S = typename K::S;
  return (dir8 & 1) ? Root2<K>{S(0), m} : Root2<K>{m, S(0)};
}

// crossing point of two lines from distinct families fa < fb with keys ka, kb
template <class K>
Vec2<K> family_crossing(int fa, const typename K::S& ka, int fb, const typename K::S& kb) {
  using S = typename K::S;
  if (fa == 0) {
    if (fb == 1) return {S(ka - kb), ka};
    if (fb == 2) return {kb, ka};
    return {S(kb - ka), ka};
  }
  if (fa == 1) {
    if (fb == 2) return {kb, S(ka + kb)};
    return {K::half(S(kb - ka)), K::half(S(ka + kb))};
  }
  return {ka, S(kb - ka)};  // vertical x falling diagonal
}

template <class K>
struct PairEvent {
  Vec2<K> pt;
  typename K::S m1{}, m2{};  // step counts along each ray, >= 0
  bool head_on = false;
};

// The single candidate event of an (unordered) ray pair with distinct
// origins, or nullopt when their forward paths never interact:
//  - distinct families: the line crossing, when it is forward for both;
//  - same line, anti-parallel and facing: the head-on midpoint;
//  - same line, co-directed: the trailing ray blocked at the leading origin;
//  - parallel on distinct lines, or diverging: nothing.
template <class K>
std::optional<PairEvent<K>> pair_event(const Vec2<K>& o1, int d1, const Vec2<K>& o2, int d2) {
  using S = typename K::S;
  int f1 = line_family(d1), f2 = line_family(d2);
  if (f1 == f2) {
    if (line_key(o1, f1) != line_key(o2, f2)) return std::nullopt;
    S m12 = ray_steps(o1, d1, o2);
    assert(K::sign(m12) != 0);
    if (d1 == d2) {
      if (K::sign(m12) > 0) return PairEvent<K>{o2, m12, S(0), false};
      return PairEvent<K>{o1, S(0), S(-m12), false};
    }
    if (K::sign(m12) <= 0) return std::nullopt;
    Vec2<K> mid{K::half(S(o1.x + o2.x)), K::half(S(o1.y + o2.y))};
    S h = K::half(m12);
    return PairEvent<K>{mid, h, h, true};
  }
  Vec2<K> pt = f1 < f2 ? family_crossing<K>(f1, line_key(o1, f1), f2, line_key(o2, f2))
                       : family_crossing<K>(f2, line_key(o2, f2), f1, line_key(o1, f1));
  S m1 = ray_steps(o1, d1, pt);
  if (K::sign(m1) < 0) return std::nullopt;
  S m2 = ray_steps(o2, d2, pt);
  if (K::sign(m2) < 0) return std::nullopt;
  return PairEvent<K>{pt, m1, m2, false};
}

// --- Competition simulation ----------------------------------------------

enum class RayStopCause { BBox, Collision, Parallel };

template <class K>
struct SimRay {
  Vec2<K> origin;
  int dir8 = 0;               // direction in the grade-2 table
  std::int64_t owner_id = 0;  // public point id
  int pub_dir = 0;            // grade-local direction index for reporting
};

template <class K>
struct SimStop {
  typename K::S steps{};  // step count at the stop point
  Vec2<K> pt;
  RayStopCause cause = RayStopCause::BBox;
  int other = -1;  // blocking ray index, -1 for bbox clips
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d649bb133111ebULL;
  return x ^ (x >> 31);
}

// Victim choice for an exact tie. Lex mode stops the ray whose
// (owner id, direction index) is lexicographically larger; seeded mode flips
// a per-pair hash bit so the choice is stable under event reordering.
struct TieBreaker {
  bool seeded = false;
  std::uint64_t seed = 0;

  template <class K>
  int victim(const std::vector<SimRay<K>>& rays, int a, int b) const {
    const auto& ra = rays[a];
    const auto& rb = rays[b];
    bool a_larger = std::pair(ra.owner_id, ra.pub_dir) > std::pair(rb.owner_id, rb.pub_dir);
    if (!seeded) return a_larger ? a : b;
    int lo = a_larger ? b : a, hi = a_larger ? a : b;
    std::uint64_t h = seed;
    h = splitmix64(h ^ (std::uint64_t(rays[lo].owner_id) * 8u + std::uint64_t(rays[lo].pub_dir)));
    h = splitmix64(h ^ (std::uint64_t(rays[hi].owner_id) * 8u + std::uint64_t(rays[hi].pub_dir)));
    return (h & 1) ? lo : hi;
  }
};

template <class K>
typename K::S bbox_steps(const Vec2<K>& o, int dir8, const Vec2<K>& lo, const Vec2<K>& hi) {
  using S = typename K::S;
  const auto& v = kRayDir[dir8];
  bool have = false;
  S m{};
  if (v[0] > 0) { m = S(hi.x - o.x); have = true; }
  else if (v[0] < 0) { m = S(o.x - lo.x); have = true; }
  if (v[1] != 0) {
    S my = v[1] > 0 ? S(hi.y - o.y) : S(o.y - lo.y);
    if (!have || my < m) m = my;
  }
  return m;
}

// Runs the competition: all rays start at t=0 with unit speed; a ray stops at
// the earliest point of its path that another ray reached no later while
// still alive there (traces are closed: a ray keeps blocking through its own
// stop point, and a zero-length trace blocks at its origin). Head-on facing
// rays both stop at their midpoint; exact crossing ties go to the TieBreaker;
// survivors clip at the bbox (which also wins over a blocker arriving at the
// clip point at the same instant).
//
// Rays must be ordered by (owner_id, pub_dir): events are processed in
// (time, point, ray-index) order, which then makes the recorded blocker of a
// multi-way stop the lex-least (owner id, dir) one. Cost: O(R^2 log R).
template <class K>
std::vector<SimStop<K>> simulate(const std::vector<SimRay<K>>& rays, const Vec2<K>& bb_lo,
                                 const Vec2<K>& bb_hi, const TieBreaker& tie) {
  using S = typename K::S;
  const int n = int(rays.size());

  std::vector<SimStop<K>> stops(n);
  for (int i = 0; i < n; ++i) {
    S m = bbox_steps<K>(rays[i].origin, rays[i].dir8, bb_lo, bb_hi);
    const auto& v = kRayDir[rays[i].dir8];
    Vec2<K> pt{S(rays[i].origin.x + m * v[0]), S(rays[i].origin.y + m * v[1])};
    stops[i] = SimStop<K>{m, pt, RayStopCause::BBox, -1};
  }

  struct Ev {
    Root2<K> t;  // processing key: the later of the two arrival times
    Vec2<K> pt;
    int r1, r2;
    S m1, m2;
    bool head_on;
    int tcmp;  // sign of t1 - t2
  };
  std::vector<Ev> events;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rays[i].owner_id == rays[j].owner_id) continue;
      auto ev = pair_event<K>(rays[i].origin, rays[i].dir8, rays[j].origin, rays[j].dir8);
      if (!ev) continue;
      if (ev->m1 > stops[i].steps || ev->m2 > stops[j].steps) continue;  // beyond the bbox
      Root2<K> t1 = step_time<K>(rays[i].dir8, ev->m1);
      Root2<K> t2 = step_time<K>(rays[j].dir8, ev->m2);
      int tc = cmp(t1, t2);
      events.push_back(Ev{tc >= 0 ? t1 : t2, ev->pt, i, j, ev->m1, ev->m2, ev->head_on, tc});
    }
  }
  std::sort(events.begin(), events.end(), [](const Ev& a, const Ev& b) {
    if (int c = cmp(a.t, b.t); c != 0) return c < 0;
    if (a.pt.x != b.pt.x) return a.pt.x < b.pt.x;
    if (a.pt.y != b.pt.y) return a.pt.y < b.pt.y;
    if (a.r1 != b.r1) return a.r1 < b.r1;
    return a.r2 < b.r2;
  });

  auto stop_ray = [&](int r, const S& m, const Vec2<K>& pt, RayStopCause cause, int other) {
    if (m < stops[r].steps) stops[r] = SimStop<K>{m, pt, cause, other};
  };
  for (const auto& e : events) {
    if (e.m1 > stops[e.r1].steps || e.m2 > stops[e.r2].steps) continue;
    RayStopCause cause = line_family(rays[e.r1].dir8) == line_family(rays[e.r2].dir8)
                             ? RayStopCause::Parallel
                             : RayStopCause::Collision;
    if (e.head_on) {
      stop_ray(e.r1, e.m1, e.pt, cause, e.r2);
      stop_ray(e.r2, e.m2, e.pt, cause, e.r1);
    } else if (e.tcmp < 0) {
      stop_ray(e.r2, e.m2, e.pt, cause, e.r1);
    } else if (e.tcmp > 0) {
      stop_ray(e.r1, e.m1, e.pt, cause, e.r2);
    } else {
      int v = tie.victim(rays, e.r1, e.r2);
      int o = v == e.r1 ? e.r2 : e.r1;
      stop_ray(v, v == e.r1 ? e.m1 : e.m2, e.pt, cause, o);
    }
  }
  return stops;
}

}  // namespace emanet::detail
