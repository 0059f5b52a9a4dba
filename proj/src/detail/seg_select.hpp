#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <optional>
#include <vector>

#include "detail/kernel.hpp"
#include "detail/rays.hpp"

namespace emanet::detail {

// Selection geometry for the simplified graph, shared by the exhaustive
// scans and the wedge-index query path so both decide with identical exact
// predicates. Everything is frame-local only in direction *indices*: vectors
// stay in base coordinates and the frame rotates which kDir16 axes are used.

// Sweep-key binding of one (frame, cone) pair. The primary key is the dot
// product with kDir16[key_axis]; it is strictly positive for any in-cone
// vector. Top cones (3, 4) tie-break on squared distance, flanking cones on
// the in-frame vertical coordinate (dot with kDir16[sec_axis]); both then
// fall back to the smaller id. The two top-cone axes share the squared norm
// 4 + 2*sqrt(2), so their raw keys order exactly like the unit projections
// of the simultaneous sweep and may be compared across cones.
struct ConeKeySpec {
  int key_axis;
  int sec_axis;  // -1 for top cones
  bool top;
};

inline ConeKeySpec cone_key_spec(int frame, int cone) {
  int base = 2 * frame;
  switch (cone) {
    case 3: return {(base + 3) & 15, -1, true};
    case 4: return {(base + 5) & 15, -1, true};
    case 0:
    case 1:
    case 2: return {base & 15, (base + 4) & 15, false};  // rightward sweep: +local x
    default: return {(base + 8) & 15, (base + 4) & 15, false};  // leftward: -local x
  }
}

template <class K>
Root2<K> abs_root2(const Root2<K>& v) {
  return v.sign() < 0 ? -v : v;
}

template <class K>
struct SweepHit {
  int index = -1;  // position in the scanned array
  int cone = -1;   // local wedge of the winner
  Root2<K> key{};  // its primary sweep key
};

// Winners of one full selection pass around `origin` in `frame`: the
// simultaneous sweep over both top cones, and each flanking cone's own
// sweep. Flank slots follow kFlankCones order.
template <class K>
struct FrameSelection {
  std::optional<SweepHit<K>> top;
  std::array<std::optional<SweepHit<K>>, 4> flank;
};

inline constexpr std::array<int, 4> kFlankCones = {1, 2, 5, 6};

inline int flank_slot(int cone) { return cone <= 2 ? cone - 1 : cone - 3; }

// Running winners of one selection pass: the simultaneous sweep over both top
// cones and each flanking cone's own sweep. offer() folds one classified
// vector in; these comparisons are the single source of truth for both the
// exhaustive scan and the wedge-index shortlists, so the two paths cannot
// drift apart.
template <class K>
class SelectionAccum {
 public:
  // d = q - origin, nonzero; cone = local_wedge(d, frame), in [1, 6]
  void offer(int qi, const Vec2<K>& d, int cone, const std::vector<std::int64_t>& ids, int frame) {
    assert(cone >= 1 && cone <= 6);
    ConeKeySpec spec = cone_key_spec(frame, cone);
    Root2<K> key = dot_dir16<K>(spec.key_axis, d);
    if (spec.top) {
      typename K::Wide d2 = dist2<K>(d);
      bool take = top_.index < 0;
      if (!take) {
        int c = cmp<K>(key, top_.key);
        if (c == 0) c = K::cmp_wide(d2, top_.d2);
        take = c < 0 || (c == 0 && ids[qi] < ids[top_.index]);
      }
      if (take) top_ = {qi, cone, key, {}, d2};
    } else {
      Slot& s = flank_[flank_slot(cone)];
      bool take = s.index < 0;
      if (!take) {
        int c = cmp<K>(key, s.key);
        if (c == 0) {
          Root2<K> sec = dot_dir16<K>(spec.sec_axis, d);
          c = cmp<K>(sec, s.sec);
        }
        take = c < 0 || (c == 0 && ids[qi] < ids[s.index]);
      }
      if (take) s = {qi, cone, key, dot_dir16<K>(spec.sec_axis, d), {}};
    }
  }

  FrameSelection<K> result() const {
    FrameSelection<K> out;
    if (top_.index >= 0) out.top = SweepHit<K>{top_.index, top_.cone, top_.key};
    for (int k = 0; k < 4; ++k) {
      if (flank_[k].index >= 0) {
        out.flank[k] = SweepHit<K>{flank_[k].index, flank_[k].cone, flank_[k].key};
      }
    }
    return out;
  }

 private:
  struct Slot {
    int index = -1;
    int cone = -1;
    Root2<K> key{};
    Root2<K> sec{};
    typename K::Wide d2{};
  };
  Slot top_;
  std::array<Slot, 4> flank_;
};

// One linear pass over `pts`, classifying every point against `origin` and
// keeping the best entry per sweep. `skip` excludes the origin's own slot
// (-1 for none); entries coinciding with origin are ignored. `ids` breaks
// exact ties.
template <class K>
FrameSelection<K> selection_sweep(const Vec2<K>& origin, const std::vector<Vec2<K>>& pts,
                                  const std::vector<std::int64_t>& ids, int skip, int frame) {
  SelectionAccum<K> acc;
  for (int qi = 0; qi < int(pts.size()); ++qi) {
    if (qi == skip) continue;
    Vec2<K> d = pts[qi] - origin;
    if (K::sign(d.x) == 0 && K::sign(d.y) == 0) continue;
    int cone = local_wedge<K>(d, frame);
    if (cone < 1 || cone > 6) continue;  // the outermost wedges never compete
    acc.offer(qi, d, cone, ids, frame);
  }
  return acc.result();
}

// The eight non-interference tests, dispatched on the (top cone, flanking
// cone) pair; ds = p_s - p, dc = p_c - p in base coordinates. Left-cone
// cases are the in-frame x-mirror through p of the right-cone conditions.
// Returns true when the candidate blocks the connection.
template <class K>
bool blocked_core(const Vec2<K>& ds, int s_cone, const Vec2<K>& dc, int c_cone, int frame) {
  int base = 2 * frame;
  auto dot = [&](int axis, const Vec2<K>& v) { return dot_dir16<K>(axis & 15, v); };
  bool allowed;
  if (s_cone == 3 && c_cone == 1) {
    // swept before the candidate, and strictly below the 135-degree line
    // through it (the candidate's continued NW ray)
    allowed = cmp<K>(dot(base, ds), dot(base, dc)) < 0 &&
              cmp<K>(dot(base, ds) + dot(base + 4, ds), dot(base, dc) + dot(base + 4, dc)) < 0;
  } else if (s_cone == 4 && c_cone == 6) {
    allowed = cmp<K>(dot(base, dc), dot(base, ds)) < 0 &&
              cmp<K>(dot(base + 4, ds) - dot(base, ds), dot(base + 4, dc) - dot(base, dc)) < 0;
  } else if (s_cone == 3 && c_cone == 2) {
    // swept first along the 22.5-degree axis
    allowed = cmp<K>(dot(base + 1, ds), dot(base + 1, dc)) < 0;
  } else if (s_cone == 4 && c_cone == 5) {
    allowed = cmp<K>(dot(base + 7, ds), dot(base + 7, dc)) < 0;
  } else if (s_cone == 4 && c_cone == 1) {
    // swept first along the 45-degree axis
    allowed = cmp<K>(dot(base + 2, ds), dot(base + 2, dc)) < 0;
  } else if (s_cone == 3 && c_cone == 6) {
    allowed = cmp<K>(dot(base + 6, ds), dot(base + 6, dc)) < 0;
  } else {
    // |p_s - p|_x < |p_s - p_c|_y in frame coordinates; both absolutes are
    // mirror-invariant so one branch serves (4,2) and (3,5)
    assert((s_cone == 4 && c_cone == 2) || (s_cone == 3 && c_cone == 5));
    Root2<K> dy = dot(base + 4, ds) - dot(base + 4, dc);
    allowed = cmp<K>(abs_root2<K>(dot(base, ds)), abs_root2<K>(dy)) < 0;
  }
  return !allowed;
}

// Bend point of the two-leg connection p -> bend -> p_s: the crossing of
// p's in-frame vertical ray with p_s's in-frame SW ray (top-right cone) or
// SE ray (top-left cone). nullopt when p_s sits exactly on p's vertical ray
// (single straight segment); otherwise both legs have positive length.
template <class K>
std::optional<Vec2<K>> bend_core(const Vec2<K>& p, const Vec2<K>& ps, int s_cone, int frame) {
  assert(s_cone == 3 || s_cone == 4);
  int up = (2 + frame) & 7;
  int back_dir;
  if (s_cone == 3) {
    back_dir = (5 + frame) & 7;
  } else {
    if (dot_dir16<K>((2 * frame) & 15, ps - p).sign() == 0) return std::nullopt;
    back_dir = (7 + frame) & 7;
  }
  int fu = line_family(up), fb = line_family(back_dir);
  assert(fu != fb);
  typename K::S ku = line_key<K>(p, fu), kb = line_key<K>(ps, fb);
  return fu < fb ? family_crossing<K>(fu, ku, fb, kb) : family_crossing<K>(fb, kb, fu, ku);
}

}  // namespace emanet::detail
