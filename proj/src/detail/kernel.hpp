#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <vector>

#include "emanet/coord.hpp"

namespace emanet::detail {

using int128 = __int128;

inline int cmp128(int128 a, int128 b) { return a < b ? -1 : a > b ? 1 : 0; }

// --- Scalar kernels ---------------------------------------------------------
//
// Everything geometric below is templated over a kernel supplying the scalar
// type and the exact operations the predicates need. LatticeKernel runs on
// int64 coordinates produced by LatticeMap, whose magnitude guard keeps every
// widened form below inside int128. RationalKernel runs on arbitrary exact
// rationals and is the fallback for inputs that do not fit a lattice.

struct LatticeKernel {
  using S = std::int64_t;
  using Wide = int128;

  static int sign(S v) { return v < 0 ? -1 : v > 0 ? 1 : 0; }
  // sign of a + b*sqrt(2)
  static int sign_root2(S a, S b) {
    if (a >= 0 && b >= 0) return (a != 0 || b != 0) ? 1 : 0;
    if (a <= 0 && b <= 0) return -1;
    int128 qa = int128(a) * a;
    int128 qb = int128(b) * b * 2;
    int q = cmp128(qa, qb);
    return a > 0 ? q : -q;
  }
  static S half(S v) {
    assert((v & 1) == 0);
    return v / 2;
  }
  static Wide mul(S a, S b) { return int128(a) * b; }
  static int cmp_wide(const Wide& a, const Wide& b) { return cmp128(a, b); }
  static double approx(S v) { return double(v); }
};

struct RationalKernel {
  using S = Coord;
  using Wide = Coord;

  static int sign(const S& v) { return v.sign(); }
  static int sign_root2(const S& a, const S& b) {
    int sa = a.sign(), sb = b.sign();
    if (sa >= 0 && sb >= 0) return (sa != 0 || sb != 0) ? 1 : 0;
    if (sa <= 0 && sb <= 0) return -1;
    S qa = a * a;
    S qb = b * b * 2;
    int q = qa < qb ? -1 : qa > qb ? 1 : 0;
    return sa > 0 ? q : -q;
  }
  static S half(const S& v) { return v / 2; }
  static Wide mul(const S& a, const S& b) { return a * b; }
  static int cmp_wide(const Wide& a, const Wide& b) { return a < b ? -1 : a > b ? 1 : 0; }
  static double approx(const S& v) { return v.template convert_to<double>(); }
};

// --- Z[sqrt 2] values and 2-vectors ------------------------------------------

// The value a + b*sqrt(2). Ray arc lengths, sweep keys and all boundary
// predicates live here; comparisons reduce to sign_root2 of a difference.
template <class K>
struct Root2 {
  using S = typename K::S;
  S a{}, b{};

  int sign() const { return K::sign_root2(a, b); }
  bool is_zero() const { return K::sign(a) == 0 && K::sign(b) == 0; }

  friend Root2 operator+(const Root2& l, const Root2& r) { return {S(l.a + r.a), S(l.b + r.b)}; }
  friend Root2 operator-(const Root2& l, const Root2& r) { return {S(l.a - r.a), S(l.b - r.b)}; }
  Root2 operator-() const { return {S(-a), S(-b)}; }
  Root2 scaled(const S& f) const { return {S(a * f), S(b * f)}; }
};

template <class K>
int cmp(const Root2<K>& l, const Root2<K>& r) {
  return K::sign_root2(typename K::S(l.a - r.a), typename K::S(l.b - r.b));
}

template <class K>
struct Vec2 {
  using S = typename K::S;
  S x{}, y{};

  friend Vec2 operator+(const Vec2& l, const Vec2& r) { return {S(l.x + r.x), S(l.y + r.y)}; }
  friend Vec2 operator-(const Vec2& l, const Vec2& r) { return {S(l.x - r.x), S(l.y - r.y)}; }
  friend bool operator==(const Vec2& l, const Vec2& r) { return l.x == r.x && l.y == r.y; }
};

template <class K>
typename K::Wide dist2(const Vec2<K>& d) {
  return K::mul(d.x, d.x) + K::mul(d.y, d.y);
}

// sign of (b - a) x (c - a): > 0 counter-clockwise, < 0 clockwise, 0 collinear
template <class K>
int orient_sign(const Vec2<K>& a, const Vec2<K>& b, const Vec2<K>& c) {
  using S = typename K::S;
  return K::cmp_wide(K::mul(S(b.x - a.x), S(c.y - a.y)), K::mul(S(b.y - a.y), S(c.x - a.x)));
}

// --- Direction tables --------------------------------------------------------

// The 8 grade-2 ray directions, counter-clockwise from east, as integer steps.
inline constexpr std::array<std::array<int, 2>, 8> kRayDir = {{
    {{1, 0}}, {{1, 1}}, {{0, 1}}, {{-1, 1}}, {{-1, 0}}, {{-1, -1}}, {{0, -1}}, {{1, -1}},
}};

// Direction of angle m * 22.5 degrees as an unnormalized vector with
// components in Z[sqrt 2]. Odd m (the half-quadrant bisectors) all share the
// squared norm 4 + 2*sqrt(2); even m are the integer axis/diagonal vectors.
// Encoded as {x.a, x.b, y.a, y.b}.
inline constexpr std::array<std::array<int, 4>, 16> kDir16 = {{
    {{1, 0, 0, 0}},    // 0
    {{1, 1, 1, 0}},    // 22.5:  (1+s2, 1)
    {{1, 0, 1, 0}},    // 45
    {{1, 0, 1, 1}},    // 67.5:  (1, 1+s2)
    {{0, 0, 1, 0}},    // 90
    {{-1, 0, 1, 1}},   // 112.5: (-1, 1+s2)
    {{-1, 0, 1, 0}},   // 135
    {{-1, -1, 1, 0}},  // 157.5: (-1-s2, 1)
    {{-1, 0, 0, 0}},   // 180
    {{-1, -1, -1, 0}}, {{-1, 0, -1, 0}}, {{-1, 0, -1, -1}}, {{0, 0, -1, 0}},
    {{1, 0, -1, -1}},  {{1, 0, -1, 0}},  {{1, 1, -1, 0}},
}};

// cross(dir16(m), d): positive when d points counter-clockwise of direction m.
template <class K>
Root2<K> cross_dir16(int m, const Vec2<K>& d) {
  const auto& e = kDir16[m & 15];
  using S = typename K::S;
  return Root2<K>{S(e[0] * d.y - e[2] * d.x), S(e[1] * d.y - e[3] * d.x)};
}

template <class K>
Root2<K> dot_dir16(int m, const Vec2<K>& d) {
  const auto& e = kDir16[m & 15];
  using S = typename K::S;
  return Root2<K>{S(e[0] * d.x + e[2] * d.y), S(e[1] * d.x + e[3] * d.y)};
}

// --- Wedge classification ----------------------------------------------------

// Index in [0, 16) of the half-open wedge [22.5 m, 22.5 (m+1)) containing the
// nonzero direction d. Resolves the octant with integer sign tests and spends
// at most one Z[sqrt 2] sign on the half-quadrant bisector.
template <class K>
int wedge16(const Vec2<K>& d) {
  int sx = K::sign(d.x), sy = K::sign(d.y);
  assert(sx != 0 || sy != 0);
  int octant;
  if (sy > 0) {
    if (sx > 0) {
      int c = K::sign(typename K::S(d.y - d.x));
      octant = c < 0 ? 0 : 1;  // the 45-degree boundary opens octant 1
    } else if (sx == 0) {
      octant = 2;
    } else {
      int c = K::sign(typename K::S(d.y + d.x));  // dy - |dx|
      octant = c > 0 ? 2 : 3;
    }
  } else if (sy == 0) {
    octant = sx > 0 ? 0 : 4;
  } else {
    if (sx < 0) {
      int c = K::sign(typename K::S(d.y - d.x));  // |dy| - |dx|, negated sense
      octant = c > 0 ? 4 : 5;
    } else if (sx == 0) {
      octant = 6;
    } else {
      int c = K::sign(typename K::S(d.y + d.x));
      octant = c < 0 ? 6 : 7;
    }
  }
  // Within octant o the only remaining boundary is the bisector 2o+1; on the
  // bisector the counter-clockwise wedge wins.
  int bisector = 2 * octant + 1;
  return cross_dir16(bisector, d).sign() >= 0 ? bisector : 2 * octant;
}

// Wedge index local to frame `s` (the frame's horizontal is the global
// direction 45 s), or -1 when d lies in the frame's closed lower half-plane
// (local wedges 8..15 or exactly on the local horizontal axis).
template <class K>
int local_wedge(const Vec2<K>& d, int frame) {
  int g = wedge16(d);
  int l = (g - 2 * frame) & 15;
  if (l >= 8) return -1;
  if (l == 0 && cross_dir16(2 * frame, d).sign() == 0) return -1;
  return l;
}

// --- Lattice mapping ---------------------------------------------------------

// Maps a batch of rational values onto a common-denominator int64 lattice,
// pre-scaled so that downstream constructions (midpoints, diagonal crossings)
// stay integral. ok == false when the common denominator or the scaled
// magnitudes exceed the budget; callers then fall back to RationalKernel.
class LatticeMap {
public:
  static LatticeMap build(const std::vector<Coord>& values, std::int64_t limit, int prescale);

  bool ok() const { return ok_; }
  std::int64_t to_lattice(const Coord& c) const;
  Coord from_lattice(std::int64_t v) const { return Coord(v) / Coord(scale_); }

private:
  BigInt den_ = 1;
  BigInt scale_ = 1;  // den * prescale
  bool ok_ = false;
};

}  // namespace emanet::detail
