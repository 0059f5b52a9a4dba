#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "emanet/coord.hpp"

namespace emanet {

struct Point {
  std::int64_t id = 0;
  Coord x, y;
};

// Ray direction index, counter-clockwise from east. Grade k uses 2^(k+1)
// evenly spaced rays; grade 2 gives the 8 directions at 45-degree steps that
// all exact predicates below are defined over (grade 1 uses the even indices).
using DirIndex = int;

// Logical rotation step. Frame s maps logical direction j to base direction
// (j + s) mod 8; geometry is always evaluated in base coordinates by
// re-indexing directions, never by rotating point coordinates.
using Frame = int;

inline constexpr int kFrameCount = 8;

// The half-open wedges partitioning the open upper half-plane of a frame,
// bounded by the horizontal (r1/r5), the diagonals (r2/r3/r4) and the
// half-quadrant bisectors (b1/a1/a2/b2) at 22.5/67.5/112.5/157.5 degrees.
// Every wedge is [lower, upper); directions on the frame's horizontal axis
// belong to no wedge.
enum class ConeId : int {
  C_r1b1 = 0,  // [0, 22.5)
  C_b1r2 = 1,  // [22.5, 45)
  C_r2a1 = 2,  // [45, 67.5)
  C_a1r3 = 3,  // [67.5, 90)
  C_r3a2 = 4,  // [90, 112.5)
  C_a2r4 = 5,  // [112.5, 135)
  C_r4b2 = 6,  // [135, 157.5)
  C_b2r5 = 7,  // [157.5, 180)
};

// Arc length travelled by a ray: the value a + b*sqrt(2). Axis-aligned travel
// produces b = 0 and diagonal travel a = 0, but sums of both parts are legal
// (and compared exactly).
struct RayTime {
  Coord a, b;
};

enum class Orientation { Clockwise = -1, Collinear = 0, CounterClockwise = 1 };

// Exact sign of the turn p -> q -> r.
Orientation orientation(const Point& p, const Point& q, const Point& r);

// Exact total order on a + b*sqrt(2).
std::strong_ordering compare_times(const RayTime& t1, const RayTime& t2);

// Wedge of frame `s` containing the direction q - p, or nullopt when q - p
// lies in the frame's closed lower half-plane. p == q raises DuplicatePoint.
std::optional<ConeId> cone_of(const Point& p, const Point& q, Frame s);

struct RayHit {
  Coord x, y;
  RayTime t1, t2;  // arc lengths along each ray to the hit point
};

// Intersection of two forward rays with grade-2 directions. Collinear
// anti-parallel rays that face each other meet at the midpoint of their
// origins with equal times; co-directed rays never meet (nullopt), matching
// the trailing-ray rule applied during graph construction. Returns nullopt
// whenever the forward paths do not meet.
std::optional<RayHit> ray_intersection(const Point& o1, DirIndex d1, const Point& o2, DirIndex d2);

}  // namespace emanet
