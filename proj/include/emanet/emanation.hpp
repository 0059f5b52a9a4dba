#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "emanet/geometry.hpp"
#include "emanet/plane_graph.hpp"

namespace emanet {

struct BBox {
  Coord xmin, xmax, ymin, ymax;
};

// Tight axis-aligned bounding box of the points; when degenerate (zero width
// or height) it is expanded by `margin` on all four sides so clipping always
// has positive area. margin must be > 0.
BBox bounding_box(const std::vector<Point>& points, const Coord& margin);

enum class TiePolicyKind { DeterministicLex, Seeded };

// Resolution of exact equal-time ray crossings: DeterministicLex stops the
// ray whose (owner id, direction index) is lexicographically larger; Seeded
// flips a seeded per-pair hash bit instead.
struct TiePolicy {
  TiePolicyKind kind = TiePolicyKind::DeterministicLex;
  std::uint64_t seed = 0;
};

enum class StopCause { Collision, Parallel, BBox };

struct RaySegment {
  std::int64_t owner = 0;  // point id
  DirIndex dir = 0;        // grade-local direction index (0 .. 2^(k+1)-1)
  Coord x, y;              // stop point
  RayTime stop_time;
  StopCause cause = StopCause::BBox;
  // blocking ray as (owner id, grade-local dir index); absent for bbox clips.
  // When several rays block at the same spot and instant, the lex-least
  // identity is recorded; a blocker arriving exactly at a ray's bbox clip
  // point leaves the cause as BBox.
  std::optional<std::pair<std::int64_t, DirIndex>> other;
};

// Simultaneous unit-speed competition of the 2^(k+1) rays of every point:
// a ray stops at the earliest point of its path that another ray reached no
// later while still alive there (traces are closed through their stop
// points); facing collinear rays both stop at their midpoint (cause
// Parallel); equal-time crossings are resolved by the tie policy; survivors
// clip at the bbox. Exact construction, available for grades 1 and 2 only;
// one RaySegment per (point, direction), ordered by (owner id, dir).
// Points on the bbox border yield zero-length outward segments.
std::vector<RaySegment> simulate_rays(const std::vector<Point>& points, int grade,
                                      const BBox& bbox, const TiePolicy& tie);

// The full competition graph: vertex set = points (original), ray collision
// points (steiner) and bbox clip points (boundary); every ray trace
// contributes edges subdivided at each vertex lying on it. Grades 1 and 2
// are exact; grades >= 3 switch to 64-bit float simulation with 1e-9
// tolerances, flagged by a diagnostics warning in the returned meta.
PlaneGraph build_emanation(const std::vector<Point>& points, int grade,
                           const Coord& margin = Coord(1), const TiePolicy& tie = {});

}  // namespace emanet
