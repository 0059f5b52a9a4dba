#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "emanet/emanation.hpp"
#include "emanet/geometry.hpp"
#include "emanet/plane_graph.hpp"

namespace emanet {

// First vertex found by the simultaneous sweep of p's two top cones.
struct TopNeighbor {
  std::int64_t p = 0, p_s = 0;     // vertex ids
  ConeId cone = ConeId::C_a1r3;    // C_a1r3 or C_r3a2
  // Projection of p_s - p onto the cone's sweep axis (67.5 or 112.5
  // degrees), scaled by the axis-vector norm sqrt(4 + 2 sqrt 2): the unit
  // projection itself is irrational over Z[sqrt 2], and both axes share the
  // norm, so the scaled keys order identically across the two cones.
  RayTime sweep_key;
};

// Closest vertex of one flanking cone under that cone's sweep order.
struct Candidate {
  std::int64_t p_c = 0;
  ConeId cone = ConeId::C_b1r2;  // C_b1r2, C_r2a1, C_a2r4 or C_r4b2
};

// A connection p -> bend -> p_s of two grade-2 legs, or a single straight
// segment (bend absent) when p_s lies exactly on p's in-frame vertical ray.
struct Elbow {
  std::int64_t p = 0, p_s = 0;
  Frame frame = 0;
  std::optional<std::pair<Coord, Coord>> bend;
};

struct SegConfig {
  // Recorded in the output metadata only: selection is already deterministic
  // (sweep key, then squared distance or in-frame |dy|, then id) and never
  // consults the policy.
  TiePolicy tie;
  // Insert steiner vertices at residual proper crossings after accumulation
  // (counted in diagnostics; the expected count is 0). When disabled, a
  // residual crossing raises Error(InternalInvariant) instead.
  bool planarity_repair = true;
  // Additionally emit a warning string when any repair fired.
  bool record_diagnostics = false;
};

// The vertex of p's two top cones (C_a1r3, C_r3a2) with the smallest sweep
// key, both cones swept simultaneously; nullopt when both are empty.
// Entries coinciding with p are ignored.
std::optional<TopNeighbor> select_top_neighbor(const Point& p, const std::vector<Point>& others,
                                               Frame frame);

// Per flanking cone, the vertex minimizing the in-frame horizontal distance
// |q_x - p_x| (ties: smaller in-frame |q_y - p_y|, then smaller id); at most
// one candidate per cone, in ConeId order. Entries coinciding with p are
// ignored.
std::vector<Candidate> select_candidates(const Point& p, const std::vector<Point>& others,
                                         Frame frame);

// Whether the candidate p_c (cone c_cone) blocks the connection p -> p_s
// (cone s_cone). The cone tags must match the actual cone_of classification
// in `frame`; inconsistent tags raise Error(InternalInvariant).
bool is_blocked(const Point& p, const Point& p_s, ConeId s_cone, const Point& p_c, ConeId c_cone,
                Frame frame);

// The elbow connecting p to its selected top neighbor, in base coordinates.
// p_s must lie in one of p's top cones in `frame`.
Elbow connect(const Point& p, const Point& p_s, Frame frame);

// The simplified grade-2 graph: over the 8 frames and every point in id
// order, connect each point to its top neighbor unless already connected or
// blocked by a flanking candidate; accumulate the elbows, merging coincident
// bend points into shared steiner vertices and splitting edges at exact
// overlaps. Output has no boundary vertices. build_seg selects through the
// sub-quadratic wedge index; build_seg_naive through exhaustive linear
// scans. Both produce identical graphs.
PlaneGraph build_seg(const std::vector<Point>& points, const SegConfig& config = {});
PlaneGraph build_seg_naive(const std::vector<Point>& points, const SegConfig& config = {});

}  // namespace emanet
