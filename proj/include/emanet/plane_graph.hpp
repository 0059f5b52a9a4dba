#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "emanet/coord.hpp"

namespace emanet {

enum class VertexKind { Original, Steiner, Boundary };

std::string to_string(VertexKind kind);
VertexKind vertex_kind_from_string(const std::string& s);

struct Vertex {
  std::int64_t id = 0;
  Coord x, y;
  VertexKind kind = VertexKind::Original;
};

// Endpoint ids of a straight segment, normalized so u < v.
struct Edge {
  std::int64_t u = 0, v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Diagnostics {
  std::int64_t planarity_repairs = 0;  // steiner insertions at residual crossings
  std::int64_t cocircular_flips = 0;   // tie-broken diagonals in the triangulation
  std::vector<std::string> warnings;
};

struct GraphMeta {
  std::string algorithm;        // "emanation" | "seg" | "delaunay" | "triangle-import"
  int grade = 0;                // ray grade; SEG is always grade 2, delaunay 0
  std::string tie_policy;       // "lex" | "seeded:<seed>"; empty when not applicable
  Diagnostics diagnostics;
};

// A straight-line plane graph. Vertices are sorted by id; edges are
// normalized (u < v), sorted lexicographically, and free of duplicates,
// self-loops and zero-length segments. Instances are immutable values once
// built and safe for concurrent reads.
struct PlaneGraph {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  GraphMeta meta;

  const Vertex* find_vertex(std::int64_t id) const;  // nullptr when absent
  std::size_t count_kind(VertexKind kind) const;
};

struct PlanarityReport {
  std::int64_t proper_crossings = 0;
  std::int64_t vertex_on_edge_interior = 0;
  std::int64_t overlapping_collinear = 0;

  bool clean() const {
    return proper_crossings == 0 && vertex_on_edge_interior == 0 && overlapping_collinear == 0;
  }
};

// Exact segment-intersection scan over all edge pairs (banded by x-interval
// with float bounding-box prefilters; every reported incident is confirmed
// with exact rational predicates).
PlanarityReport check_planarity(const PlaneGraph& g);

// Verifies the structural invariants above plus: edge endpoints exist and
// every steiner/boundary vertex has degree >= 1. Throws
// Error(InternalInvariant) on the first violation.
void validate_graph(const PlaneGraph& g);

}  // namespace emanet
