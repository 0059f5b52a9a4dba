#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "emanet/geometry.hpp"
#include "emanet/plane_graph.hpp"

namespace emanet {

// Text payloads of a Shewchuk-style mesh: a .node vertex list plus an .ele
// triangle list. '#' starts a comment; indices may be 0- or 1-based (detected
// from the first vertex record).
struct TriangleMeshFiles {
  std::string node_text;
  std::string ele_text;
};

// Triangulation output: the edge graph plus the triangle list (each triple
// sorted ascending by id, list sorted lexicographically). `triangles` is
// empty for degenerate inputs that fall back to a path graph.
struct DelaunayResult {
  PlaneGraph graph;
  std::vector<std::array<std::int64_t, 3>> triangles;
};

// Delaunay triangulation with exact rational orientation and in-circle
// predicates. Vertices keep the input ids and are all kind=original.
//
// Exactly co-circular quadrilaterals are normalized so every such pair of
// adjacent triangles uses the lexicographically smallest diagonal (endpoint
// coordinates compared as sorted (x, y) pairs); the number of diagonal
// replacements this costs is recorded in meta.diagnostics.cocircular_flips.
//
// Degenerate inputs (fewer than 3 points, or all points collinear) yield a
// path graph along the sorted points with a warning in the diagnostics
// instead of an error. Empty input raises EmptyGraph; duplicate ids or
// coordinates raise DuplicateId/DuplicatePoint.
DelaunayResult delaunay_mesh(const std::vector<Point>& points);

// Convenience wrapper returning just the graph.
PlaneGraph delaunay(const std::vector<Point>& points);

// Builds the edge graph of an externally produced mesh. Vertex ids are
// normalized to 1-based regardless of the file's index base, so equivalent
// 0- and 1-based files import identically. When `originals` is non-empty,
// mesh vertices whose coordinates exactly match an original point are
// kind=original and every other vertex is kind=steiner; with no originals
// every vertex is kind=original. Malformed input raises ParseError carrying
// the offending line number.
PlaneGraph import_triangle(const TriangleMeshFiles& files,
                           const std::vector<Point>& originals = {});

}  // namespace emanet
