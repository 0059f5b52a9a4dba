#pragma once

#include <map>
#include <string>
#include <vector>

#include "emanet/geometry.hpp"
#include "emanet/plane_graph.hpp"

namespace emanet {

// Serialization for point sets and graphs. Coordinates are written as exact
// decimal or fraction strings (never floats), so a write-then-read round
// trip reproduces the rationals bit for bit, and writers emit keys and
// records in a fixed order, so equal values serialize byte-identically.

// {"points": [{"id": n, "x": "...", "y": "..."}], "meta": {...}} — `meta`
// entries pass through as string values.
std::string write_points_json(const std::vector<Point>& points,
                              const std::map<std::string, std::string>& meta = {});

// Accepts documents in the write_points_json shape. Coordinates must be
// strings; malformed documents raise ParseError and duplicate ids raise
// DuplicateId.
std::vector<Point> read_points_json(const std::string& text);

// "id,x,y" with a header line.
std::string write_points_csv(const std::vector<Point>& points);
std::vector<Point> read_points_csv(const std::string& text);

// {"vertices": [{"id", "x", "y", "kind"}], "edges": [[u, v], ...],
//  "meta": {"algorithm", "grade", "tie_policy", "diagnostics"}}
std::string write_graph_json(const PlaneGraph& g);

// Vertices are re-sorted by id and edges normalized/deduplicated, so
// hand-edited files need not be pre-ordered. Unknown kinds, missing fields,
// or edges naming absent vertices raise ParseError.
PlaneGraph read_graph_json(const std::string& text);

}  // namespace emanet
