#pragma once

#include <vector>

#include "emanet/emanation.hpp"
#include "emanet/plane_graph.hpp"

namespace emanet::detail {

// Float ray competition for grades >= 3, whose directions have irrational
// slopes. Mirrors the exact engine's event semantics with 1e-9 relative
// tolerances; coincident stop points are merged by tolerance-grid
// quantization. Planarity is not exactly enforced in this mode (the caller
// flags the output with a diagnostics warning). Points must be validated and
// sorted by id.
PlaneGraph build_emanation_approx(const std::vector<Point>& by_id, int grade, const BBox& bbox,
                                  const TiePolicy& tie);

}  // namespace emanet::detail
