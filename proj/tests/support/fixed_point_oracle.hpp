#pragma once

// Brute-force reference for the ray competition: every ray starts at its bbox
// clip, then each stop is re-derived from all pairwise constraints until the
// configuration is stable. Independent of the event-queue engine on purpose:
// plain rational line algebra over the public types, no shared internals.

#include <vector>

#include <emanet/emanation.hpp>
#include <emanet/geometry.hpp>

namespace oracle {

struct Result {
  bool converged = false;
  std::vector<emanet::RaySegment> segments;  // ordered by (owner id, dir)
};

Result simulate(const std::vector<emanet::Point>& points, int grade,
                const emanet::BBox& bbox, const emanet::TiePolicy& tie);

}  // namespace oracle
