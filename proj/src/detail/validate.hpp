#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "emanet/errors.hpp"
#include "emanet/geometry.hpp"

namespace emanet::detail {

// Rejects empty input, duplicate ids and duplicate coordinates; returns the
// points sorted by id (the canonical processing order everywhere).
inline std::vector<Point> validated_sorted_points(const std::vector<Point>& points) {
  if (points.empty()) fail(Errc::EmptyGraph, "empty input: at least one point required");
  std::set<std::int64_t> ids;
  std::set<std::pair<Coord, Coord>> seen;
  constexpr std::int64_t kIdLimit = std::int64_t(1) << 62;  // room for fresh vertex ids
  for (const Point& p : points) {
    if (p.id < 0 || p.id > kIdLimit) fail(Errc::InvalidConfig, "point id out of range");
    if (!ids.insert(p.id).second)
      fail(Errc::DuplicateId, "duplicate point id " + std::to_string(p.id));
    if (!seen.insert({p.x, p.y}).second)
      fail(Errc::DuplicatePoint, "duplicate point coordinates (id " + std::to_string(p.id) + ")");
  }
  std::vector<Point> sorted = points;
  std::sort(sorted.begin(), sorted.end(),
            [](const Point& a, const Point& b) { return a.id < b.id; });
  return sorted;
}

}  // namespace emanet::detail
