#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "emanet/geometry.hpp"

namespace emanet {

enum class PointModel {
  Uniform,    // i.i.d. on the [0, 1000] x [0, 1000] square
  Clustered,  // Gaussian clusters (sigma = 40) around uniform centers
};

std::string to_string(PointModel model);

// Accepts "uniform" / "clustered"; anything else raises InvalidConfig.
PointModel point_model_from_string(const std::string& name);

// Draws n distinct points with ids 1..n. Coordinates are snapped to three
// decimals (exact multiples of 1/1000); draws that collide with an earlier
// point are discarded and redrawn. The sequence depends only on (n, seed,
// model) — identical calls produce identical points on any platform.
//
// n < 1 raises InvalidConfig.
std::vector<Point> generate_points(int n, std::uint64_t seed, PointModel model);

}  // namespace emanet
