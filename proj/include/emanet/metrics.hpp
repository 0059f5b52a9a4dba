#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "emanet/plane_graph.hpp"

namespace emanet {

// Summary columns of one plane graph. Degree statistics run over all
// vertices — originals, steiner and boundary alike; steiner_points counts
// Steiner-kind vertices only (boundary clip endpoints are available through
// PlaneGraph::count_kind). Lengths, angles and ratios are 64-bit floats
// derived from exact coordinate differences, so equal exact directions give
// bit-equal angles.
struct MetricsReport {
  int point_count = 0;     // Original-kind vertices
  int steiner_points = 0;  // Steiner-kind vertices
  int max_degree = 0;
  double avg_degree = 0.0;  // 2 * edge_count / vertex_count
  int edge_count = 0;
  double max_edge_len = 0.0;
  double avg_edge_len = 0.0;
  double total_edge_len = 0.0;
  double min_angle_deg = 0.0;
  double spanning_ratio = 1.0;
  std::pair<std::int64_t, std::int64_t> witness_pair{0, 0};  // attains the ratio
};

// Dijkstra distances from `source` to every vertex (steiner and boundary
// included), edge weights = Euclidean lengths; unreachable vertices map to
// +infinity. A source id absent from the graph raises InvalidConfig.
std::map<std::int64_t, double> shortest_paths_from(const PlaneGraph& g, std::int64_t source);

// Stretch over original vertices: the maximum of path length over Euclidean
// distance across unordered pairs of originals, and a pair attaining it
// (the id-lexicographically first among maximizers). Steiner and boundary
// vertices serve as path interiors only. Fewer than two originals give
// (1, (id, id)); a disconnected pair gives infinity and names the first
// unreachable pair.
std::pair<double, std::pair<std::int64_t, std::int64_t>> spanning_ratio(const PlaneGraph& g);

// Minimum angle in degrees between consecutive incident edges around any
// vertex. Vertices with fewer than two incident edges contribute no angle;
// when no vertex has two, the result is 360. An empty graph raises
// EmptyGraph.
double min_angle(const PlaneGraph& g);

// Every column in one pass over the graph.
MetricsReport metrics_report(const PlaneGraph& g);

}  // namespace emanet
