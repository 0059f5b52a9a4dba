#pragma once

#include <string>

#include "emanet/plane_graph.hpp"

namespace emanet {

// Marker sizes are multipliers on a base unit derived from the drawing's
// extent, so plots of any scale render with the same visual weight.
struct SvgStyle {
  std::string edge_color = "#4a6fa5";
  std::string original_color = "#c8385a";
  std::string steiner_color = "#2e8b57";
  std::string boundary_color = "#707070";
  double edge_width = 1.0;
  double marker_size = 1.0;
};

// Renders a standalone SVG 1.1 document. Edges draw first (as lines), then
// vertices in id order: originals as filled circles, Steiner points as small
// squares, boundary vertices as diagonal ticks. The viewBox is the vertex
// bounding box plus a 5% margin. Output is deterministic: equal graphs and
// styles yield byte-identical documents. The root element contains exactly
// one element per edge and one per vertex.
//
// A graph with no vertices raises EmptyGraph.
std::string render_svg(const PlaneGraph& g, const SvgStyle& style = {});

}  // namespace emanet
