#pragma once

#include <algorithm>
#include <cassert>
#include <utility>
#include <vector>

#include "detail/assemble.hpp"
#include "emanet/plane_graph.hpp"

namespace emanet::detail {

// Converts assembler output to the public representation. The first
// `by_id.size()` registry slots must be the original points (registered in id
// order); fresh vertices receive sequential ids beyond the maximum original
// id, assigned in coordinate order. `back` maps kernel scalars to Coord.
template <class K, class Back>
PlaneGraph to_plane_graph(const std::vector<Point>& by_id,
                          typename GraphAssembler<K>::Built&& built, Back back, GraphMeta meta) {
  const int n = int(by_id.size());
  const int total = int(built.coords.size());

  std::vector<int> fresh;
  fresh.reserve(total - n);
  for (int i = n; i < total; ++i) fresh.push_back(i);
  std::sort(fresh.begin(), fresh.end(), [&](int a, int b) {
    const auto& ca = built.coords[a];
    const auto& cb = built.coords[b];
    if (ca.x != cb.x) return ca.x < cb.x;
    return ca.y < cb.y;
  });

  std::vector<std::int64_t> ids(total);
  for (int i = 0; i < n; ++i) ids[i] = by_id[i].id;
  std::int64_t next = by_id.back().id + 1;
  for (int idx : fresh) ids[idx] = next++;

  auto kind_of = [](int rank) {
    return rank == 0 ? VertexKind::Original : rank == 1 ? VertexKind::Steiner : VertexKind::Boundary;
  };
  PlaneGraph g;
  g.meta = std::move(meta);
  g.meta.diagnostics.planarity_repairs += built.repairs;
  g.vertices.reserve(total);
  for (int i = 0; i < n; ++i) {
    assert(built.kinds[i] == 0);
    g.vertices.push_back({ids[i], back(built.coords[i].x), back(built.coords[i].y), VertexKind::Original});
  }
  for (int idx : fresh) {
    g.vertices.push_back({ids[idx], back(built.coords[idx].x), back(built.coords[idx].y), kind_of(built.kinds[idx])});
  }

  g.edges.reserve(built.edges.size());
  for (auto [a, b] : built.edges) {
    std::int64_t u = ids[a], v = ids[b];
    if (v < u) std::swap(u, v);
    g.edges.push_back({u, v});
  }
  std::sort(g.edges.begin(), g.edges.end());
  assert(std::adjacent_find(g.edges.begin(), g.edges.end()) == g.edges.end());
  validate_graph(g);
  return g;
}

}  // namespace emanet::detail
