#include "emanet/seg.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "detail/assemble.hpp"
#include "detail/common.hpp"
#include "detail/kernel.hpp"
#include "detail/rangetree.hpp"
#include "detail/seg_select.hpp"
#include "detail/to_graph.hpp"
#include "detail/validate.hpp"
#include "emanet/errors.hpp"

namespace emanet {

namespace {

using RK = detail::RationalKernel;

detail::Vec2<RK> rvec(const Point& p) { return {p.x, p.y}; }

void check_frame(Frame s) {
  if (s < 0 || s >= kFrameCount) fail(Errc::InvalidConfig, "frame out of range");
}

detail::FrameSelection<RK> sweep_others(const Point& p, const std::vector<Point>& others,
                                        Frame frame) {
  std::vector<detail::Vec2<RK>> pts;
  std::vector<std::int64_t> ids;
  pts.reserve(others.size());
  ids.reserve(others.size());
  for (const Point& q : others) {
    pts.push_back(rvec(q));
    ids.push_back(q.id);
  }
  return detail::selection_sweep<RK>(rvec(p), pts, ids, -1, frame);
}

// --- construction --------------------------------------------------------

// Supplies all per-point selections of one frame; the scan and index
// implementations share the exact comparators, so their winners coincide.
template <class K>
class SegQuerySource {
 public:
  virtual ~SegQuerySource() = default;
  // valid until the next call
  virtual const std::vector<detail::FrameSelection<K>>& frame_selections(int frame) = 0;
};

template <class K>
class NaiveSegSource final : public SegQuerySource<K> {
 public:
  NaiveSegSource(const std::vector<detail::Vec2<K>>* pts, const std::vector<std::int64_t>* ids)
      : pts_(pts), ids_(ids) {}

  const std::vector<detail::FrameSelection<K>>& frame_selections(int frame) override {
    cache_.clear();
    cache_.reserve(pts_->size());
    for (int i = 0; i < int(pts_->size()); ++i) {
      cache_.push_back(detail::selection_sweep<K>((*pts_)[i], *pts_, *ids_, i, frame));
    }
    return cache_;
  }

 private:
  const std::vector<detail::Vec2<K>>* pts_;
  const std::vector<std::int64_t>* ids_;
  std::vector<detail::FrameSelection<K>> cache_;
};

template <class K>
class IndexSegSource final : public SegQuerySource<K> {
 public:
  IndexSegSource(const std::vector<detail::Vec2<K>>* pts, const std::vector<std::int64_t>* ids)
      : pts_(pts), ids_(ids) {}

  const std::vector<detail::FrameSelection<K>>& frame_selections(int frame) override {
    // One tree per selection cone, rebuilt each frame; every shortlist is
    // folded through the same accumulator the exhaustive scan uses, so the
    // winners agree by construction.
    std::vector<detail::ConeTree<K>> trees;
    trees.reserve(6);
    for (int cone = 1; cone <= 6; ++cone) trees.emplace_back(pts_, frame, cone);
    cache_.clear();
    cache_.reserve(pts_->size());
    std::vector<int> buf;
    for (int i = 0; i < int(pts_->size()); ++i) {
      detail::SelectionAccum<K> acc;
      for (const auto& tree : trees) {
        tree.shortlist((*pts_)[i], i, buf);
        for (int j : buf) acc.offer(j, (*pts_)[j] - (*pts_)[i], tree.cone(), *ids_, frame);
      }
      cache_.push_back(acc.result());
    }
    return cache_;
  }

 private:
  const std::vector<detail::Vec2<K>>* pts_;
  const std::vector<std::int64_t>* ids_;
  std::vector<detail::FrameSelection<K>> cache_;
};

enum class SegBackend { Naive, Index };

template <class K, class Conv, class Back>
PlaneGraph run_seg(const std::vector<Point>& by_id, const SegConfig& config, SegBackend backend,
                   Conv conv, Back back) {
  const int n = int(by_id.size());
  std::vector<detail::Vec2<K>> pts;
  std::vector<std::int64_t> ids;
  pts.reserve(n);
  ids.reserve(n);
  for (const Point& p : by_id) {
    pts.push_back(conv(p.x, p.y));
    ids.push_back(p.id);
  }

  std::unique_ptr<SegQuerySource<K>> source;
  switch (backend) {
    case SegBackend::Naive:
      source = std::make_unique<NaiveSegSource<K>>(&pts, &ids);
      break;
    case SegBackend::Index:
      source = std::make_unique<IndexSegSource<K>>(&pts, &ids);
      break;
  }

  detail::GraphAssembler<K> assembler;
  for (const auto& pt : pts) assembler.add_vertex(pt, 0);

  std::set<std::pair<int, int>> connected;
  for (int s = 0; s < kFrameCount; ++s) {
    const auto& selections = source->frame_selections(s);
    for (int i = 0; i < n; ++i) {
      const auto& sel = selections[i];
      if (!sel.top) continue;
      int j = sel.top->index;
      std::pair<int, int> pair = std::minmax(i, j);
      if (connected.count(pair)) continue;
      detail::Vec2<K> ds = pts[j] - pts[i];
      bool blocked = false;
      for (const auto& f : sel.flank) {
        if (f && detail::blocked_core<K>(ds, sel.top->cone, pts[f->index] - pts[i], f->cone, s)) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
      connected.insert(pair);
      if (auto bend = detail::bend_core<K>(pts[i], pts[j], sel.top->cone, s)) {
        assembler.add_vertex(*bend, 1);
        assembler.add_segment(pts[i], *bend);
        assembler.add_segment(*bend, pts[j]);
      } else {
        assembler.add_segment(pts[i], pts[j]);
      }
    }
  }

  auto built = assembler.finish(config.planarity_repair);
  GraphMeta meta;
  meta.algorithm = "seg";
  meta.grade = 2;
  meta.tie_policy = detail::tie_policy_string(config.tie);
  PlaneGraph g = detail::to_plane_graph<K>(by_id, std::move(built), back, std::move(meta));
  if (config.record_diagnostics && g.meta.diagnostics.planarity_repairs > 0) {
    g.meta.diagnostics.warnings.push_back(
        "planarity repair inserted " + std::to_string(g.meta.diagnostics.planarity_repairs) +
        " steiner vertices");
  }
  return g;
}

PlaneGraph build_with_backend(const std::vector<Point>& points, const SegConfig& config,
                              SegBackend backend) {
  auto by_id = detail::validated_sorted_points(points);
  std::vector<Coord> values;
  values.reserve(by_id.size() * 2);
  for (const Point& p : by_id) {
    values.push_back(p.x);
    values.push_back(p.y);
  }
  auto map = detail::LatticeMap::build(values, detail::kLatticeLimit, detail::kPrescale);
  if (map.ok()) {
    using K = detail::LatticeKernel;
    auto conv = [&](const Coord& x, const Coord& y) {
      return detail::Vec2<K>{map.to_lattice(x), map.to_lattice(y)};
    };
    auto back = [&](std::int64_t v) { return map.from_lattice(v); };
    return run_seg<K>(by_id, config, backend, conv, back);
  }
  using K = detail::RationalKernel;
  auto conv = [](const Coord& x, const Coord& y) { return detail::Vec2<K>{x, y}; };
  auto back = [](const Coord& v) { return v; };
  return run_seg<K>(by_id, config, backend, conv, back);
}

}  // namespace

std::optional<TopNeighbor> select_top_neighbor(const Point& p, const std::vector<Point>& others,
                                               Frame frame) {
  check_frame(frame);
  auto sel = sweep_others(p, others, frame);
  if (!sel.top) return std::nullopt;
  const Point& q = others[sel.top->index];
  return TopNeighbor{p.id, q.id, ConeId(sel.top->cone), RayTime{sel.top->key.a, sel.top->key.b}};
}

std::vector<Candidate> select_candidates(const Point& p, const std::vector<Point>& others,
                                         Frame frame) {
  check_frame(frame);
  auto sel = sweep_others(p, others, frame);
  std::vector<Candidate> out;
  for (const auto& f : sel.flank) {
    if (f) out.push_back(Candidate{others[f->index].id, ConeId(f->cone)});
  }
  return out;
}

bool is_blocked(const Point& p, const Point& p_s, ConeId s_cone, const Point& p_c, ConeId c_cone,
                Frame frame) {
  check_frame(frame);
  if (s_cone != ConeId::C_a1r3 && s_cone != ConeId::C_r3a2) {
    fail(Errc::InternalInvariant, "is_blocked: p_s cone tag is not a top cone");
  }
  int cc = int(c_cone);
  if (cc != 1 && cc != 2 && cc != 5 && cc != 6) {
    fail(Errc::InternalInvariant, "is_blocked: p_c cone tag is not a flanking cone");
  }
  if (cone_of(p, p_s, frame) != std::optional<ConeId>(s_cone)) {
    fail(Errc::InternalInvariant, "is_blocked: p_s cone tag inconsistent with its position");
  }
  if (cone_of(p, p_c, frame) != std::optional<ConeId>(c_cone)) {
    fail(Errc::InternalInvariant, "is_blocked: p_c cone tag inconsistent with its position");
  }
  detail::Vec2<RK> origin = rvec(p);
  return detail::blocked_core<RK>(rvec(p_s) - origin, int(s_cone), rvec(p_c) - origin, cc, frame);
}

Elbow connect(const Point& p, const Point& p_s, Frame frame) {
  check_frame(frame);
  auto cone = cone_of(p, p_s, frame);
  if (!cone || (*cone != ConeId::C_a1r3 && *cone != ConeId::C_r3a2)) {
    fail(Errc::InternalInvariant, "connect: p_s is not in a top cone of p");
  }
  Elbow e{p.id, p_s.id, frame, std::nullopt};
  if (auto bend = detail::bend_core<RK>(rvec(p), rvec(p_s), int(*cone), frame)) {
    e.bend = std::pair<Coord, Coord>{bend->x, bend->y};
  }
  return e;
}

PlaneGraph build_seg(const std::vector<Point>& points, const SegConfig& config) {
  return build_with_backend(points, config, SegBackend::Index);
}

PlaneGraph build_seg_naive(const std::vector<Point>& points, const SegConfig& config) {
  return build_with_backend(points, config, SegBackend::Naive);
}

}  // namespace emanet
