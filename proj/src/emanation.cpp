#include "emanet/emanation.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "detail/approx.hpp"
#include "detail/assemble.hpp"
#include "detail/common.hpp"
#include "detail/kernel.hpp"
#include "detail/rays.hpp"
#include "detail/to_graph.hpp"
#include "detail/validate.hpp"
#include "emanet/errors.hpp"

namespace emanet {

namespace {

std::vector<int> grade_dirs(int grade) {
  if (grade == 1) return {0, 2, 4, 6};
  return {0, 1, 2, 3, 4, 5, 6, 7};
}

detail::TieBreaker tie_breaker(const TiePolicy& tie) {
  return {tie.kind == TiePolicyKind::Seeded, tie.seed};
}

void check_grade_exact(int grade) {
  if (grade < 1) fail(Errc::InvalidConfig, "grade must be >= 1");
  if (grade > 2) fail(Errc::ModeUnsupported, "exact construction supports grades 1 and 2 only");
}

void check_bbox_contains(const std::vector<Point>& pts, const BBox& b) {
  if (b.xmin > b.xmax || b.ymin > b.ymax) fail(Errc::InvalidConfig, "invalid bbox");
  for (const Point& p : pts) {
    if (p.x < b.xmin || p.x > b.xmax || p.y < b.ymin || p.y > b.ymax) {
      fail(Errc::InvalidConfig, "bbox does not contain all points");
    }
  }
}

template <class K, class Conv>
std::vector<detail::SimRay<K>> make_rays(const std::vector<Point>& by_id, int grade, Conv conv) {
  auto dirs = grade_dirs(grade);
  std::vector<detail::SimRay<K>> rays;
  rays.reserve(by_id.size() * dirs.size());
  for (const Point& p : by_id) {
    detail::Vec2<K> o = conv(p.x, p.y);
    for (int j = 0; j < int(dirs.size()); ++j) rays.push_back({o, dirs[j], p.id, j});
  }
  return rays;
}

template <class K, class Conv, class Back>
std::vector<RaySegment> run_simulation(const std::vector<Point>& by_id, int grade,
                                       const BBox& bbox, const TiePolicy& tie, Conv conv,
                                       Back back) {
  auto rays = make_rays<K>(by_id, grade, conv);
  auto stops = detail::simulate<K>(rays, conv(bbox.xmin, bbox.ymin), conv(bbox.xmax, bbox.ymax),
                                   tie_breaker(tie));
  std::vector<RaySegment> out;
  out.reserve(rays.size());
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const auto& r = rays[i];
    const auto& s = stops[i];
    RaySegment seg;
    seg.owner = r.owner_id;
    seg.dir = r.pub_dir;
    seg.x = back(s.pt.x);
    seg.y = back(s.pt.y);
    auto t = detail::step_time<K>(r.dir8, s.steps);
    seg.stop_time = RayTime{back(t.a), back(t.b)};
    switch (s.cause) {
      case detail::RayStopCause::BBox: seg.cause = StopCause::BBox; break;
      case detail::RayStopCause::Collision: seg.cause = StopCause::Collision; break;
      case detail::RayStopCause::Parallel: seg.cause = StopCause::Parallel; break;
    }
    if (s.other >= 0) seg.other = {rays[s.other].owner_id, rays[s.other].pub_dir};
    out.push_back(std::move(seg));
  }
  return out;
}

template <class K, class Conv, class Back>
PlaneGraph run_build(const std::vector<Point>& by_id, int grade, const BBox& bbox,
                     const TiePolicy& tie, Conv conv, Back back) {
  auto rays = make_rays<K>(by_id, grade, conv);
  auto stops = detail::simulate<K>(rays, conv(bbox.xmin, bbox.ymin), conv(bbox.xmax, bbox.ymax),
                                   tie_breaker(tie));
  detail::GraphAssembler<K> assembler;
  for (const Point& p : by_id) assembler.add_vertex(conv(p.x, p.y), 0);
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const auto& s = stops[i];
    if (s.pt == rays[i].origin) continue;  // zero-length clip on the bbox border
    assembler.add_vertex(s.pt, s.cause == detail::RayStopCause::BBox ? 2 : 1);
    assembler.add_segment(rays[i].origin, s.pt);
  }
  auto built = assembler.finish(/*repair=*/false);
  GraphMeta meta;
  meta.algorithm = "emanation";
  meta.grade = grade;
  meta.tie_policy = detail::tie_policy_string(tie);
  return detail::to_plane_graph<K>(by_id, std::move(built), back, std::move(meta));
}

// Tries the int64 lattice fast path; empty when the input does not fit.
detail::LatticeMap lattice_for(const std::vector<Point>& by_id, const BBox& bbox) {
  std::vector<Coord> values;
  values.reserve(by_id.size() * 2 + 4);
  for (const Point& p : by_id) {
    values.push_back(p.x);
    values.push_back(p.y);
  }
  values.push_back(bbox.xmin);
  values.push_back(bbox.xmax);
  values.push_back(bbox.ymin);
  values.push_back(bbox.ymax);
  return detail::LatticeMap::build(values, detail::kLatticeLimit, detail::kPrescale);
}

}  // namespace

BBox bounding_box(const std::vector<Point>& points, const Coord& margin) {
  if (points.empty()) fail(Errc::EmptyGraph, "empty input: at least one point required");
  if (margin <= 0) fail(Errc::InvalidConfig, "margin must be positive");
  BBox b{points[0].x, points[0].x, points[0].y, points[0].y};
  for (const Point& p : points) {
    if (p.x < b.xmin) b.xmin = p.x;
    if (p.x > b.xmax) b.xmax = p.x;
    if (p.y < b.ymin) b.ymin = p.y;
    if (p.y > b.ymax) b.ymax = p.y;
  }
  if (b.xmin == b.xmax || b.ymin == b.ymax) {
    b.xmin -= margin;
    b.xmax += margin;
    b.ymin -= margin;
    b.ymax += margin;
  }
  return b;
}

std::vector<RaySegment> simulate_rays(const std::vector<Point>& points, int grade,
                                      const BBox& bbox, const TiePolicy& tie) {
  check_grade_exact(grade);
  auto by_id = detail::validated_sorted_points(points);
  check_bbox_contains(by_id, bbox);
  auto map = lattice_for(by_id, bbox);
  if (map.ok()) {
    using K = detail::LatticeKernel;
    auto conv = [&](const Coord& x, const Coord& y) {
      return detail::Vec2<K>{map.to_lattice(x), map.to_lattice(y)};
    };
    auto back = [&](std::int64_t v) { return map.from_lattice(v); };
    return run_simulation<K>(by_id, grade, bbox, tie, conv, back);
  }
  using K = detail::RationalKernel;
  auto conv = [](const Coord& x, const Coord& y) { return detail::Vec2<K>{x, y}; };
  auto back = [](const Coord& v) { return v; };
  return run_simulation<K>(by_id, grade, bbox, tie, conv, back);
}

PlaneGraph build_emanation(const std::vector<Point>& points, int grade, const Coord& margin,
                           const TiePolicy& tie) {
  if (grade < 1) fail(Errc::InvalidConfig, "grade must be >= 1");
  auto by_id = detail::validated_sorted_points(points);
  BBox bbox = bounding_box(by_id, margin);
  if (grade > 2) return detail::build_emanation_approx(by_id, grade, bbox, tie);
  auto map = lattice_for(by_id, bbox);
  if (map.ok()) {
    using K = detail::LatticeKernel;
    auto conv = [&](const Coord& x, const Coord& y) {
      return detail::Vec2<K>{map.to_lattice(x), map.to_lattice(y)};
    };
    auto back = [&](std::int64_t v) { return map.from_lattice(v); };
    return run_build<K>(by_id, grade, bbox, tie, conv, back);
  }
  using K = detail::RationalKernel;
  auto conv = [](const Coord& x, const Coord& y) { return detail::Vec2<K>{x, y}; };
  auto back = [](const Coord& v) { return v; };
  return run_build<K>(by_id, grade, bbox, tie, conv, back);
}

}  // namespace emanet
