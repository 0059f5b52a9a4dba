#include "emanet/rangetree.hpp"

#include <utility>
#include <vector>

#include "detail/kernel.hpp"
#include "detail/rangetree.hpp"
#include "detail/rays.hpp"
#include "detail/seg_select.hpp"
#include "emanet/errors.hpp"

namespace emanet {

namespace {
using RK = detail::RationalKernel;
}

struct MinAugmentedRangeTree::Impl {
  std::vector<Point> points;
  std::vector<detail::Vec2<RK>> coords;
  Frame frame;
  ConeId cone;
  detail::ConeTree<RK> tree;  // borrows coords; keep member order

  Impl(std::vector<Point> pts, Frame f, ConeId c)
      : points(std::move(pts)),
        coords(make_coords(points)),
        frame(f),
        cone(c),
        tree(&coords, f, int(c)) {}

  static std::vector<detail::Vec2<RK>> make_coords(const std::vector<Point>& ps) {
    std::vector<detail::Vec2<RK>> out;
    out.reserve(ps.size());
    for (const Point& p : ps) out.push_back({p.x, p.y});
    return out;
  }
};

MinAugmentedRangeTree::MinAugmentedRangeTree(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

Frame MinAugmentedRangeTree::frame() const { return impl_->frame; }
ConeId MinAugmentedRangeTree::cone() const { return impl_->cone; }
std::size_t MinAugmentedRangeTree::size() const { return impl_->points.size(); }

MinAugmentedRangeTree build_index(const std::vector<Point>& points, Frame frame, ConeId cone) {
  if (frame < 0 || frame >= kFrameCount) fail(Errc::InvalidConfig, "frame out of range");
  if (int(cone) < 0 || int(cone) >= 8) fail(Errc::InvalidConfig, "cone out of range");
  return MinAugmentedRangeTree(
      std::make_shared<const MinAugmentedRangeTree::Impl>(points, frame, cone));
}

std::optional<Point> query_first_in_cone(const MinAugmentedRangeTree& tree, const Point& p) {
  const auto& im = *tree.impl_;
  detail::Vec2<RK> origin{p.x, p.y};
  std::vector<int> shortlist;
  im.tree.shortlist(origin, -1, shortlist);
  if (shortlist.empty()) return std::nullopt;

  // The shortlist holds every exact primary-key minimizer; settle the full
  // chain (key, squared distance or secondary axis, id) among them.
  detail::ConeKeySpec spec = detail::cone_key_spec(im.frame, int(im.cone));
  int best = -1;
  detail::Root2<RK> best_key{}, best_sec{};
  RK::Wide best_d2{};
  for (int i : shortlist) {
    detail::Vec2<RK> d = im.coords[i] - origin;
    detail::Root2<RK> key = detail::dot_dir16<RK>(spec.key_axis, d);
    if (spec.top) {
      RK::Wide d2 = detail::dist2<RK>(d);
      bool take = best < 0;
      if (!take) {
        int c = detail::cmp<RK>(key, best_key);
        if (c == 0) c = RK::cmp_wide(d2, best_d2);
        take = c < 0 || (c == 0 && im.points[i].id < im.points[best].id);
      }
      if (take) {
        best = i;
        best_key = key;
        best_d2 = d2;
      }
    } else {
      detail::Root2<RK> sec = detail::dot_dir16<RK>(spec.sec_axis, d);
      bool take = best < 0;
      if (!take) {
        int c = detail::cmp<RK>(key, best_key);
        if (c == 0) c = detail::cmp<RK>(sec, best_sec);
        take = c < 0 || (c == 0 && im.points[i].id < im.points[best].id);
      }
      if (take) {
        best = i;
        best_key = key;
        best_sec = sec;
      }
    }
  }
  return im.points[best];
}

bool audit_index(const MinAugmentedRangeTree& tree) { return tree.impl_->tree.audit(); }

}  // namespace emanet
