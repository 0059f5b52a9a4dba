#include "emanet/geometry.hpp"

#include "detail/kernel.hpp"
#include "detail/rays.hpp"
#include "emanet/errors.hpp"

namespace emanet {

namespace {

using K = detail::RationalKernel;

detail::Vec2<K> vec(const Point& p) { return {p.x, p.y}; }

RayTime to_time(const detail::Root2<K>& t) { return RayTime{t.a, t.b}; }

}  // namespace

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  int s = detail::orient_sign<K>(vec(p), vec(q), vec(r));
  return s < 0 ? Orientation::Clockwise
       : s > 0 ? Orientation::CounterClockwise
               : Orientation::Collinear;
}

std::strong_ordering compare_times(const RayTime& t1, const RayTime& t2) {
  int s = K::sign_root2(Coord(t1.a - t2.a), Coord(t1.b - t2.b));
  return s < 0   ? std::strong_ordering::less
       : s > 0 ? std::strong_ordering::greater
               : std::strong_ordering::equal;
}

std::optional<ConeId> cone_of(const Point& p, const Point& q, Frame s) {
  if (s < 0 || s >= kFrameCount) fail(Errc::InvalidConfig, "cone_of: frame out of range");
  detail::Vec2<K> d{Coord(q.x - p.x), Coord(q.y - p.y)};
  if (d.x.is_zero() && d.y.is_zero()) fail(Errc::DuplicatePoint, "cone_of: p == q");
  int l = detail::local_wedge<K>(d, s);
  if (l < 0) return std::nullopt;
  return ConeId(l);
}

std::optional<RayHit> ray_intersection(const Point& o1, DirIndex d1, const Point& o2, DirIndex d2) {
  if (d1 < 0 || d1 > 7 || d2 < 0 || d2 > 7) fail(Errc::InvalidConfig, "direction index out of range");
  if (o1.x == o2.x && o1.y == o2.y) {
    return RayHit{o1.x, o1.y, RayTime{0, 0}, RayTime{0, 0}};
  }
  if (d1 == d2) return std::nullopt;  // co-directed rays never meet forward
  auto ev = detail::pair_event<K>(vec(o1), d1, vec(o2), d2);
  if (!ev) return std::nullopt;
  return RayHit{ev->pt.x, ev->pt.y, to_time(detail::step_time<K>(d1, ev->m1)),
                to_time(detail::step_time<K>(d2, ev->m2))};
}

}  // namespace emanet
