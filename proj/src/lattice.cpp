#include <boost/multiprecision/cpp_int.hpp>

#include "detail/kernel.hpp"

namespace emanet::detail {

LatticeMap LatticeMap::build(const std::vector<Coord>& values, std::int64_t limit, int prescale) {
  LatticeMap m;
  const BigInt bound(limit);
  BigInt den = 1;
  for (const Coord& v : values) {
    den = boost::multiprecision::lcm(den, coord_den(v));
    if (den > bound) return m;
  }
  BigInt scale = den * prescale;
  for (const Coord& v : values) {
    BigInt scaled = coord_num(v) * (scale / coord_den(v));
    if (boost::multiprecision::abs(scaled) > bound) return m;
  }
  m.den_ = den;
  m.scale_ = scale;
  m.ok_ = true;
  return m;
}

std::int64_t LatticeMap::to_lattice(const Coord& c) const {
  BigInt scaled = coord_num(c) * (scale_ / coord_den(c));
  return scaled.convert_to<std::int64_t>();
}

}  // namespace emanet::detail
