#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace emanet {

// Exact rational scalar used for all coordinates. Kept in lowest terms with a
// positive denominator by the backing type.
using Coord = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigInt coord_num(const Coord& c) { return boost::multiprecision::numerator(c); }
inline BigInt coord_den(const Coord& c) { return boost::multiprecision::denominator(c); }

// Parses a coordinate literal: an optional sign, decimal digits, an optional
// fractional part ("12", "-3.04", ".5"), or an explicit fraction "p/q".
// Anything else (including exponents) raises ParseError.
Coord parse_coord(std::string_view text);

// Formats exactly. Denominators of the form 2^a 5^b print as finite decimals
// (no trailing zeros); anything else prints as "p/q". parse_coord(format_coord(c)) == c.
std::string format_coord(const Coord& c);

double coord_to_double(const Coord& c);

// Exact rational value of a finite double (a dyadic fraction).
Coord coord_from_double(double v);

}  // namespace emanet
