#include "emanet/coord.hpp"

#include <cmath>

#include "emanet/errors.hpp"

namespace emanet {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Coord parse_decimal(std::string_view text, std::string_view original) {
  bool neg = false;
  if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
    neg = text[0] == '-';
    text.remove_prefix(1);
  }
  auto dot = text.find('.');
  std::string_view int_part = dot == std::string_view::npos ? text : text.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (int_part.empty() && frac_part.empty())
    fail(Errc::ParseError, "empty coordinate literal: '" + std::string(original) + "'");
  if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)))
    fail(Errc::ParseError, "bad coordinate literal: '" + std::string(original) + "'");

  BigInt num = int_part.empty() ? BigInt(0) : BigInt(std::string(int_part));
  BigInt den = 1;
  for (char c : frac_part) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  if (neg) num = -num;
  return Coord(num, den);
}

}  // namespace

Coord parse_coord(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num_part = text.substr(0, slash);
    bool neg = false;
    if (!num_part.empty() && (num_part[0] == '+' || num_part[0] == '-')) {
      neg = num_part[0] == '-';
      num_part.remove_prefix(1);
    }
    if (!all_digits(num_part))
      fail(Errc::ParseError, "bad fraction numerator: '" + std::string(text) + "'");
    BigInt num_int{std::string(num_part)};
    if (neg) num_int = -num_int;
    Coord num(num_int);
    std::string_view den_part = text.substr(slash + 1);
    if (!all_digits(den_part))
      fail(Errc::ParseError, "bad fraction denominator: '" + std::string(text) + "'");
    BigInt den{std::string(den_part)};
    if (den == 0) fail(Errc::ParseError, "zero denominator: '" + std::string(text) + "'");
    return num / Coord(den);
  }
  return parse_decimal(text, text);
}

std::string format_coord(const Coord& c) {
  BigInt num = coord_num(c);
  BigInt den = coord_den(c);
  // Count the factors of 2 and 5 in the denominator; a residue of 1 means the
  // value has a finite decimal expansion.
  BigInt residue = den;
  int twos = 0, fives = 0;
  while (residue % 2 == 0) {
    residue /= 2;
    ++twos;
  }
  while (residue % 5 == 0) {
    residue /= 5;
    ++fives;
  }
  if (residue != 1) return num.str() + "/" + den.str();

  int digits = std::max(twos, fives);
  BigInt scaled = num;
  for (int i = twos; i < digits; ++i) scaled *= 2;
  for (int i = fives; i < digits; ++i) scaled *= 5;
  // scaled / 10^digits is now the value.
  bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  std::string body = scaled.str();
  std::string out = neg ? "-" : "";
  if (digits == 0) return out + body;
  if (static_cast<int>(body.size()) <= digits) body.insert(0, digits + 1 - body.size(), '0');
  std::string frac = body.substr(body.size() - digits);
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  out += body.substr(0, body.size() - digits);
  if (!frac.empty()) out += "." + frac;
  return out;
}

double coord_to_double(const Coord& c) { return c.convert_to<double>(); }

Coord coord_from_double(double v) {
  if (!std::isfinite(v)) fail(Errc::InvalidConfig, "non-finite coordinate");
  if (v == 0.0) return Coord(0);
  int exp = 0;
  double m = std::frexp(v, &exp);              // v = m * 2^exp, |m| in [0.5, 1)
  auto mant = std::int64_t(std::ldexp(m, 53));  // integral by construction
  exp -= 53;
  Coord c(mant);
  BigInt pow2 = BigInt(1) << (exp < 0 ? -exp : exp);
  return exp >= 0 ? Coord(coord_num(c) * pow2) : c / Coord(pow2);
}

}  // namespace emanet
