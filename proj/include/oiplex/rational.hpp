#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace oiplex {

// All game data and solver state is exact. GMP keeps rationals in canonical
// reduced form (denominator > 0, gcd 1) after every operation, so equality
// is structural.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Floor division for arbitrary signs (mpz_int's operator/ truncates).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  BigInt r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
  return -floor_div(-a, b);
}

inline BigInt floor_rational(const Rational& r) {
  return floor_div(numerator(r), denominator(r));
}

inline BigInt ceil_rational(const Rational& r) {
  return ceil_div(numerator(r), denominator(r));
}

// Largest grid point k/2^bits that is <= r.
inline Rational floor_to_dyadic(const Rational& r, unsigned bits) {
  BigInt scale = BigInt(1) << bits;
  BigInt k = floor_rational(r * scale);
  return Rational(k, scale);
}

// Accepts "<int>", "<int>/<posint>" and plain decimals such as "0.9" or
// "-2.50", converted exactly. Anything else yields nullopt.
std::optional<Rational> parse_rational(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise.
inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace oiplex
