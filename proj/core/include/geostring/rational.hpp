#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace geostring {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational with arbitrary-precision numerator/denominator.
// Invariants: den > 0, gcd(|num|, den) = 1, zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses "p/q" or a plain integer literal; q must be positive after
// normalization and "p/0" is rejected.
Rational parse_rational(const std::string& tok);

// Canonical text form: "p" when q == 1, else "p/q".
std::string rational_str(const Rational& r);

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline int sign_of(const Rational& r) { return r.sign(); }

// Decimal expansion with `digits` fractional digits, truncated toward zero.
// Used only for SVG output, never on a correctness path.
std::string rational_decimal(const Rational& r, int digits);

}  // namespace geostring
