#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace chainproj {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical "p/q" form with q > 0 and gcd(p, q) = 1. Integers keep the
/// "/1" suffix so every serialized scalar has the same shape.
std::string to_string(const Rational& r);

/// Accepts "p/q" or a bare integer "p". Throws Error(ParseError) otherwise.
Rational parse_rational(std::string_view text);

Integer numerator(const Rational& r);
Integer denominator(const Rational& r);

Integer floor(const Rational& r);
Integer ceil(const Rational& r);

/// Smallest integer k >= 0 with k*k >= r. Requires r >= 0.
Integer ceil_sqrt(const Rational& r);

/// Exact square root when r is the square of a rational.
bool is_perfect_square(const Rational& r, Rational* root = nullptr);

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

}  // namespace chainproj
