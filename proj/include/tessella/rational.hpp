#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace tessella {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar: arbitrary precision, always in canonical reduced
/// form with positive denominator. Curvature, Euler characteristics and all
/// operator/eigenvector arithmetic use this type; no floating point enters
/// any certified path.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long num, long den = 1) {
    return Rational(Integer(num), Integer(den));
}

/// Always "num/den", including "0/1" and "-1/14": report cells and
/// serialized entries never print bare integers.
std::string fraction_string(const Rational& q);

/// Accepts "a/b" or "a"; throws InputError on junk.
Rational parse_fraction(std::string_view text);

} // namespace tessella
