#pragma once

#include <boost/rational.hpp>
#include <string>
#include <string_view>

namespace diastat {

/// Exact rational arithmetic for the catalog and homogeneous-domain formulas.
/// All invariants handled here are small integers, so 64-bit components are
/// ample.
using Rational = boost::rational<long long>;

/// Canonical "num/den" form, e.g. "4/5", "2/1", "-7/3".
std::string to_string(const Rational& r);

/// Accepts "n", "n/d" with optional sign. Throws InvalidParameterError on
/// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

}  // namespace diastat
