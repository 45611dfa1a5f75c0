#pragma once

#include "isel/types.hpp"

#include <string>

namespace isel {

/// Parses "42", "-3.25", ".5" or "7/3" into an exact rational.
Rational parse_rational(const std::string& text);

/// Exact textual form: an integer, a terminating decimal when the
/// denominator divides a power of ten, otherwise "num/den".
std::string format_rational(const Rational& r);

/// Fixed-point decimal with `digits` fractional digits, rounding half away
/// from zero. Exact integer arithmetic, so output is reproducible.
std::string rational_to_decimal(const Rational& r, int digits);

}  // namespace isel
