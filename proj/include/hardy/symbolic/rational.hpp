#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hardy::sym {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Accepts "3", "-7/12", "0.25", "-1.5e-3". Decimal input is converted
/// exactly (0.1 is 1/10, not the nearest double).
Rational parse_rational(std::string_view text);

/// Exact conversion of a finite double.
Rational rational_from_double(double value);

double to_double(const Rational& q);
std::string to_string(const Rational& q);

}  // namespace hardy::sym
