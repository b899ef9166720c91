#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace luk {

// Exact arbitrary-precision rational. GMP keeps values canonical (lowest
// terms, positive denominator) after every arithmetic operation.
using Rational = mpq_class;

// Parses "p" or "p/q" with an optional leading sign. Throws
// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

bool in_unit_interval(const Rational& r);

}  // namespace luk
