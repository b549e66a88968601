#pragma once

#include <gmpxx.h>

#include <string>

namespace redform {

// All verdict-relevant arithmetic is exact. mpq_class keeps values in
// canonical form (positive denominator, reduced).
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" with q a positive integer. Rejects "1/0",
// floats, and anything with stray characters.
Rational parse_rational(const std::string& s);

// "p/q", or just "p" when the denominator is 1.
std::string rational_str(const Rational& r);

}  // namespace redform
