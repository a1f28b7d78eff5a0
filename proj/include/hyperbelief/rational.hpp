#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hyperbelief {

// Arbitrary-precision rational, always canonical (reduced, positive
// denominator, zero is 0/1).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "3", "-7/4" or " 1/1000 ". Throws ConfigError on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace hyperbelief
