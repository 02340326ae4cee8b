#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace p1inv {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "p/q" or "-p/q". Throws Error(ParseError) on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical textual form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& q);

}  // namespace p1inv
