#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hamfix {

using Rational = mpq_class;

// Canonical form; throws std::invalid_argument on a zero denominator.
Rational make_rational(long num, long den = 1);

// Accepts "p" or "p/q" with an optional leading minus.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" in lowest terms otherwise.
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);

// Throws std::invalid_argument if r is not an integer that fits in a long.
long to_long(const Rational& r);

}  // namespace hamfix
