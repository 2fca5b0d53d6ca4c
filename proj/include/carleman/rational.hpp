#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace carleman {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "p/q", "-p/q" or a finite decimal such as "1.5" / "-0.25".
/// Throws Error{ParseError} on anything else.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

Rational make_rational(long num, long den = 1);

Integer factorial(unsigned long k);

/// Smallest rational of the form a / (den * 2^bits) that is >= sqrt(value).
/// Exact when value is the square of a rational.
Rational sqrt_upper(const Rational& value, unsigned bits = 40);

/// Returns the exact square root when value is a perfect rational square.
bool exact_sqrt(const Rational& value, Rational& root);

Integer lcm_of_denominators(std::span<const Rational> values);

}  // namespace carleman
