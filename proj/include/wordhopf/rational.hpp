#pragma once

#include <gmpxx.h>

#include <string>

namespace wordhopf {

// Exact arbitrary-precision rational scalar used everywhere in the engine.
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" (decimal digits only, no whitespace).
// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

// Canonical form: reduced fraction, sign on the numerator, "p" when the
// denominator is 1 and "p/q" otherwise.
std::string to_string(const Rational& value);

Rational factorial(unsigned n);

// Generalized binomial coefficient C(a, k) = a(a-1)...(a-k+1) / k!
// for an arbitrary rational a.
Rational binomial(const Rational& a, unsigned k);

// base^exponent; a negative exponent requires base != 0.
Rational pow_rational(const Rational& base, long exponent);

}  // namespace wordhopf
