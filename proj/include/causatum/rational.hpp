#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace causatum {

// All probabilities, utilities, and numeric bindings are exact rationals.
// Floating point never enters the computation path.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Parses "3/4", "-7/10", "0.4", "-3.2", ".5", or "12" into an exact value.
// Decimal notation is converted exactly (0.4 -> 2/5). Throws DomainError on
// anything else.
Rational parse_rational(const std::string& text);

// Canonical rendering: "num/den" for proper fractions, plain integer otherwise.
std::string format_rational(const Rational& value);

// 2^exponent as an exact integer.
Integer pow2(unsigned exponent);

// Binomial coefficient C(n, k), exact.
Integer binomial(unsigned n, unsigned k);

}  // namespace causatum
