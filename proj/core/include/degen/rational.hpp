#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace degen {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar, always in lowest terms with positive denominator.
/// Backed by Boost.Multiprecision; arithmetic never rounds.
using Rational = boost::multiprecision::cpp_rational;

/// n! as an exact integer. Throws NegativeIndexError for n < 0.
Integer factorial(int n);

/// Binomial coefficient C(n, k) as an exact integer; zero when k < 0 or k > n.
/// Throws NegativeIndexError for n < 0.
Integer binomial(int n, int k);

/// base^e for any integer e; negative e inverts. Throws std::domain_error when
/// base is zero and e < 0.
Rational pow_rational(const Rational& base, int e);

/// Canonical text form: "p/q" with the sign on the numerator, or just "p"
/// when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses the canonical "p/q" / "p" form. Strict: no whitespace, no "+" sign,
/// denominator must be a positive integer literal.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

}  // namespace degen
