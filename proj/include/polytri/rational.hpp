#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace polytri {

// Exact arithmetic everywhere: triangle entries, polynomial coefficients and
// probabilities are arbitrary-precision rationals in canonical reduced form
// (gcd(|num|, den) = 1, den >= 1).  cpp_rational maintains that invariant.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p", or "p/q" with optional surrounding whitespace.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical textual form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// ln of a positive rational; safe for values far outside double range.
double log_rational(const Rational& value);

/// ln |v| for a nonzero big integer.
double log_big_int(const BigInt& value);

/// C(n, k) for integer n >= 0; zero when k < 0 or k > n.
BigInt binomial(long long n, long long k);

/// Generalized binomial x(x-1)...(x-i+1)/i! for any integer upper argument;
/// C(x, 0) = 1.  Needed for upper-negation style identities with x < 0.
Rational falling_binomial(long long x, long long i);

BigInt factorial(unsigned n);

}  // namespace polytri
