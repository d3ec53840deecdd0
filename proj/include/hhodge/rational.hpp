#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hhodge {

/// Arbitrary-precision fraction, always canonical (lowest terms, positive
/// denominator).  Every integral computed by the library is one of these.
using Rational = mpq_class;
using Integer = mpz_class;

/// Builds num/den in lowest terms.  Throws std::domain_error on den == 0.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& x);

/// Always "p/q", including "3/1" and "0/1".
std::string to_fraction_string(const Rational& x);

/// Accepts "p", "p/q", with an optional leading sign.  Throws ParseError.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& x);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// x^e for a possibly negative exponent; throws std::domain_error for 0^e, e < 0.
Rational power(const Rational& x, long e);

}  // namespace hhodge
