#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace holoprove {

// GMP keeps mpq_class canonical after every arithmetic operation:
// gcd(|num|, den) = 1, den >= 1, zero is 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (whitespace around the slash allowed).
/// Throws ParseError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);
std::string to_string(const Integer& i);

bool is_integer(const Rational& r);

/// Number of decimal digits of |i| (0 has one digit).
std::size_t decimal_digits(const Integer& i);

Integer lcm_of_denominators(const std::vector<Rational>& values);
Integer gcd_of_numerators(const std::vector<Rational>& values);

/// Positive divisors of |n|, ascending. n must be nonzero.
std::vector<Integer> positive_divisors(const Integer& n);

}  // namespace holoprove
