#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace hcrit {

using Integer = mpz_class;
/// Exact rational. gmpxx keeps it canonical (reduced, positive denominator)
/// after every arithmetic operation.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// num/den in lowest terms; throws std::domain_error for den = 0.
Rational ratio(const Integer& num, const Integer& den);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

Integer lcm_range(unsigned long n);  // lcm(1, ..., n)
Integer factorial(unsigned long n);

/// Least common multiple of the denominators.
Integer common_denominator(const std::vector<Rational>& values);

/// Number of bits in |z| (0 for z = 0).
std::size_t bit_length(const Integer& z);

}  // namespace hcrit
