#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace nmv {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Renders a rational as "a/b", or as "a" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "a/b" or "a" (optional leading sign). Throws InputError.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

Integer binomial(std::int64_t n, std::int64_t k);
Integer factorial(std::int64_t n);
Integer power(const Integer& base, std::uint64_t exponent);

}  // namespace nmv
