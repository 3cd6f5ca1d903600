#pragma once

// Exact integer and rational types shared by every module.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace rsld {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Parses "a/b", "a", or a decimal "0.125" into an exact rational.
/// Throws Error(ParseError) on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Parses a non-negative integer, also accepting "b^e" (e.g. "2^64").
BigInt parse_bigint(std::string_view text);

std::string to_string(const Rational& r);
std::string to_string(const BigInt& x);

BigInt floor_of(const Rational& r);
BigInt ceil_of(const Rational& r);

BigInt ipow(const BigInt& base, std::uint64_t exponent);

/// Integer k-th root rounded down, for x >= 0 and k >= 1.
BigInt iroot(const BigInt& x, unsigned k);

/// Number of bits in the binary representation of x > 0.
std::uint64_t bit_length(const BigInt& x);

inline bool is_power_of_two(const BigInt& x) {
  return x > 0 && (x & (x - 1)) == 0;
}

}  // namespace rsld
