#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace permpat {

using Rational = mpq_class;
using BigInt = mpz_class;

/// "19/54", "-1", "0".
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Accepts "a", "a/b", with optional sign. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Exact n!, throws TooLarge past 20!.
std::uint64_t factorial(int n);

/// Exact binomial coefficient; throws TooLarge on 64-bit overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

BigInt big_factorial(int n);
BigInt big_binomial(unsigned long n, unsigned long k);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace permpat
