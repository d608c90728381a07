#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace subdivlab {

using Rational = mpq_class;
using BigInt = mpz_class;

// "num/den" in lowest terms; integers are written without a denominator.
std::string to_string(const Rational& q);

// Accepts "p", "p/q" and finite decimals such as "-1.25". Throws InputError.
Rational parse_rational(std::string_view text);

Rational make_rational(std::int64_t num, std::int64_t den = 1);

BigInt ipow(const BigInt& base, std::uint64_t exponent);

// Largest integer k >= 0 with k^root <= value (value >= 0).
BigInt iroot_floor(const BigInt& value, unsigned long root);

// floor(m^(num/den)) for m >= 1 and num >= 0, den >= 1, computed exactly.
BigInt floor_power(const BigInt& m, std::uint64_t num, std::uint64_t den);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

double to_double(const Rational& q);

}  // namespace subdivlab
