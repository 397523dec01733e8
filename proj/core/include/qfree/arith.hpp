#pragma once

// Exact integer and rational types shared by every module.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace qfree {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Exponent vector in Z^s (lattice point when all entries are >= 0).
using LatticeVec = std::vector<int>;

/// Serializes as "num/den", always with an explicit denominator.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Accepts "p/q" or "n" (optionally signed). Throws DomainError on junk.
Rational parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

/// Decimal rendering with the given number of significant digits.
std::string to_decimal(const Rational& q, int significant_digits = 12);

/// b^e for e >= 0.
BigInt pow(const BigInt& base, unsigned long exponent);
/// b^e for any integer e, as an exact rational (b != 0).
Rational pow(const Rational& base, long exponent);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt floor(const Rational& q);
BigInt ceil(const Rational& q);

/// Exact sum of 1/k over the given positive integers, by binary splitting.
Rational reciprocal_sum(const std::vector<std::uint64_t>& ks);

/// Prime factorization by trial division with a probable-prime cofactor check.
/// Returns (prime, multiplicity) ascending. Throws DomainError for n < 1 or
/// for a composite cofactor without small factors.
std::vector<std::pair<BigInt, unsigned long>> factorize(const BigInt& n);

}  // namespace qfree
