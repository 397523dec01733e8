#pragma once

// Forbidden-quotient sets and their coprime bases.

#include <cstdint>
#include <string_view>
#include <vector>

#include "qfree/arith.hpp"

namespace qfree {

/// A finite set of positive rationals, none equal to 1, stored reduced and in
/// the order given.
class RationalSet {
public:
    explicit RationalSet(std::vector<Rational> elements);

    /// Comma-separated list of "p/q" or integers, e.g. "2,3/2".
    static RationalSet parse(std::string_view text);

    const std::vector<Rational>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    /// True when every element is an integer and the integers are pairwise coprime.
    bool is_coprime_integer_set() const;
    /// The elements as integers; throws DomainError unless all are integers.
    std::vector<BigInt> integers() const;

private:
    std::vector<Rational> elements_;
};

/// Pairwise coprime integers b_1 < ... < b_s together with the exponent
/// vectors expressing each a_i as prod_j b_j^{u_ij}.
class CoprimeBasis {
public:
    CoprimeBasis(std::vector<BigInt> basis, std::vector<LatticeVec> diffs, std::vector<Rational> elements);

    /// B = A itself for pairwise coprime integers A; diffs are unit vectors.
    static CoprimeBasis from_coprime_integers(std::vector<BigInt> a);

    const std::vector<BigInt>& basis() const { return basis_; }
    const std::vector<LatticeVec>& diffs() const { return diffs_; }
    /// The rationals a_i the diffs represent, aligned with diffs().
    const std::vector<Rational>& elements() const { return elements_; }
    std::size_t dimension() const { return basis_.size(); }

    /// prod_j b_j^{u_j} for u in Z^s.
    Rational value_of(const LatticeVec& u) const;
    /// prod_j b_j^{-u_j}, the weight of a lattice point.
    Rational weight_of(const LatticeVec& u) const;

private:
    std::vector<BigInt> basis_;
    std::vector<LatticeVec> diffs_;
    std::vector<Rational> elements_;
};

/// Unique k = m * n with m B-smooth and n divisible by no b_j.
struct Factorization {
    BigInt m;
    BigInt n;
    LatticeVec exponents;  // of m over the basis
};

/// Prime basis of all numerators and denominators, primes ascending.
CoprimeBasis derive_basis(const RationalSet& a);

/// prod (1 - 1/b_j): the natural density of integers free of the basis.
Rational phi(const CoprimeBasis& b);

/// |{n <= x : b_j does not divide n for all j}| by inclusion-exclusion.
BigInt count_coprime_part(const CoprimeBasis& b, const BigInt& x);

/// Exact sum of 1/n over n <= x free of the basis.
Rational harmonic_coprime_sum(const CoprimeBasis& b, std::uint64_t x);

Factorization factor_decompose(const BigInt& k, const CoprimeBasis& b);

/// True when no b_j divides n.
bool is_basis_free(const BigInt& n, const CoprimeBasis& b);
bool is_basis_free(std::uint64_t n, const std::vector<std::uint64_t>& basis);

}  // namespace qfree
