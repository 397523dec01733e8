#include <doctest.h>

#include <cmath>
#include <set>

#include "qfree/arith.hpp"
#include "qfree/basis.hpp"
#include "qfree/error.hpp"
#include "qfree/rng.hpp"
#include "qfree/smooth.hpp"
#include "qfree_oracles/oracles.hpp"

using namespace qfree;

namespace {

CoprimeBasis basis_of(std::initializer_list<long> b)
{
    std::vector<BigInt> v;
    for (long x : b) {
        v.emplace_back(x);
    }
    return CoprimeBasis::from_coprime_integers(v);
}

std::vector<long> values(const SmoothSequence& seq)
{
    std::vector<long> out;
    for (const auto& e : seq.entries) {
        out.push_back(e.value.get_si());
    }
    return out;
}

}  // namespace

TEST_CASE("rational parsing and printing")
{
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("5")) == "5/1");
    CHECK(to_string(parse_rational("-2/6")) == "-1/3");
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("abc"), DomainError);
    CHECK_THROWS_AS(parse_rational(""), DomainError);
    CHECK(to_decimal(Rational(7, 12), 6) == "0.583333");
}

TEST_CASE("reciprocal sums and factorization")
{
    CHECK(reciprocal_sum({1, 5, 7, 11}) == Rational(552, 385));
    CHECK(reciprocal_sum({}) == 0);
    auto f = factorize(BigInt(360));
    REQUIRE(f.size() == 3);
    CHECK(f[0].first == 2);
    CHECK(f[0].second == 3);
    CHECK(f[2].first == 5);
    CHECK(factorize(BigInt(1)).empty());
}

TEST_CASE("RationalSet validation")
{
    CHECK_THROWS_AS(RationalSet::parse("1"), DomainError);
    CHECK_THROWS_AS(RationalSet::parse("2,2"), DomainError);
    CHECK_THROWS_AS(RationalSet::parse("2,4/2"), DomainError);
    CHECK_THROWS_AS(RationalSet::parse("-2"), DomainError);
    CHECK_THROWS_AS(RationalSet::parse("0"), DomainError);
    CHECK_THROWS_AS(RationalSet::parse(""), DomainError);
    CHECK(RationalSet::parse("2,3").is_coprime_integer_set());
    CHECK_FALSE(RationalSet::parse("2,4").is_coprime_integer_set());
    CHECK_FALSE(RationalSet::parse("3/2").is_coprime_integer_set());
}

TEST_CASE("derive_basis examples")
{
    auto b = derive_basis(RationalSet::parse("2,3"));
    CHECK(b.basis() == std::vector<BigInt>{2, 3});
    CHECK(b.diffs() == std::vector<LatticeVec>{{1, 0}, {0, 1}});

    b = derive_basis(RationalSet::parse("3/2"));
    CHECK(b.basis() == std::vector<BigInt>{2, 3});
    CHECK(b.diffs() == std::vector<LatticeVec>{{-1, 1}});

    b = derive_basis(RationalSet::parse("4/9,6"));
    CHECK(b.basis() == std::vector<BigInt>{2, 3});
    CHECK(b.diffs() == std::vector<LatticeVec>{{2, -2}, {1, 1}});
    for (std::size_t i = 0; i < b.diffs().size(); ++i) {
        CHECK(b.value_of(b.diffs()[i]) == b.elements()[i]);
    }
}

TEST_CASE("CoprimeBasis rejects broken invariants")
{
    CHECK_THROWS_AS(CoprimeBasis({2, 4}, {{1, 0}}, {Rational(2)}), DomainError);
    CHECK_THROWS_AS(CoprimeBasis({3, 2}, {{1, 0}}, {Rational(3)}), DomainError);
    CHECK_THROWS_AS(CoprimeBasis({2, 3}, {{0, 0}}, {Rational(1)}), DomainError);
    CHECK_THROWS_AS(CoprimeBasis({2, 3}, {{1, 0}}, {Rational(3)}), DomainError);
    CHECK_THROWS_AS(CoprimeBasis::from_coprime_integers({6, 4}), DomainError);
}

TEST_CASE("enumerate_smooth examples")
{
    auto seq = enumerate_smooth(basis_of({2, 3}), 12);
    CHECK(values(seq) == std::vector<long>{1, 2, 3, 4, 6, 8, 9, 12});
    CHECK(seq.at(1).exponents == LatticeVec{0, 0});
    CHECK(seq.at(8).exponents == LatticeVec{2, 1});
    CHECK(values(enumerate_smooth(basis_of({2}), 10)) == std::vector<long>{1, 2, 4, 8});
    seq = enumerate_smooth(basis_of({2, 3}), 1);
    REQUIRE(seq.size() == 1);
    CHECK(seq.at(1).exponents == LatticeVec{0, 0});
    CHECK_THROWS_AS(enumerate_smooth(basis_of({2, 3}), 0), DomainError);
}

TEST_CASE("enumerate_smooth agrees with the nested-loop oracle")
{
    for (auto b : std::vector<std::vector<long>>{{2, 3}, {2, 3, 5}, {3, 4, 5}, {2}, {7, 10}}) {
        std::vector<BigInt> big(b.begin(), b.end());
        std::vector<std::uint64_t> small(b.begin(), b.end());
        auto basis = CoprimeBasis::from_coprime_integers(big);
        for (long bound : {1L, 2L, 17L, 1000L, 10000L}) {
            auto seq = enumerate_smooth(basis, bound);
            auto expected = oracle::naive_smooth(small, static_cast<std::uint64_t>(bound));
            REQUIRE(seq.size() == expected.size());
            for (std::size_t i = 0; i < seq.size(); ++i) {
                CHECK(seq.entries[i].value == expected[i].first);
                CHECK(seq.entries[i].exponents == expected[i].second);
            }
        }
    }
}

TEST_CASE("smooth_index examples and errors")
{
    auto seq = enumerate_smooth(basis_of({2, 3}), 12);
    CHECK(smooth_index(seq, Rational(12, 5)) == 2);
    CHECK(smooth_index(seq, Rational(1)) == 1);
    CHECK(smooth_index(seq, Rational(12)) == 8);
    CHECK_THROWS_AS(smooth_index(seq, Rational(1, 2)), DomainError);
    CHECK_THROWS_AS(smooth_index(seq, Rational(13)), InsufficientEnumeration);
}

TEST_CASE("smooth_index brackets random rationals")
{
    auto seq = enumerate_smooth(basis_of({2, 3}), 5000);
    CounterRng rng(11);
    for (int i = 0; i < 1000; ++i) {
        Rational u(rng.uniform(1, 4000 * 97), rng.uniform(1, 97));
        u.canonicalize();
        if (u < 1) {
            u = 1 / u;
        }
        if (u >= Rational(seq.entries.back().value)) {
            continue;
        }
        auto t = smooth_index(seq, u);
        CHECK(Rational(seq.at(t).value) <= u);
        CHECK(u < Rational(seq.at(t + 1).value));
    }
}

TEST_CASE("count_coprime_part examples")
{
    CHECK(count_coprime_part(basis_of({2, 3}), 12) == 4);
    CHECK(count_coprime_part(basis_of({2}), 10) == 5);
    CHECK(count_coprime_part(basis_of({2, 3}), 1) == 1);
}

TEST_CASE("count_coprime_part error stays below 2^s")
{
    for (auto b : std::vector<std::vector<long>>{{2, 3}, {2, 3, 5}, {3, 4, 5}}) {
        std::vector<BigInt> big(b.begin(), b.end());
        std::vector<std::uint64_t> small(b.begin(), b.end());
        auto basis = CoprimeBasis::from_coprime_integers(big);
        Rational ph = phi(basis);
        Rational limit(1L << b.size());
        std::uint64_t sieve = 0;
        for (std::uint64_t x = 1; x <= 10000; ++x) {
            sieve += is_basis_free(x, small) ? 1 : 0;
            BigInt c = count_coprime_part(basis, BigInt(static_cast<unsigned long>(x)));
            REQUIRE(c == sieve);
            Rational dev = Rational(c) - ph * static_cast<unsigned long>(x);
            REQUIRE(abs(dev) < limit);
        }
        CHECK(sieve == oracle::sieve_coprime_count(small, 10000));
    }
}

TEST_CASE("phi examples")
{
    CHECK(phi(basis_of({2, 3})) == Rational(1, 3));
    CHECK(phi(basis_of({2})) == Rational(1, 2));
    CHECK(phi(basis_of({2, 3, 5})) == Rational(4, 15));
}

TEST_CASE("harmonic_coprime_sum examples")
{
    CHECK(harmonic_coprime_sum(basis_of({2, 3}), 12) == Rational(552, 385));
    CHECK(harmonic_coprime_sum(basis_of({2}), 3) == Rational(4, 3));
    CHECK(harmonic_coprime_sum(basis_of({2, 3}), 1) == 1);
}

TEST_CASE("harmonic_coprime_sum minus phi ln X stays bounded")
{
    auto basis = basis_of({2, 3});
    double ph = phi(basis).get_d();
    double lo = 1e9;
    double hi = -1e9;
    for (std::uint64_t x = 10; x <= 100000; x *= 10) {
        double dev = harmonic_coprime_sum(basis, x).get_d() - ph * std::log(static_cast<double>(x));
        lo = std::min(lo, dev);
        hi = std::max(hi, dev);
    }
    CHECK(hi - lo < 1.0);
}

TEST_CASE("factor_decompose examples")
{
    auto b = basis_of({2, 3});
    auto f = factor_decompose(40, b);
    CHECK(f.m == 8);
    CHECK(f.n == 5);
    CHECK(f.exponents == LatticeVec{3, 0});
    f = factor_decompose(7, b);
    CHECK(f.m == 1);
    CHECK(f.n == 7);
    f = factor_decompose(36, b);
    CHECK(f.m == 36);
    CHECK(f.n == 1);
    CHECK_THROWS_AS(factor_decompose(0, b), DomainError);
}

TEST_CASE("factor_decompose recomposes for k <= 10^4")
{
    for (auto b : {basis_of({2, 3}), basis_of({2, 3, 5}), basis_of({4, 9})}) {
        for (long k = 1; k <= 10000; ++k) {
            auto f = factor_decompose(k, b);
            REQUIRE(f.m * f.n == k);
            REQUIRE(is_basis_free(f.n, b));
            REQUIRE(b.value_of(f.exponents) == Rational(f.m));
            auto again = factor_decompose(f.m * f.n, b);
            REQUIRE(again.m == f.m);
            REQUIRE(again.n == f.n);
        }
    }
}

TEST_CASE("counter RNG is deterministic and in range")
{
    CounterRng a(0);
    CounterRng b(0);
    for (int i = 0; i < 100; ++i) {
        CHECK(a.next() == b.next());
    }
    CounterRng c(0);
    // First SplitMix64 draw for seed 0.
    CHECK(c.next() == 0xe220a8397b1dcdafULL);
    CounterRng d(5);
    std::set<std::int64_t> seen;
    for (int i = 0; i < 1000; ++i) {
        auto v = d.uniform(-3, 3);
        CHECK(v >= -3);
        CHECK(v <= 3);
        seen.insert(v);
    }
    CHECK(seen.size() == 7);
}
