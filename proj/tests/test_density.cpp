#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qfree/density.hpp"
#include "qfree/error.hpp"
#include "qfree/lattice.hpp"
#include "qfree/rng.hpp"
#include "qfree_oracles/oracles.hpp"

using namespace qfree;

TEST_CASE("rho_closed_form examples")
{
    CHECK(rho_closed_form({2, 3}) == Rational(7, 12));
    CHECK(rho_closed_form({2}) == Rational(2, 3));
    CHECK(rho_closed_form({2, 3, 5}) == Rational(5, 9));
    CHECK_THROWS_AS(rho_closed_form({2, 4}), DomainError);
    CHECK_THROWS_AS(rho_closed_form({3, 2}), DomainError);
    CHECK_THROWS_AS(rho_closed_form({1, 2}), DomainError);
}

TEST_CASE("closed form equals phi times the white weight")
{
    CounterRng rng(17);
    int done = 0;
    while (done < 10) {
        std::vector<BigInt> a;
        auto r = rng.uniform(1, 4);
        for (int i = 0; i < r; ++i) {
            a.emplace_back(rng.uniform(2, 40));
        }
        std::sort(a.begin(), a.end());
        bool ok = std::adjacent_find(a.begin(), a.end()) == a.end();
        for (std::size_t i = 0; ok && i < a.size(); ++i) {
            for (std::size_t j = i + 1; j < a.size(); ++j) {
                ok = ok && gcd(a[i], a[j]) == 1;
            }
        }
        if (!ok) {
            continue;
        }
        auto b = CoprimeBasis::from_coprime_integers(a);
        CHECK(rho_closed_form(a) == phi(b) * white_weight_value(a));
        ++done;
    }
}

TEST_CASE("rho_general examples")
{
    auto br = rho_general(RationalSet::parse("2,3"), 4);
    CHECK(br.contains(Rational(7, 12)));
    CHECK(br.method == "truncated-gamma");

    br = rho_general(RationalSet::parse("3/2"), 6);
    CHECK(br.lower <= br.upper);
    CHECK(br.lower > Rational(1, 3));

    br = rho_general(RationalSet::parse("2"), 0);
    CHECK(br.lower == Rational(1, 2));
    CHECK(br.upper == 1);
}

TEST_CASE("rho_general brackets the closed form and shrinks with depth")
{
    for (const char* a : {"2", "2,3", "2,3,5", "3,4", "2,5"}) {
        auto set = RationalSet::parse(a);
        auto exact = rho_closed_form(set.integers());
        Rational prev_width(10);
        for (int depth = 0; depth <= 10; ++depth) {
            auto br = rho_general(set, depth);
            CHECK(br.contains(exact));
            CHECK(br.width() <= prev_width);
            prev_width = br.width();
        }
    }
}

TEST_CASE("rho_general is basis independent")
{
    // {4, 9} over the prime basis uses diffs (2,0),(0,2); over itself, units.
    auto prime = rho_general(RationalSet::parse("4,9"), 10);
    CHECK(prime.contains(rho_closed_form({4, 9})));
}

TEST_CASE("sigma partial sum through m_21 = 108")
{
    auto seq = enumerate_smooth_pair(2, 3, 1000);
    REQUIRE(seq.at(21).value == 108);
    auto s = sigma_partial_sum(seq, 21);
    CHECK(s == Rational(17831, 10368));
    CHECK(std::abs(s.get_d() - 1.7198) < 1e-4);
}

TEST_CASE("majority counts follow the colour table")
{
    auto seq = enumerate_smooth_pair(2, 3, 12);
    auto f = majority_counts(seq);
    CHECK(f == std::vector<std::size_t>{0, 1, 1, 2, 2, 3, 3, 4, 4});
}

TEST_CASE("sigma_series brackets")
{
    auto r = sigma_series(2, 3, Rational(1, 10000));
    CHECK(r.bracket.lower > Rational(7, 12));
    CHECK(r.bracket.width() < Rational(1, 10000));
    CHECK(r.bracket.lower <= r.bracket.upper);

    auto loose = sigma_series(2, 3, Rational(1));
    CHECK(loose.bracket.lower >= Rational(1, 3) * Rational(1, 2));
    CHECK(loose.bracket.lower <= r.bracket.lower);
    CHECK(loose.bracket.upper >= r.bracket.upper);

    CHECK_THROWS_AS(sigma_series(2, 4, Rational(1)), DomainError);
    CHECK_THROWS_AS(sigma_series(2, 3, Rational(0)), DomainError);
    CHECK_THROWS_AS(sigma_series(2, 3, Rational(1, 1000000000), 200), BudgetError);
}

TEST_CASE("twoexp identity at T = 50")
{
    auto seq = enumerate_smooth_pair(2, 3, 100000);
    const std::size_t big_t = 50;
    Rational white_prefix(0);
    Rational prefix(0);
    Rational abel(0);
    std::size_t white = 0;
    for (std::size_t t = 1; t <= big_t; ++t) {
        const auto& e = seq.at(t);
        Rational inv(1, e.value);
        prefix += inv;
        if (color_of(e.exponents) == Color::white) {
            ++white;
            white_prefix += inv;
        }
        abel += Rational(white) * (inv - Rational(1, seq.at(t + 1).value));
    }
    // Summation by parts on the finite prefix.
    CHECK(abel == white_prefix - Rational(white) / Rational(seq.at(big_t + 1).value));
    Rational gamma = white_weight_value({2, 3});
    auto b = CoprimeBasis::from_coprime_integers({2, 3});
    Rational tail = total_weight(b) - prefix + Rational(white) / Rational(seq.at(big_t + 1).value);
    CHECK(abel <= gamma);
    CHECK(gamma - abel <= tail);
    CHECK(phi(b) * gamma == Rational(7, 12));
}

TEST_CASE("max_subset_count examples")
{
    auto r = max_subset_count(2, 3, 12, true);
    CHECK(r.count == 7);
    CHECK(r.witness == std::vector<std::uint64_t>{1, 4, 5, 6, 7, 9, 11});
    CHECK(max_subset_count(2, 3, 1).count == 1);
    CHECK(max_subset_count(2, 3, 3).count == 2);
    CHECK_THROWS_AS(max_subset_count(2, 6, 3), DomainError);
}

TEST_CASE("max_subset_count agrees with exhaustive search")
{
    for (auto pq : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 3}, {2, 5}, {3, 4}}) {
        std::vector<Rational> quotients{Rational(pq.first), Rational(pq.second)};
        for (std::uint64_t n = 1; n <= 60; ++n) {
            auto r = max_subset_count(pq.first, pq.second, n, true);
            auto brute = oracle::brute_max_quotient_free(n, {pq.first, pq.second});
            REQUIRE(r.count == brute.size);
            REQUIRE(r.witness.size() == brute.size);
            REQUIRE(oracle::is_quotient_free(r.witness, quotients));
            REQUIRE(r.witness.back() <= n);
        }
    }
}

TEST_CASE("construct_dense_set examples")
{
    auto s = construct_dense_set(RationalSet::parse("2,3"), 12);
    CHECK(s.members == std::vector<std::uint64_t>{1, 4, 5, 6, 7, 9, 11});
    CHECK(s.counting_density == Rational(7, 12));

    s = construct_dense_set(RationalSet::parse("2"), 12);
    CHECK(s.members == std::vector<std::uint64_t>{1, 3, 4, 5, 7, 9, 11, 12});
    CHECK(s.counting_density == Rational(2, 3));

    s = construct_dense_set(RationalSet::parse("2,3"), 1);
    CHECK(s.members == std::vector<std::uint64_t>{1});
    CHECK(s.counting_density == 1);
    CHECK_FALSE(s.log_density.has_value());
}

TEST_CASE("constructed sets are quotient free")
{
    for (const char* a : {"2", "2,3", "3/2", "4/9,6", "2,3,5"}) {
        auto set = RationalSet::parse(a);
        auto s = construct_dense_set(set, 3000);
        CHECK(oracle::is_quotient_free(s.members, set.elements()));
        CHECK(std::is_sorted(s.members.begin(), s.members.end()));
    }
}

TEST_CASE("empirical_densities examples")
{
    std::vector<std::uint64_t> all(100);
    std::iota(all.begin(), all.end(), 1);
    auto rows = empirical_densities(all, {10, 100});
    CHECK(rows[0].counting_density == 1);
    CHECK(rows[1].counting_density == 1);

    auto s = construct_dense_set(RationalSet::parse("2"), 10000);
    rows = empirical_densities(s.members, {10000});
    CHECK(std::abs(rows[0].counting_density.get_d() - 2.0 / 3.0) < 0.01);

    rows = empirical_densities({}, {50});
    CHECK(rows[0].counting_density == 0);
    CHECK(rows[0].count == 0);
}

TEST_CASE("counting and logarithmic densities track each other")
{
    auto s = construct_dense_set(RationalSet::parse("2,3"), 100000);
    auto rows = empirical_densities(s.members, {1000, 10000, 100000});
    REQUIRE(rows.size() == 3);
    REQUIRE(rows[1].log_density_value.has_value());
    CHECK(std::abs(rows[1].counting_density.get_d() - *rows[1].log_density_value) <= 0.1);
    for (const auto& row : rows) {
        double x = static_cast<double>(row.x);
        double bound = 3 * std::log(x) * std::log(x) / x + 0.005;
        CHECK(std::abs(row.counting_density.get_d() - 7.0 / 12.0) <= bound);
    }
}

TEST_CASE("strict gap for (2,3)")
{
    auto g = strict_gap_check(2, 3);
    CHECK(g.gap_proven);
    CHECK(g.rho == Rational(7, 12));
    CHECK(g.sigma.lower > g.rho);
}

TEST_CASE("strict gap never claims a gap it has not certified")
{
    auto g = strict_gap_check(2, 3, 30);
    CHECK_FALSE(g.gap_proven);
    CHECK_FALSE(g.note.empty());
}
