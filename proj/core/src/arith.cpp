#include "qfree/arith.hpp"

#include <cctype>
#include <cstdio>
#include <span>

#include <mpfr.h>

#include "qfree/error.hpp"

namespace qfree {

std::string to_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z)
{
    return z.get_str();
}

namespace {

bool is_integer_text(std::string_view s)
{
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        i = 1;
    }
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace

BigInt parse_integer(std::string_view text)
{
    text = trim(text);
    if (!is_integer_text(text)) {
        throw DomainError("not an integer: '" + std::string(text) + "'");
    }
    std::string digits(text.front() == '+' ? text.substr(1) : text);
    return BigInt(digits);
}

Rational parse_rational(std::string_view text)
{
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) {
        throw DomainError("zero denominator: '" + std::string(text) + "'");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_decimal(const Rational& q, int significant_digits)
{
    mpfr_t x;
    mpfr_init2(x, 256);
    mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDN);
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", significant_digits, x);
    std::string out(buf);
    mpfr_free_str(buf);
    mpfr_clear(x);
    return out;
}

BigInt pow(const BigInt& base, unsigned long exponent)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rational pow(const Rational& base, long exponent)
{
    if (exponent >= 0) {
        Rational r(pow(base.get_num(), static_cast<unsigned long>(exponent)),
                   pow(base.get_den(), static_cast<unsigned long>(exponent)));
        r.canonicalize();
        return r;
    }
    if (base == 0) {
        throw DomainError("zero to a negative power");
    }
    auto e = static_cast<unsigned long>(-exponent);
    Rational r(pow(base.get_den(), e), pow(base.get_num(), e));
    r.canonicalize();
    return r;
}

BigInt gcd(const BigInt& a, const BigInt& b)
{
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

BigInt floor_div(const BigInt& a, const BigInt& b)
{
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

BigInt floor(const Rational& q)
{
    return floor_div(q.get_num(), q.get_den());
}

BigInt ceil(const Rational& q)
{
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

namespace {

// Returns (P, Q) with P/Q = sum 1/k over the span, unreduced.
std::pair<BigInt, BigInt> split_sum(std::span<const std::uint64_t> ks)
{
    if (ks.size() == 1) {
        BigInt den;
        mpz_set_ui(den.get_mpz_t(), ks[0]);
        return {BigInt(1), den};
    }
    auto mid = ks.size() / 2;
    auto [p1, q1] = split_sum(ks.first(mid));
    auto [p2, q2] = split_sum(ks.subspan(mid));
    return {p1 * q2 + p2 * q1, q1 * q2};
}

}  // namespace

Rational reciprocal_sum(const std::vector<std::uint64_t>& ks)
{
    if (ks.empty()) {
        return Rational(0);
    }
    for (auto k : ks) {
        if (k == 0) {
            throw DomainError("reciprocal of zero");
        }
    }
    auto [p, q] = split_sum(ks);
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::vector<std::pair<BigInt, unsigned long>> factorize(const BigInt& n)
{
    if (n < 1) {
        throw DomainError("cannot factor a non-positive integer");
    }
    constexpr unsigned long trial_limit = 1'000'000;
    std::vector<std::pair<BigInt, unsigned long>> out;
    BigInt rest = n;
    for (unsigned long d = 2; d <= trial_limit; d += (d == 2 ? 1 : 2)) {
        BigInt dd(d);
        if (dd * dd > rest) {
            break;
        }
        unsigned long e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
            ++e;
        }
        if (e > 0) {
            out.emplace_back(dd, e);
        }
    }
    if (rest > 1) {
        BigInt limit(trial_limit);
        if (rest > limit * limit && mpz_probab_prime_p(rest.get_mpz_t(), 40) == 0) {
            throw DomainError("cannot factor " + n.get_str() + ": composite cofactor beyond trial division");
        }
        out.emplace_back(rest, 1);
    }
    return out;
}

}  // namespace qfree
