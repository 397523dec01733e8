#include "qfree/basis.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "qfree/error.hpp"

namespace qfree {

RationalSet::RationalSet(std::vector<Rational> elements) : elements_(std::move(elements))
{
    if (elements_.empty()) {
        throw DomainError("quotient set is empty");
    }
    for (auto& q : elements_) {
        q.canonicalize();
        if (q <= 0) {
            throw DomainError("quotient " + to_string(q) + " is not positive");
        }
        if (q == 1) {
            throw DomainError("quotient 1 is not allowed");
        }
    }
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        for (std::size_t j = i + 1; j < elements_.size(); ++j) {
            if (elements_[i] == elements_[j]) {
                throw DomainError("duplicate quotient " + to_string(elements_[i]));
            }
        }
    }
}

RationalSet RationalSet::parse(std::string_view text)
{
    std::vector<Rational> out;
    while (!text.empty()) {
        auto comma = text.find(',');
        auto item = text.substr(0, comma);
        out.push_back(parse_rational(item));
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    return RationalSet(std::move(out));
}

bool RationalSet::is_coprime_integer_set() const
{
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i].get_den() != 1) {
            return false;
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (gcd(elements_[i].get_num(), elements_[j].get_num()) != 1) {
                return false;
            }
        }
    }
    return true;
}

std::vector<BigInt> RationalSet::integers() const
{
    std::vector<BigInt> out;
    for (const auto& q : elements_) {
        if (q.get_den() != 1) {
            throw DomainError("quotient " + to_string(q) + " is not an integer");
        }
        out.push_back(q.get_num());
    }
    return out;
}

CoprimeBasis::CoprimeBasis(std::vector<BigInt> basis, std::vector<LatticeVec> diffs, std::vector<Rational> elements)
    : basis_(std::move(basis)), diffs_(std::move(diffs)), elements_(std::move(elements))
{
    for (std::size_t j = 0; j < basis_.size(); ++j) {
        if (basis_[j] <= 1) {
            throw DomainError("basis element " + basis_[j].get_str() + " is not greater than 1");
        }
        if (j > 0 && basis_[j - 1] >= basis_[j]) {
            throw DomainError("basis is not strictly increasing");
        }
        for (std::size_t i = 0; i < j; ++i) {
            if (gcd(basis_[i], basis_[j]) != 1) {
                throw DomainError("basis elements " + basis_[i].get_str() + " and " + basis_[j].get_str() +
                                  " are not coprime");
            }
        }
    }
    if (diffs_.size() != elements_.size()) {
        throw DomainError("diff vectors and quotients differ in number");
    }
    for (std::size_t i = 0; i < diffs_.size(); ++i) {
        if (diffs_[i].size() != basis_.size()) {
            throw DomainError("diff vector has the wrong dimension");
        }
        if (std::all_of(diffs_[i].begin(), diffs_[i].end(), [](int v) { return v == 0; })) {
            throw DomainError("zero diff vector");
        }
        if (value_of(diffs_[i]) != elements_[i]) {
            throw DomainError("diff vector does not reproduce " + to_string(elements_[i]));
        }
    }
}

CoprimeBasis CoprimeBasis::from_coprime_integers(std::vector<BigInt> a)
{
    std::sort(a.begin(), a.end());
    std::vector<LatticeVec> diffs;
    std::vector<Rational> elements;
    for (std::size_t i = 0; i < a.size(); ++i) {
        LatticeVec u(a.size(), 0);
        u[i] = 1;
        diffs.push_back(std::move(u));
        elements.emplace_back(a[i]);
    }
    return CoprimeBasis(std::move(a), std::move(diffs), std::move(elements));
}

Rational CoprimeBasis::value_of(const LatticeVec& u) const
{
    Rational r(1);
    for (std::size_t j = 0; j < basis_.size(); ++j) {
        r *= pow(Rational(basis_[j]), u[j]);
    }
    return r;
}

Rational CoprimeBasis::weight_of(const LatticeVec& u) const
{
    BigInt den(1);
    for (std::size_t j = 0; j < basis_.size(); ++j) {
        den *= pow(basis_[j], static_cast<unsigned long>(u[j]));
    }
    return Rational(BigInt(1), den);
}

CoprimeBasis derive_basis(const RationalSet& a)
{
    std::map<BigInt, std::map<std::size_t, int>> exps;  // prime -> (element index -> exponent)
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& q = a.elements()[i];
        for (const auto& [p, e] : factorize(q.get_num())) {
            exps[p][i] += static_cast<int>(e);
        }
        for (const auto& [p, e] : factorize(q.get_den())) {
            exps[p][i] -= static_cast<int>(e);
        }
    }
    std::vector<BigInt> basis;
    for (const auto& [p, _] : exps) {
        basis.push_back(p);
    }
    std::vector<LatticeVec> diffs(a.size(), LatticeVec(basis.size(), 0));
    std::size_t j = 0;
    for (const auto& [p, per_element] : exps) {
        for (const auto& [i, e] : per_element) {
            diffs[i][j] = e;
        }
        ++j;
    }
    return CoprimeBasis(std::move(basis), std::move(diffs), a.elements());
}

Rational phi(const CoprimeBasis& b)
{
    Rational r(1);
    for (const auto& bj : b.basis()) {
        r *= Rational(bj - 1, bj);
    }
    r.canonicalize();
    return r;
}

BigInt count_coprime_part(const CoprimeBasis& b, const BigInt& x)
{
    const auto s = b.dimension();
    if (s > 24) {
        throw DomainError("inclusion-exclusion over more than 24 basis elements");
    }
    BigInt total(0);
    for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
        BigInt prod(1);
        int sign = 1;
        for (std::size_t j = 0; j < s; ++j) {
            if (mask >> j & 1u) {
                prod *= b.basis()[j];
                sign = -sign;
            }
        }
        BigInt term = floor_div(x, prod);
        total += sign > 0 ? term : BigInt(-term);
    }
    return total;
}

bool is_basis_free(const BigInt& n, const CoprimeBasis& b)
{
    return std::none_of(b.basis().begin(), b.basis().end(),
                        [&](const BigInt& bj) { return mpz_divisible_p(n.get_mpz_t(), bj.get_mpz_t()) != 0; });
}

bool is_basis_free(std::uint64_t n, const std::vector<std::uint64_t>& basis)
{
    return std::none_of(basis.begin(), basis.end(), [&](std::uint64_t bj) { return n % bj == 0; });
}

namespace {

std::vector<std::uint64_t> small_basis(const CoprimeBasis& b)
{
    std::vector<std::uint64_t> out;
    for (const auto& bj : b.basis()) {
        out.push_back(bj.fits_ulong_p() ? bj.get_ui() : UINT64_MAX);
    }
    return out;
}

}  // namespace

Rational harmonic_coprime_sum(const CoprimeBasis& b, std::uint64_t x)
{
    auto basis = small_basis(b);
    std::vector<std::uint64_t> ks;
    for (std::uint64_t n = 1; n <= x; ++n) {
        if (is_basis_free(n, basis)) {
            ks.push_back(n);
        }
    }
    return reciprocal_sum(ks);
}

Factorization factor_decompose(const BigInt& k, const CoprimeBasis& b)
{
    if (k < 1) {
        throw DomainError("factor_decompose needs k >= 1");
    }
    Factorization f{BigInt(1), k, LatticeVec(b.dimension(), 0)};
    for (std::size_t j = 0; j < b.dimension(); ++j) {
        const auto& bj = b.basis()[j];
        while (mpz_divisible_p(f.n.get_mpz_t(), bj.get_mpz_t())) {
            mpz_divexact(f.n.get_mpz_t(), f.n.get_mpz_t(), bj.get_mpz_t());
            f.m *= bj;
            ++f.exponents[j];
        }
    }
    return f;
}

}  // namespace qfree
