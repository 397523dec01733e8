#include "qfree/real.hpp"

#include <cctype>
#include <map>

#include "qfree/error.hpp"

namespace qfree {

namespace {

class Interval {
public:
    explicit Interval(mpfr_prec_t precision)
    {
        mpfr_init2(lo, precision);
        mpfr_init2(hi, precision);
        mpfr_set_zero(lo, 1);
        mpfr_set_zero(hi, 1);
    }
    ~Interval()
    {
        mpfr_clear(lo);
        mpfr_clear(hi);
    }
    Interval(const Interval&) = delete;
    Interval& operator=(const Interval&) = delete;

    /// this += coeff * [tlo, thi]
    void add_scaled(const Rational& coeff, mpfr_t tlo, mpfr_t thi)
    {
        mpfr_t a, b;
        mpfr_init2(a, mpfr_get_prec(lo));
        mpfr_init2(b, mpfr_get_prec(lo));
        if (coeff >= 0) {
            mpfr_mul_q(a, tlo, coeff.get_mpq_t(), MPFR_RNDD);
            mpfr_mul_q(b, thi, coeff.get_mpq_t(), MPFR_RNDU);
        } else {
            mpfr_mul_q(a, thi, coeff.get_mpq_t(), MPFR_RNDD);
            mpfr_mul_q(b, tlo, coeff.get_mpq_t(), MPFR_RNDU);
        }
        mpfr_add(lo, lo, a, MPFR_RNDD);
        mpfr_add(hi, hi, b, MPFR_RNDU);
        mpfr_clear(a);
        mpfr_clear(b);
    }

    mpfr_t lo;
    mpfr_t hi;
};

void evaluate(const LinearForm& form, Interval& acc)
{
    const auto precision = mpfr_get_prec(acc.lo);
    mpfr_t tlo, thi;
    mpfr_init2(tlo, precision);
    mpfr_init2(thi, precision);
    for (const auto& [coeff, term] : form.terms()) {
        term.enclose(tlo, thi);
        acc.add_scaled(coeff, tlo, thi);
    }
    mpfr_clear(tlo);
    mpfr_clear(thi);
}

// Splits a positive integer into k^2 * d with d squarefree.
std::pair<BigInt, BigInt> squarefree_split(const BigInt& n)
{
    BigInt k(1), d(1);
    for (const auto& [p, e] : factorize(n)) {
        k *= pow(p, e / 2);
        if (e % 2 == 1) {
            d *= p;
        }
    }
    return {k, d};
}

}  // namespace

Real Real::rational(Rational value)
{
    value.canonicalize();
    return Real(Kind::rational, std::move(value));
}

Real Real::sqrt(Rational arg)
{
    arg.canonicalize();
    if (arg < 0) {
        throw DomainError("square root of a negative number");
    }
    return Real(Kind::sqrt, std::move(arg));
}

Real Real::log(Rational arg)
{
    arg.canonicalize();
    if (arg <= 0) {
        throw DomainError("logarithm of a non-positive number");
    }
    return Real(Kind::log, std::move(arg));
}

Real Real::parse(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    auto inside = [&](std::string_view prefix) -> std::string_view {
        if (text.size() > prefix.size() + 1 && text.substr(0, prefix.size()) == prefix && text.back() == ')') {
            return text.substr(prefix.size(), text.size() - prefix.size() - 1);
        }
        return {};
    };
    if (auto arg = inside("sqrt("); !arg.empty()) {
        return sqrt(parse_rational(arg));
    }
    if (auto arg = inside("ln("); !arg.empty()) {
        return log(parse_rational(arg));
    }
    if (auto arg = inside("log("); !arg.empty()) {
        return log(parse_rational(arg));
    }
    return rational(parse_rational(text));
}

std::string Real::to_string() const
{
    auto arg = arg_.get_den() == 1 ? arg_.get_num().get_str() : qfree::to_string(arg_);
    switch (kind_) {
    case Kind::rational:
        return arg;
    case Kind::sqrt:
        return "sqrt(" + arg + ")";
    case Kind::log:
        return "ln(" + arg + ")";
    }
    return arg;
}

bool Real::is_positive() const
{
    switch (kind_) {
    case Kind::rational:
    case Kind::sqrt:
        return arg_ > 0;
    case Kind::log:
        return arg_ > 1;
    }
    return false;
}

bool Real::is_log_of_integer() const
{
    return kind_ == Kind::log && arg_.get_den() == 1;
}

void Real::enclose(mpfr_t lo, mpfr_t hi) const
{
    switch (kind_) {
    case Kind::rational:
        mpfr_set_q(lo, arg_.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(hi, arg_.get_mpq_t(), MPFR_RNDU);
        return;
    case Kind::sqrt:
        mpfr_set_q(lo, arg_.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(hi, arg_.get_mpq_t(), MPFR_RNDU);
        mpfr_sqrt(lo, lo, MPFR_RNDD);
        mpfr_sqrt(hi, hi, MPFR_RNDU);
        return;
    case Kind::log:
        mpfr_set_q(lo, arg_.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(hi, arg_.get_mpq_t(), MPFR_RNDU);
        mpfr_log(lo, lo, MPFR_RNDD);
        mpfr_log(hi, hi, MPFR_RNDU);
        return;
    }
}

LinearForm& LinearForm::add(const Rational& coeff, const Real& term)
{
    if (coeff != 0) {
        terms_.emplace_back(coeff, term);
    }
    return *this;
}

LinearForm& LinearForm::add(const LinearForm& other, const Rational& scale)
{
    for (const auto& [coeff, term] : other.terms_) {
        add(coeff * scale, term);
    }
    return *this;
}

std::string LinearForm::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [coeff, term] : terms_) {
        if (!out.empty()) {
            out += " + ";
        }
        if (coeff == 1) {
            out += term.to_string();
        } else {
            auto c = coeff.get_den() == 1 ? coeff.get_num().get_str() : "(" + qfree::to_string(coeff) + ")";
            out += c + "*" + term.to_string();
        }
    }
    return out;
}

bool LinearForm::is_zero() const
{
    Rational rational_part(0);
    std::map<BigInt, Rational> roots;        // squarefree d -> coefficient of sqrt(d)
    std::map<BigInt, Rational> log_exponent;  // prime -> exponent in the combined logarithm
    for (const auto& [coeff, term] : terms_) {
        const auto& arg = term.argument();
        switch (term.kind()) {
        case Real::Kind::rational:
            rational_part += coeff * arg;
            break;
        case Real::Kind::sqrt: {
            if (arg == 0) {
                break;
            }
            // sqrt(a/b) = sqrt(a*b)/b = k*sqrt(d)/b
            auto [k, d] = squarefree_split(arg.get_num() * arg.get_den());
            Rational scale = coeff * Rational(k, arg.get_den());
            if (d == 1) {
                rational_part += scale;
            } else {
                roots[d] += scale;
            }
            break;
        }
        case Real::Kind::log:
            for (const auto& [p, e] : factorize(arg.get_num())) {
                log_exponent[p] += coeff * static_cast<long>(e);
            }
            for (const auto& [p, e] : factorize(arg.get_den())) {
                log_exponent[p] -= coeff * static_cast<long>(e);
            }
            break;
        }
    }
    if (rational_part != 0) {
        return false;
    }
    for (const auto& [d, c] : roots) {
        if (c != 0) {
            return false;
        }
    }
    for (const auto& [p, e] : log_exponent) {
        if (e != 0) {
            return false;
        }
    }
    return true;
}

std::pair<double, double> LinearForm::bounds(mpfr_prec_t precision) const
{
    Interval acc(precision);
    evaluate(*this, acc);
    return {mpfr_get_d(acc.lo, MPFR_RNDD), mpfr_get_d(acc.hi, MPFR_RNDU)};
}

int sign(const LinearForm& form, mpfr_prec_t max_precision)
{
    bool all_rational = true;
    Rational exact(0);
    for (const auto& [coeff, term] : form.terms()) {
        if (term.kind() != Real::Kind::rational) {
            all_rational = false;
            break;
        }
        exact += coeff * term.argument();
    }
    if (all_rational) {
        return sgn(exact);
    }
    if (form.is_zero()) {
        return 0;
    }
    for (mpfr_prec_t precision = 64; precision <= max_precision; precision *= 2) {
        Interval acc(precision);
        evaluate(form, acc);
        if (mpfr_sgn(acc.lo) > 0) {
            return 1;
        }
        if (mpfr_sgn(acc.hi) < 0) {
            return -1;
        }
    }
    throw PrecisionError("cannot separate " + form.to_string() + " from zero at " + std::to_string(max_precision) +
                         " bits");
}

int compare(const LinearForm& a, const LinearForm& b, mpfr_prec_t max_precision)
{
    LinearForm diff = a;
    diff.add(b, Rational(-1));
    return sign(diff, max_precision);
}

}  // namespace qfree
