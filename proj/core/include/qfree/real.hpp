#pragma once

// Certified real numbers of three kinds: rationals, square roots of
// rationals and natural logarithms of rationals.
//
// Signs of rational linear combinations are decided exactly. A combination
// is zero only when its rational part, the coefficient of every independent
// square root and the combined logarithm all vanish; otherwise MPFR
// interval enclosures are refined until they exclude zero.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <mpfr.h>

#include "qfree/arith.hpp"

namespace qfree {

class Real {
public:
    enum class Kind { rational, sqrt, log };

    static Real rational(Rational value);
    /// sqrt(arg), arg >= 0.
    static Real sqrt(Rational arg);
    /// ln(arg), arg > 0.
    static Real log(Rational arg);

    /// "3/2", "7", "sqrt(2)", "ln(3)" or "log(3)".
    static Real parse(std::string_view text);

    Kind kind() const { return kind_; }
    const Rational& argument() const { return arg_; }
    std::string to_string() const;

    bool is_positive() const;
    /// When the argument is a positive integer and the kind is log.
    bool is_log_of_integer() const;

    /// Directed-rounding enclosure lo <= value <= hi at the precision of lo/hi.
    void enclose(mpfr_t lo, mpfr_t hi) const;

private:
    Real(Kind kind, Rational arg) : kind_(kind), arg_(std::move(arg)) {}

    Kind kind_;
    Rational arg_;
};

/// sum_i coeff_i * term_i.
class LinearForm {
public:
    LinearForm() = default;
    LinearForm(const Real& term) { add(Rational(1), term); }

    LinearForm& add(const Rational& coeff, const Real& term);
    LinearForm& add(const LinearForm& other, const Rational& scale = Rational(1));

    const std::vector<std::pair<Rational, Real>>& terms() const { return terms_; }
    std::string to_string() const;

    /// True when the combination is exactly zero.
    bool is_zero() const;
    /// Certified lower/upper doubles.
    std::pair<double, double> bounds(mpfr_prec_t precision = 128) const;

private:
    std::vector<std::pair<Rational, Real>> terms_;
};

/// -1, 0 or +1. Throws PrecisionError if max_precision bits do not separate a
/// nonzero value from zero.
int sign(const LinearForm& form, mpfr_prec_t max_precision = 1 << 16);

/// sign(a - b).
int compare(const LinearForm& a, const LinearForm& b, mpfr_prec_t max_precision = 1 << 16);

}  // namespace qfree
