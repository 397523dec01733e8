#pragma once

// Checkerboard colouring of lattice points in simplices
// {x in Z_+^r : alpha . x <= c}.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qfree/arith.hpp"
#include "qfree/lattice.hpp"
#include "qfree/real.hpp"

namespace qfree {

class SimplexSpec {
public:
    /// Alphas must be positive and c non-negative.
    SimplexSpec(std::vector<Real> alphas, Real c);

    const std::vector<Real>& alphas() const { return alphas_; }
    const Real& bound() const { return c_; }
    std::size_t dimension() const { return alphas_.size(); }

    /// All alphas and c are logarithms of integers: membership becomes
    /// prod k_i^{x_i} <= n.
    bool integer_mode() const;
    /// Whether the alphas were supplied in nondecreasing order.
    bool sorted() const { return sorted_; }

    /// c - alpha . x >= 0, decided exactly.
    bool contains(const LatticeVec& x) const;

    /// alpha . x as a linear form.
    LinearForm value_at(const LatticeVec& x) const;

private:
    std::vector<Real> alphas_;
    Real c_;
    bool sorted_ = true;
    std::vector<std::pair<double, double>> alpha_bounds_;
    std::pair<double, double> c_bounds_;
};

/// Every lattice point of the simplex, boundary included. Throws BudgetError
/// past max_points.
LatticeConfig simplex_points(const SimplexSpec& spec, std::size_t max_points = 5'000'000);

ColorCount simplex_color_counts(const SimplexSpec& spec);

struct BlackMajorityHit {
    /// Attained threshold alpha . x where black first exceeds white.
    LinearForm threshold;
    /// Next attained value; counts are constant on [threshold, next).
    LinearForm next_threshold;
    /// Integer mode: the integer n with c = ln n.
    std::optional<BigInt> n;
    /// Smallest-denominator rational in [threshold, next); empty in integer mode.
    std::optional<Rational> c;
    std::size_t white = 0;
    std::size_t black = 0;
};

struct BlackMajorityResult {
    std::optional<BlackMajorityHit> hit;
    std::size_t points_scanned = 0;
};

/// Sweeps attained values alpha . x in increasing order and returns the first
/// where black points outnumber white ones. Alphas must be ascending and
/// r >= 2. Gives up (no hit) after `budget` lattice points.
BlackMajorityResult find_black_majority_c(const std::vector<Real>& alphas, std::size_t budget = 20'000);

struct ProfileRow {
    long c = 0;
    std::size_t white = 0;
    std::size_t black = 0;
    long diff() const { return static_cast<long>(white) - static_cast<long>(black); }
};

/// White/black counts for alpha1*x + alpha2*y <= c, c = 1..c_max.
std::vector<ProfileRow> rational_slope_profile(long alpha1, long alpha2, long c_max);

}  // namespace qfree
