#pragma once

// Density formulas and extremal constructions for quotient-free sets.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qfree/arith.hpp"
#include "qfree/basis.hpp"
#include "qfree/gamma.hpp"
#include "qfree/smooth.hpp"

namespace qfree {

/// Exact enclosure [lower, upper] of a density quantity.
struct DensityBracket {
    Rational lower;
    Rational upper;
    std::string method;  // closed-form | truncated-gamma | series-with-tail
    std::vector<std::pair<std::string, std::string>> detail;

    bool contains(const Rational& q) const { return lower <= q && q <= upper; }
    Rational width() const { return upper - lower; }
};

/// (1/2)(1 + prod (a_i - 1)/(a_i + 1)) for pairwise coprime 1 < a_1 < ... < a_r.
Rational rho_closed_form(const std::vector<BigInt>& a);

/// phi(B) times the gamma bracket over the prime basis of `a`.
DensityBracket rho_general(const RationalSet& a, int depth, const SearchOptions& options = {});

/// Majority colour counts over the smooth sequence of a pair:
/// f[t] = max(|A_0(t)|, |A_1(t)|) for t = 0..seq.size(), f[0] = 0.
std::vector<std::size_t> majority_counts(const SmoothSequence& seq);

/// sum_{t<=terms} f(t) (1/m_t - 1/m_{t+1}) before the phi factor, with f the
/// majority colour count. Needs seq.size() > terms.
Rational sigma_partial_sum(const SmoothSequence& seq, std::size_t terms);

struct SigmaResult {
    DensityBracket bracket;
    std::size_t terms = 0;       // T
    Rational partial_sum;        // pre-phi, through t = T
    Rational tail_upper;         // sum_{t>T} t (1/m_t - 1/m_{t+1}), pre-phi
};

/// Certified bracket for phi * sum_t f(t)(1/m_t - 1/m_{t+1}) with
/// f(t) = max colour count. The tail beyond T is bounded below by
/// f(t) >= t/2 and above by f(t) <= t, summed exactly. Throws BudgetError
/// when the tolerance needs more than max_entries smooth numbers.
SigmaResult sigma_series(const BigInt& p, const BigInt& q, const Rational& tolerance,
                         std::size_t max_entries = 1'000'000);

struct SubsetCount {
    BigInt count;
    std::vector<std::uint64_t> witness;  // sorted; empty unless requested
};

/// Largest {p, q}-quotient-free subset of [N], one majority colour class per
/// basis-free multiplier n (ties go to white).
SubsetCount max_subset_count(const BigInt& p, const BigInt& q, std::uint64_t n, bool with_witness = false);

/// Membership test for exponent vectors of the chosen set E.
using ExponentFilter = std::function<bool(const LatticeVec&)>;

struct DenseSetSample {
    std::uint64_t x = 0;
    std::vector<std::uint64_t> members;
    Rational counting_density;
    /// (sum 1/k)/ln x to 40 significant digits; absent for x = 1.
    std::optional<std::string> log_density;
};

/// S = {m n : n free of the basis, m = prod b_j^{u_j}, u in E}, listed up to x.
DenseSetSample construct_dense_set(const CoprimeBasis& b, std::uint64_t x, const ExponentFilter& in_set);

/// For pairwise coprime integer A and no witness: basis A with the white
/// points. With a witness: prime basis with that finite set. Otherwise the
/// gamma-bracket witness at `depth`.
DenseSetSample construct_dense_set(const RationalSet& a, std::uint64_t x,
                                   const std::optional<std::vector<LatticeVec>>& witness = std::nullopt,
                                   int depth = 8);

struct DensityRow {
    std::uint64_t x = 0;
    std::uint64_t count = 0;
    Rational counting_density;
    std::optional<std::string> log_density;
    std::optional<double> log_density_value;
};

/// Counting and logarithmic densities of a sorted member list at each checkpoint.
std::vector<DensityRow> empirical_densities(const std::vector<std::uint64_t>& members,
                                            const std::vector<std::uint64_t>& checkpoints);

struct GapReport {
    Rational rho;
    DensityBracket sigma;
    bool gap_proven = false;
    Rational tolerance;
    int rounds = 0;
    std::string note;
};

/// Tightens the sigma tolerance (/4 per round) until its lower end exceeds
/// rho({p, q}) or the enumeration budget is spent. Never reports a gap it has
/// not certified.
GapReport strict_gap_check(const BigInt& p, const BigInt& q, std::size_t max_entries = 1'000'000);

}  // namespace qfree
