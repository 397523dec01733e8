#pragma once

#include <cstddef>
#include <vector>

#include "qfree/arith.hpp"
#include "qfree/basis.hpp"

namespace qfree {

struct SmoothEntry {
    BigInt value;
    LatticeVec exponents;
};

/// All basis-smooth integers up to `bound`, ascending: m_1 = 1 < m_2 < ...
struct SmoothSequence {
    std::vector<SmoothEntry> entries;
    BigInt bound;

    std::size_t size() const { return entries.size(); }
    /// 1-based access matching the m_t notation.
    const SmoothEntry& at(std::size_t t) const { return entries.at(t - 1); }
};

/// Enumerates prod b_j^{x_j} <= bound by expanding one basis element at a
/// time, then sorting. Throws BudgetError past max_entries.
SmoothSequence enumerate_smooth(const CoprimeBasis& b, const BigInt& bound,
                                std::size_t max_entries = 50'000'000);

/// Same as enumerate_smooth for a pairwise coprime pair (p, q).
SmoothSequence enumerate_smooth_pair(const BigInt& p, const BigInt& q, const BigInt& bound,
                                     std::size_t max_entries = 50'000'000);

/// The t with m_t <= u < m_{t+1}. Requires u >= 1 and seq.bound >= floor(u).
std::size_t smooth_index(const SmoothSequence& seq, const Rational& u);

/// Number of entries with value <= x (x >= 0), i.e. t(x) for x >= 1.
std::size_t count_at_most(const SmoothSequence& seq, const BigInt& x);

}  // namespace qfree
