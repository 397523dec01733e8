#include "qfree/smooth.hpp"

#include <algorithm>

#include "qfree/error.hpp"

namespace qfree {

SmoothSequence enumerate_smooth(const CoprimeBasis& b, const BigInt& bound, std::size_t max_entries)
{
    if (bound < 1) {
        throw DomainError("smooth enumeration bound must be >= 1");
    }
    const auto s = b.dimension();
    SmoothSequence seq;
    seq.bound = bound;
    seq.entries.push_back({BigInt(1), LatticeVec(s, 0)});
    for (std::size_t j = 0; j < s; ++j) {
        const auto& bj = b.basis()[j];
        const auto base_count = seq.entries.size();
        for (std::size_t i = 0; i < base_count; ++i) {
            SmoothEntry e = seq.entries[i];
            while (true) {
                e.value *= bj;
                if (e.value > bound) {
                    break;
                }
                ++e.exponents[j];
                seq.entries.push_back(e);
                if (seq.entries.size() > max_entries) {
                    throw BudgetError("smooth enumeration exceeded " + std::to_string(max_entries) + " entries");
                }
            }
        }
    }
    std::sort(seq.entries.begin(), seq.entries.end(),
              [](const SmoothEntry& x, const SmoothEntry& y) { return x.value < y.value; });
    auto last = std::unique(seq.entries.begin(), seq.entries.end(),
                            [](const SmoothEntry& x, const SmoothEntry& y) { return x.value == y.value; });
    seq.entries.erase(last, seq.entries.end());
    return seq;
}

SmoothSequence enumerate_smooth_pair(const BigInt& p, const BigInt& q, const BigInt& bound, std::size_t max_entries)
{
    if (!(1 < p && p < q) || gcd(p, q) != 1) {
        throw DomainError("need coprime 1 < p < q, got p=" + p.get_str() + ", q=" + q.get_str());
    }
    return enumerate_smooth(CoprimeBasis::from_coprime_integers({p, q}), bound, max_entries);
}

std::size_t count_at_most(const SmoothSequence& seq, const BigInt& x)
{
    auto it = std::upper_bound(seq.entries.begin(), seq.entries.end(), x,
                               [](const BigInt& v, const SmoothEntry& e) { return v < e.value; });
    return static_cast<std::size_t>(it - seq.entries.begin());
}

std::size_t smooth_index(const SmoothSequence& seq, const Rational& u)
{
    if (u < 1) {
        throw DomainError("smooth_index needs u >= 1, got " + to_string(u));
    }
    BigInt whole = floor(u);
    if (seq.bound < whole) {
        throw InsufficientEnumeration("smooth sequence enumerated to " + seq.bound.get_str() +
                                      " does not reach " + to_string(u));
    }
    // m <= u  <=>  m <= floor(u) for integer m.
    return count_at_most(seq, whole);
}

}  // namespace qfree
