#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qfree/arith.hpp"

namespace qfree::oracle {

/// All prod b_j^{x_j} <= bound by looping over every exponent box, sorted.
std::vector<std::pair<std::uint64_t, LatticeVec>> naive_smooth(const std::vector<std::uint64_t>& basis,
                                                               std::uint64_t bound);

/// Count of n <= x divisible by no basis element, by direct scan.
std::uint64_t sieve_coprime_count(const std::vector<std::uint64_t>& basis, std::uint64_t x);

struct BruteSubset {
    std::size_t size = 0;
    std::vector<std::uint64_t> witness;
};

/// Largest subset of [n] with no ratio in `quotients` (integers > 1). Splits
/// the ratio graph into connected components and tries every subset of each.
BruteSubset brute_max_quotient_free(std::uint64_t n, const std::vector<std::uint64_t>& quotients);

/// True when no ratio of two members lies in `quotients`.
bool is_quotient_free(const std::vector<std::uint64_t>& set, const std::vector<Rational>& quotients);

/// Exhaustive maximum difference-free subset size (at most 24 points).
std::size_t brute_max_difference_free(const std::vector<LatticeVec>& points, const std::vector<LatticeVec>& diffs);

/// Exhaustive maximum weight of a difference-free subset (at most 22 points).
Rational brute_max_weight(const std::vector<LatticeVec>& points, const std::vector<Rational>& weights,
                          const std::vector<LatticeVec>& diffs);

/// Sum of prod a_j^{-u_j} over even-parity u with |u|_1 <= depth.
Rational white_partial_sum(const std::vector<std::uint64_t>& a, int depth);

}  // namespace qfree::oracle
