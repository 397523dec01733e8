#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qfree/arith.hpp"
#include "qfree/basis.hpp"
#include "qfree/independent.hpp"

namespace qfree {

/// Enclosure of the supremum of sum_{u in E} prod b_j^{-u_j} over
/// difference-free E in Z_+^s.
struct GammaBracket {
    Rational lower;
    Rational upper;
    int depth = 0;
    /// Optimal set on the truncated region {|u|_1 <= depth}; its weight is `lower`.
    std::vector<LatticeVec> witness;
    std::string method;
};

/// All u in Z_+^s with u_1 + ... + u_s <= depth, graded by total degree.
std::vector<LatticeVec> simplex_region(std::size_t s, int depth);

/// Number of points of simplex_region(s, depth), C(depth + s, s).
BigInt simplex_region_size(std::size_t s, int depth);

/// prod 1/(1 - 1/b_j): the weight of all of Z_+^s.
Rational total_weight(const CoprimeBasis& b);

/// lower = exact optimum on the truncated region, upper = lower + tail mass
/// beyond it. Throws CapError (carrying the largest feasible depth) when the
/// region is too large for the applicable solver.
GammaBracket gamma_bracket(const CoprimeBasis& b, int depth, const SearchOptions& options = {});

/// Weight of the even-parity points for pairwise coprime integers a:
/// (1/2)(prod a/(a-1) + prod a/(a+1)).
Rational white_weight_value(const std::vector<BigInt>& a);

/// Checks 1 < a_1 < ... < a_r pairwise coprime; throws DomainError otherwise.
void require_coprime_increasing(const std::vector<BigInt>& a);

}  // namespace qfree
