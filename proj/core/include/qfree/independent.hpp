#pragma once

// Exact maximum U-difference-free subsets of a finite lattice configuration.
//
// Two points conflict when their difference is +-u for some u in U. The
// unweighted search is a branch-and-bound over the conflict graph that
// returns the lexicographically least optimal subset (by point index). The
// weighted search uses a min-cut formulation when the conflict graph is
// bipartite and falls back to branch-and-bound otherwise.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qfree/arith.hpp"
#include "qfree/lattice.hpp"

namespace qfree {

struct SearchOptions {
    /// Largest instance accepted by branch-and-bound.
    std::size_t cap = 40;
    /// Largest bipartite instance accepted by the min-cut solver.
    std::size_t flow_cap = 20'000;
    /// Search nodes before giving up with a heuristic answer; 0 = unlimited.
    std::uint64_t node_budget = 0;
};

struct IndependentSetResult {
    std::size_t size = 0;
    std::vector<LatticeVec> witness;
    bool optimal = false;
};

struct WeightedSetResult {
    Rational weight;
    std::vector<LatticeVec> witness;
    bool optimal = false;
    std::string method;  // "min-cut" or "branch-and-bound"
};

/// Adjacency lists of the conflict graph over `points` (indices).
std::vector<std::vector<std::size_t>> conflict_graph(const std::vector<LatticeVec>& points,
                                                     const std::vector<LatticeVec>& diffs);

/// Two-colouring of the conflict graph, or empty when it has an odd cycle.
std::vector<int> bipartition(const std::vector<std::vector<std::size_t>>& graph);

/// Throws CapError when config.size() > options.cap.
IndependentSetResult max_difference_free(const LatticeConfig& config, const std::vector<LatticeVec>& diffs,
                                         const SearchOptions& options = {});

/// Maximum total weight of a difference-free subset; weights must be positive.
WeightedSetResult max_weight_difference_free(const std::vector<LatticeVec>& points,
                                             const std::vector<Rational>& weights,
                                             const std::vector<LatticeVec>& diffs,
                                             const SearchOptions& options = {});

}  // namespace qfree
