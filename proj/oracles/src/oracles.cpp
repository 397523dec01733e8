#include "qfree_oracles/oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qfree::oracle {

std::vector<std::pair<std::uint64_t, LatticeVec>> naive_smooth(const std::vector<std::uint64_t>& basis,
                                                               std::uint64_t bound)
{
    std::vector<std::pair<std::uint64_t, LatticeVec>> out;
    // Exponent caps from the bound alone.
    std::vector<int> cap;
    for (auto b : basis) {
        int e = 0;
        for (unsigned __int128 v = b; v <= bound; v *= b) {
            ++e;
        }
        cap.push_back(e);
    }
    LatticeVec x(basis.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == basis.size()) {
            unsigned __int128 v = 1;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                for (int k = 0; k < x[i]; ++k) {
                    v *= basis[i];
                }
            }
            if (v <= bound) {
                out.emplace_back(static_cast<std::uint64_t>(v), x);
            }
            return;
        }
        for (x[j] = 0; x[j] <= cap[j]; ++x[j]) {
            rec(j + 1);
        }
        x[j] = 0;
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t sieve_coprime_count(const std::vector<std::uint64_t>& basis, std::uint64_t x)
{
    std::uint64_t count = 0;
    for (std::uint64_t n = 1; n <= x; ++n) {
        bool free = true;
        for (auto b : basis) {
            if (n % b == 0) {
                free = false;
            }
        }
        count += free ? 1 : 0;
    }
    return count;
}

BruteSubset brute_max_quotient_free(std::uint64_t n, const std::vector<std::uint64_t>& quotients)
{
    std::vector<std::uint64_t> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::uint64_t(std::uint64_t)> find = [&](std::uint64_t v) {
        return parent[v] == v ? v : parent[v] = find(parent[v]);
    };
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
    for (std::uint64_t k = 1; k <= n; ++k) {
        for (auto a : quotients) {
            if (k * a <= n) {
                edges.emplace_back(k, k * a);
                parent[find(k)] = find(k * a);
            }
        }
    }
    std::vector<std::vector<std::uint64_t>> components(n + 1);
    for (std::uint64_t k = 1; k <= n; ++k) {
        components[find(k)].push_back(k);
    }
    BruteSubset out;
    for (const auto& comp : components) {
        if (comp.empty()) {
            continue;
        }
        if (comp.size() > 26) {
            throw std::runtime_error("component too large for exhaustive search");
        }
        std::vector<std::uint32_t> conflict(comp.size(), 0);
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (std::size_t j = 0; j < comp.size(); ++j) {
                for (auto a : quotients) {
                    if (comp[i] * a == comp[j]) {
                        conflict[i] |= 1u << j;
                        conflict[j] |= 1u << i;
                    }
                }
            }
        }
        std::uint32_t best_mask = 0;
        int best = -1;
        for (std::uint32_t mask = 0; mask < (1u << comp.size()); ++mask) {
            bool ok = true;
            for (std::size_t i = 0; i < comp.size() && ok; ++i) {
                if ((mask >> i & 1u) && (conflict[i] & mask)) {
                    ok = false;
                }
            }
            if (ok && std::popcount(mask) > best) {
                best = std::popcount(mask);
                best_mask = mask;
            }
        }
        out.size += static_cast<std::size_t>(best);
        for (std::size_t i = 0; i < comp.size(); ++i) {
            if (best_mask >> i & 1u) {
                out.witness.push_back(comp[i]);
            }
        }
    }
    std::sort(out.witness.begin(), out.witness.end());
    return out;
}

bool is_quotient_free(const std::vector<std::uint64_t>& set, const std::vector<Rational>& quotients)
{
    std::set<std::uint64_t> members(set.begin(), set.end());
    for (auto k : set) {
        for (const auto& q : quotients) {
            // k * q in the set?
            BigInt num = BigInt(static_cast<unsigned long>(k)) * q.get_num();
            if (num % q.get_den() != 0) {
                continue;
            }
            BigInt other = num / q.get_den();
            if (other.fits_ulong_p() && members.count(other.get_ui()) != 0) {
                return false;
            }
        }
    }
    return true;
}

namespace {

std::vector<std::uint32_t> conflict_masks(const std::vector<LatticeVec>& points, const std::vector<LatticeVec>& diffs)
{
    std::vector<std::uint32_t> conflict(points.size(), 0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < points.size(); ++j) {
            for (const auto& u : diffs) {
                bool match = true;
                for (std::size_t k = 0; k < u.size(); ++k) {
                    if (points[j][k] - points[i][k] != u[k]) {
                        match = false;
                    }
                }
                if (match) {
                    conflict[i] |= 1u << j;
                    conflict[j] |= 1u << i;
                }
            }
        }
    }
    return conflict;
}

bool independent(std::uint32_t mask, const std::vector<std::uint32_t>& conflict)
{
    for (std::size_t i = 0; i < conflict.size(); ++i) {
        if ((mask >> i & 1u) && (conflict[i] & mask)) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::size_t brute_max_difference_free(const std::vector<LatticeVec>& points, const std::vector<LatticeVec>& diffs)
{
    if (points.size() > 24) {
        throw std::runtime_error("too many points for exhaustive search");
    }
    auto conflict = conflict_masks(points, diffs);
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << points.size()); ++mask) {
        if (std::popcount(mask) > best && independent(mask, conflict)) {
            best = std::popcount(mask);
        }
    }
    return static_cast<std::size_t>(best);
}

Rational brute_max_weight(const std::vector<LatticeVec>& points, const std::vector<Rational>& weights,
                          const std::vector<LatticeVec>& diffs)
{
    if (points.size() > 22) {
        throw std::runtime_error("too many points for exhaustive search");
    }
    auto conflict = conflict_masks(points, diffs);
    Rational best(0);
    for (std::uint32_t mask = 0; mask < (1u << points.size()); ++mask) {
        if (!independent(mask, conflict)) {
            continue;
        }
        Rational w(0);
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (mask >> i & 1u) {
                w += weights[i];
            }
        }
        if (w > best) {
            best = w;
        }
    }
    return best;
}

Rational white_partial_sum(const std::vector<std::uint64_t>& a, int depth)
{
    Rational sum(0);
    LatticeVec u(a.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t j, int left) {
        if (j == a.size()) {
            int total = std::accumulate(u.begin(), u.end(), 0);
            if (total % 2 != 0) {
                return;
            }
            BigInt den(1);
            for (std::size_t i = 0; i < a.size(); ++i) {
                for (int k = 0; k < u[i]; ++k) {
                    den *= static_cast<unsigned long>(a[i]);
                }
            }
            sum += Rational(BigInt(1), den);
            return;
        }
        for (u[j] = 0; u[j] <= left; ++u[j]) {
            rec(j + 1, left - u[j]);
        }
        u[j] = 0;
    };
    rec(0, depth);
    sum.canonicalize();
    return sum;
}

}  // namespace qfree::oracle
