#include "qfree/gamma.hpp"

#include "qfree/error.hpp"

namespace qfree {

namespace {

void compositions(std::size_t pos, int remaining, LatticeVec& u, std::vector<LatticeVec>& out)
{
    if (pos + 1 == u.size()) {
        u[pos] = remaining;
        out.push_back(u);
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        u[pos] = v;
        compositions(pos + 1, remaining - v, u, out);
    }
}

}  // namespace

std::vector<LatticeVec> simplex_region(std::size_t s, int depth)
{
    std::vector<LatticeVec> out;
    if (depth < 0 || s == 0) {
        return out;
    }
    LatticeVec u(s, 0);
    for (int d = 0; d <= depth; ++d) {
        compositions(0, d, u, out);
    }
    return out;
}

BigInt simplex_region_size(std::size_t s, int depth)
{
    if (depth < 0) {
        return BigInt(0);
    }
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(depth) + s, s);
    return r;
}

Rational total_weight(const CoprimeBasis& b)
{
    Rational r(1);
    for (const auto& bj : b.basis()) {
        r *= Rational(bj, bj - 1);
    }
    r.canonicalize();
    return r;
}

GammaBracket gamma_bracket(const CoprimeBasis& b, int depth, const SearchOptions& options)
{
    if (depth < 0) {
        throw DomainError("truncation depth must be non-negative");
    }
    const auto s = b.dimension();
    auto size = simplex_region_size(s, depth);

    auto region = [&] {
        if (size > BigInt(options.flow_cap)) {
            return std::vector<LatticeVec>{};
        }
        return simplex_region(s, depth);
    }();
    if (region.empty()) {
        long feasible = -1;
        while (simplex_region_size(s, static_cast<int>(feasible + 1)) <= BigInt(options.flow_cap)) {
            ++feasible;
        }
        throw CapError("truncated region at depth " + std::to_string(depth) + " has " + size.get_str() +
                           " points; largest feasible depth is " + std::to_string(feasible),
                       size.fits_ulong_p() ? size.get_ui() : static_cast<std::size_t>(-1), options.flow_cap,
                       feasible);
    }

    std::vector<Rational> weights;
    weights.reserve(region.size());
    Rational region_mass(0);
    for (const auto& u : region) {
        weights.push_back(b.weight_of(u));
        region_mass += weights.back();
    }

    WeightedSetResult best;
    try {
        best = max_weight_difference_free(region, weights, b.diffs(), options);
    } catch (const CapError& e) {
        // Non-bipartite conflict graph: the branch-and-bound cap applies.
        long feasible = -1;
        while (simplex_region_size(s, static_cast<int>(feasible + 1)) <= BigInt(options.cap)) {
            ++feasible;
        }
        throw CapError(std::string(e.what()) + "; largest feasible depth is " + std::to_string(feasible), e.points(),
                       e.cap(), feasible);
    }
    if (!best.optimal) {
        throw BudgetError("gamma search stopped at its node budget before proving optimality");
    }

    GammaBracket out;
    out.depth = depth;
    out.lower = best.weight;
    out.upper = best.weight + (total_weight(b) - region_mass);
    out.witness = std::move(best.witness);
    out.method = best.method;
    return out;
}

void require_coprime_increasing(const std::vector<BigInt>& a)
{
    if (a.empty()) {
        throw DomainError("empty quotient set");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] <= 1) {
            throw DomainError("element " + a[i].get_str() + " is not greater than 1");
        }
        if (i > 0 && a[i - 1] >= a[i]) {
            throw DomainError("elements are not strictly increasing");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (gcd(a[i], a[j]) != 1) {
                throw DomainError("elements not pairwise coprime: " + a[j].get_str() + " and " + a[i].get_str());
            }
        }
    }
}

Rational white_weight_value(const std::vector<BigInt>& a)
{
    require_coprime_increasing(a);
    Rational all(1), alternating(1);
    for (const auto& aj : a) {
        all *= Rational(aj, aj - 1);
        alternating *= Rational(aj, aj + 1);
    }
    Rational r = (all + alternating) / 2;
    r.canonicalize();
    return r;
}

}  // namespace qfree
