#include "qfree/lattice.hpp"

#include <numeric>
#include <set>

#include "qfree/error.hpp"

namespace qfree {

LatticeConfig::LatticeConfig(std::vector<LatticeVec> points, RegionDescriptor region)
    : points_(std::move(points)), region_(std::move(region))
{
    std::set<LatticeVec> seen;
    for (const auto& p : points_) {
        if (p.size() != points_.front().size()) {
            throw DomainError("lattice points of mixed dimension");
        }
        for (int v : p) {
            if (v < 0) {
                throw DomainError("lattice point with a negative coordinate");
            }
        }
        if (!seen.insert(p).second) {
            throw DomainError("duplicate lattice point");
        }
    }
}

LatticeConfig LatticeConfig::first_entries(const SmoothSequence& seq, std::size_t t)
{
    if (t > seq.size()) {
        throw InsufficientEnumeration("requested " + std::to_string(t) + " smooth entries, only " +
                                      std::to_string(seq.size()) + " enumerated");
    }
    std::vector<LatticeVec> pts;
    pts.reserve(t);
    for (std::size_t i = 0; i < t; ++i) {
        pts.push_back(seq.entries[i].exponents);
    }
    return LatticeConfig(std::move(pts), region::FirstEntries{t});
}

LatticeConfig LatticeConfig::value_bound(const SmoothSequence& seq, const BigInt& n)
{
    if (seq.bound < n) {
        throw InsufficientEnumeration("smooth sequence does not reach " + n.get_str());
    }
    auto t = count_at_most(seq, n);
    auto config = first_entries(seq, t);
    return LatticeConfig(config.points(), region::ValueBound{n});
}

const char* color_name(Color c)
{
    return c == Color::white ? "white" : "black";
}

Color color_of(const LatticeVec& u)
{
    long sum = std::accumulate(u.begin(), u.end(), 0L);
    return (sum % 2 == 0) ? Color::white : Color::black;
}

ColorCount checkerboard_split(const LatticeConfig& config)
{
    ColorCount out;
    for (const auto& p : config.points()) {
        if (color_of(p) == Color::white) {
            out.white_points.push_back(p);
        } else {
            out.black_points.push_back(p);
        }
    }
    out.white = out.white_points.size();
    out.black = out.black_points.size();
    return out;
}

LatticeVec difference(const LatticeVec& a, const LatticeVec& b)
{
    LatticeVec d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        d[i] = a[i] - b[i];
    }
    return d;
}

bool is_difference_free(const std::vector<LatticeVec>& points, const std::vector<LatticeVec>& diffs)
{
    std::set<LatticeVec> forbidden;
    for (const auto& u : diffs) {
        forbidden.insert(u);
        LatticeVec neg(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) {
            neg[i] = -u[i];
        }
        forbidden.insert(std::move(neg));
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (forbidden.count(difference(points[i], points[j])) != 0) {
                return false;
            }
        }
    }
    return true;
}

std::vector<LatticeVec> unit_diffs(std::size_t s)
{
    std::vector<LatticeVec> out;
    for (std::size_t i = 0; i < s; ++i) {
        LatticeVec u(s, 0);
        u[i] = 1;
        out.push_back(std::move(u));
    }
    return out;
}

std::size_t f_via_checkerboard(const BigInt& p, const BigInt& q, std::size_t t)
{
    if (!(p > 1 && p < q) || gcd(p, q) != 1) {
        throw DomainError("need coprime integers 1 < p < q");
    }
    if (t == 0) {
        return 0;
    }
    BigInt bound = q;
    SmoothSequence seq = enumerate_smooth_pair(p, q, bound);
    while (seq.size() < t) {
        bound *= 2;
        seq = enumerate_smooth_pair(p, q, bound);
    }
    return checkerboard_split(LatticeConfig::first_entries(seq, t)).majority();
}

}  // namespace qfree
