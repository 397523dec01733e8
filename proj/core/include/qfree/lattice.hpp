#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "qfree/arith.hpp"
#include "qfree/smooth.hpp"

namespace qfree {

namespace region {
struct FirstEntries {
    std::size_t t;
};
struct ValueBound {
    BigInt n;
};
struct Explicit {};
}  // namespace region

using RegionDescriptor = std::variant<region::FirstEntries, region::ValueBound, region::Explicit>;

/// Finite set of lattice points in Z_+^s plus how it was produced.
class LatticeConfig {
public:
    /// Validates non-negativity, a common dimension and absence of duplicates.
    LatticeConfig(std::vector<LatticeVec> points, RegionDescriptor region = region::Explicit{});

    /// Exponent vectors of m_1..m_t, in sequence order.
    static LatticeConfig first_entries(const SmoothSequence& seq, std::size_t t);
    /// Exponent vectors of every entry <= n.
    static LatticeConfig value_bound(const SmoothSequence& seq, const BigInt& n);

    const std::vector<LatticeVec>& points() const { return points_; }
    const RegionDescriptor& region() const { return region_; }
    std::size_t size() const { return points_.size(); }
    std::size_t dimension() const { return points_.empty() ? 0 : points_.front().size(); }

private:
    std::vector<LatticeVec> points_;
    RegionDescriptor region_;
};

enum class Color { white, black };

const char* color_name(Color c);

/// White: even coordinate sum. Black: odd.
Color color_of(const LatticeVec& u);

struct ColorCount {
    std::size_t white = 0;
    std::size_t black = 0;
    std::vector<LatticeVec> white_points;
    std::vector<LatticeVec> black_points;

    std::size_t majority() const { return white >= black ? white : black; }
};

ColorCount checkerboard_split(const LatticeConfig& config);

/// True when no two points differ by +-u for any u in diffs.
bool is_difference_free(const std::vector<LatticeVec>& points, const std::vector<LatticeVec>& diffs);

/// Coordinate-wise a - b.
LatticeVec difference(const LatticeVec& a, const LatticeVec& b);

/// max(|A_0(t)|, |A_1(t)|) over the first t entries of M({p, q}). Requires
/// 1 < p < q coprime; this equals the largest {p, q}-quotient-free subset of
/// {m_1, ..., m_t}.
std::size_t f_via_checkerboard(const BigInt& p, const BigInt& q, std::size_t t);

/// Unit vectors e_1..e_s: the diffs of a pairwise coprime integer set over itself.
std::vector<LatticeVec> unit_diffs(std::size_t s);

}  // namespace qfree
