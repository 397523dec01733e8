#include "qfree/monochromatize.hpp"

#include <algorithm>
#include <set>

#include "qfree/error.hpp"

namespace qfree {

Triangle Triangle::rational(Rational a, Rational b, Rational c)
{
    if (a <= 0 || b <= 0 || c <= 0) {
        throw DomainError("triangle coefficients must be positive");
    }
    return Triangle(RationalMode{std::move(a), std::move(b), std::move(c)});
}

Triangle Triangle::integer(BigInt p, BigInt q, BigInt n)
{
    if (p <= 1 || q <= 1 || n < 1) {
        throw DomainError("integer-mode triangle needs p, q > 1 and n >= 1");
    }
    return Triangle(IntegerMode{std::move(p), std::move(q), std::move(n)});
}

bool Triangle::contains(long x, long y) const
{
    if (x < 0 || y < 0) {
        return false;
    }
    if (const auto* r = std::get_if<RationalMode>(&mode_)) {
        return r->a * x + r->b * y <= r->c;
    }
    const auto& m = std::get<IntegerMode>(mode_);
    return pow(m.p, static_cast<unsigned long>(x)) * pow(m.q, static_cast<unsigned long>(y)) <= m.n;
}

std::vector<LatticeVec> Triangle::lattice_points() const
{
    std::vector<LatticeVec> out;
    for (int x = 0; contains(x, 0); ++x) {
        for (int y = 0; contains(x, y); ++y) {
            out.push_back({x, y});
        }
    }
    return out;
}

std::string Triangle::describe() const
{
    if (const auto* r = std::get_if<RationalMode>(&mode_)) {
        return "(" + to_string(r->a) + ")x + (" + to_string(r->b) + ")y <= " + to_string(r->c);
    }
    const auto& m = std::get<IntegerMode>(mode_);
    return m.p.get_str() + "^x * " + m.q.get_str() + "^y <= " + m.n.get_str();
}

namespace {

using Cell = std::pair<long, long>;

Color parity_color(long k)
{
    return k % 2 == 0 ? Color::white : Color::black;
}

void check_input(const Triangle& triangle, const std::vector<LatticeVec>& points,
                 const MonochromatizeOptions& options)
{
    for (const auto& p : points) {
        if (p.size() != 2) {
            throw DomainError("monochromatize works on planar points");
        }
        if (!triangle.contains(p[0], p[1])) {
            throw DomainError("point (" + std::to_string(p[0]) + "," + std::to_string(p[1]) +
                              ") lies outside the triangle");
        }
    }
    // Also rejects duplicates.
    LatticeConfig config(points);
    if (!is_difference_free(points, unit_diffs(2))) {
        throw DomainError("input set has horizontally or vertically adjacent points");
    }
    if (!options.require_maximum) {
        return;
    }
    LatticeConfig full(triangle.lattice_points());
    if (full.size() > options.search.cap) {
        return;  // trusted
    }
    auto best = max_difference_free(full, unit_diffs(2), options.search);
    if (best.optimal && best.size > points.size()) {
        throw DomainError("input set has " + std::to_string(points.size()) + " points but the maximum is " +
                          std::to_string(best.size));
    }
}

}  // namespace

MonochromatizeResult monochromatize(const Triangle& triangle, const std::vector<LatticeVec>& points,
                                    const MonochromatizeOptions& options)
{
    check_input(triangle, points, options);

    MonochromatizeResult out;
    if (points.empty()) {
        return out;
    }
    std::set<Cell> s;
    long top = 0;
    for (const auto& p : points) {
        s.insert({p[0], p[1]});
    }
    for (const auto& p : triangle.lattice_points()) {
        top = std::max<long>(top, p[0] + p[1]);
    }

    auto on_diagonal = [&s](long k) {
        std::vector<Cell> cells;
        for (const auto& c : s) {
            if (c.first + c.second == k) {
                cells.push_back(c);
            }
        }
        return cells;
    };

    long first = top + 1;
    for (const auto& c : s) {
        first = std::min(first, c.first + c.second);
    }
    Color area = parity_color(first);

    for (long k = first + 1; k <= top; ++k) {
        auto diag = on_diagonal(k);
        if (diag.empty() || parity_color(k) == area) {
            continue;
        }
        long vacant = -1;
        for (long x = 0; x <= k; ++x) {
            if (s.count({x, k - x}) == 0) {
                vacant = x;
                break;
            }
        }
        if (vacant >= 0) {
            std::vector<Cell> moved;
            for (const auto& c : diag) {
                moved.push_back(c.first < vacant ? Cell{c.first, c.second - 1} : Cell{c.first - 1, c.second});
            }
            for (const auto& c : diag) {
                s.erase(c);
            }
            for (const auto& c : moved) {
                if (!triangle.contains(c.first, c.second) || !s.insert(c).second) {
                    throw SweepError("sweep invariant violated on diagonal " + std::to_string(k) +
                                         ": shifted point is outside the triangle or occupied",
                                     k);
                }
            }
            int which = triangle.contains(vacant, k - vacant) ? 2 : 1;
            out.steps.push_back({static_cast<int>(k), which, diag.size()});
        } else {
            if (!on_diagonal(k - 1).empty()) {
                throw SweepError("sweep invariant violated on diagonal " + std::to_string(k) +
                                     ": full diagonal with an occupied diagonal below it",
                                 k);
            }
            std::vector<Cell> below;
            for (const auto& c : s) {
                if (c.first + c.second < k) {
                    below.push_back(c);
                }
            }
            for (const auto& c : below) {
                s.erase(c);
            }
            for (const auto& c : below) {
                Cell up{c.first, c.second + 1};
                if (!triangle.contains(up.first, up.second) || !s.insert(up).second) {
                    throw SweepError("sweep invariant violated on diagonal " + std::to_string(k) +
                                         ": raised point is outside the triangle or occupied",
                                     k);
                }
            }
            area = parity_color(k);
            out.steps.push_back({static_cast<int>(k), 3, below.size()});
        }
    }

    for (const auto& c : s) {
        out.points.push_back({static_cast<int>(c.first), static_cast<int>(c.second)});
    }
    out.color = area;
    bool mono = std::all_of(out.points.begin(), out.points.end(),
                            [&](const LatticeVec& p) { return color_of(p) == area; });
    if (out.points.size() != points.size() || !mono || !is_difference_free(out.points, unit_diffs(2))) {
        throw SweepError("sweep finished without a monochromatic difference-free set", top);
    }
    return out;
}

}  // namespace qfree
