#include "qfree/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "qfree/error.hpp"

namespace qfree {

SimplexSpec::SimplexSpec(std::vector<Real> alphas, Real c) : alphas_(std::move(alphas)), c_(std::move(c))
{
    if (alphas_.empty()) {
        throw DomainError("simplex needs at least one coefficient");
    }
    for (const auto& a : alphas_) {
        if (!a.is_positive()) {
            throw DomainError("simplex coefficient " + a.to_string() + " is not positive");
        }
        alpha_bounds_.push_back(LinearForm(a).bounds());
    }
    if (sign(LinearForm(c_)) < 0) {
        throw DomainError("simplex bound " + c_.to_string() + " is negative");
    }
    c_bounds_ = LinearForm(c_).bounds();
    for (std::size_t i = 1; i < alphas_.size(); ++i) {
        if (compare(alphas_[i - 1], alphas_[i]) > 0) {
            sorted_ = false;
        }
    }
}

bool SimplexSpec::integer_mode() const
{
    return c_.is_log_of_integer() &&
           std::all_of(alphas_.begin(), alphas_.end(), [](const Real& a) { return a.is_log_of_integer(); });
}

LinearForm SimplexSpec::value_at(const LatticeVec& x) const
{
    LinearForm f;
    for (std::size_t i = 0; i < alphas_.size(); ++i) {
        f.add(Rational(x[i]), alphas_[i]);
    }
    return f;
}

bool SimplexSpec::contains(const LatticeVec& x) const
{
    if (integer_mode()) {
        BigInt prod(1);
        for (std::size_t i = 0; i < alphas_.size(); ++i) {
            prod *= pow(alphas_[i].argument().get_num(), static_cast<unsigned long>(x[i]));
        }
        return prod <= c_.argument().get_num();
    }
    // Quick certified decision from cached double bounds, exact otherwise.
    double lo = 0, hi = 0;
    for (std::size_t i = 0; i < alphas_.size(); ++i) {
        lo += x[i] * alpha_bounds_[i].first;
        hi += x[i] * alpha_bounds_[i].second;
    }
    // Pad for the rounding of the double sums above.
    const double pad = 1e-9 * (1.0 + std::abs(hi) + std::abs(c_bounds_.second));
    if (hi + pad < c_bounds_.first) {
        return true;
    }
    if (lo - pad > c_bounds_.second) {
        return false;
    }
    LinearForm slack(c_);
    slack.add(value_at(x), Rational(-1));
    return sign(slack) >= 0;
}

namespace {

void collect(const SimplexSpec& spec, LatticeVec& x, std::size_t coord, std::vector<LatticeVec>& out,
             std::size_t max_points)
{
    if (coord == x.size()) {
        out.push_back(x);
        if (out.size() > max_points) {
            throw BudgetError("simplex has more than " + std::to_string(max_points) + " lattice points");
        }
        return;
    }
    // Coordinates after `coord` are zero here, so membership is monotone in x[coord].
    for (x[coord] = 0; spec.contains(x); ++x[coord]) {
        collect(spec, x, coord + 1, out, max_points);
    }
    x[coord] = 0;
}

}  // namespace

LatticeConfig simplex_points(const SimplexSpec& spec, std::size_t max_points)
{
    std::vector<LatticeVec> out;
    LatticeVec x(spec.dimension(), 0);
    collect(spec, x, 0, out, max_points);
    return LatticeConfig(std::move(out));
}

ColorCount simplex_color_counts(const SimplexSpec& spec)
{
    return checkerboard_split(simplex_points(spec));
}

namespace {

// A lattice point queued by its value alpha . x.
struct Queued {
    LatticeVec x;
    BigInt product;                // integer mode
    std::pair<double, double> bounds;  // certified enclosure otherwise
};

class ValueOrder {
public:
    ValueOrder(const std::vector<Real>& alphas, bool integer_mode) : alphas_(alphas), integer_mode_(integer_mode) {}

    Queued make(LatticeVec x) const
    {
        Queued q{std::move(x), BigInt(1), {0.0, 0.0}};
        if (integer_mode_) {
            for (std::size_t i = 0; i < alphas_.size(); ++i) {
                q.product *= pow(alphas_[i].argument().get_num(), static_cast<unsigned long>(q.x[i]));
            }
        } else {
            q.bounds = form(q.x).bounds();
        }
        return q;
    }

    LinearForm form(const LatticeVec& x) const
    {
        LinearForm f;
        for (std::size_t i = 0; i < alphas_.size(); ++i) {
            f.add(Rational(x[i]), alphas_[i]);
        }
        return f;
    }

    int compare(const Queued& a, const Queued& b) const
    {
        if (integer_mode_) {
            return a.product < b.product ? -1 : (b.product < a.product ? 1 : 0);
        }
        if (a.bounds.second < b.bounds.first) {
            return -1;
        }
        if (b.bounds.second < a.bounds.first) {
            return 1;
        }
        return qfree::compare(form(a.x), form(b.x));
    }

private:
    const std::vector<Real>& alphas_;
    bool integer_mode_;
};

// Smallest-denominator rational q with lo <= q < hi.
Rational simplest_between(const LinearForm& lo, const LinearForm& hi)
{
    for (long d = 1; d <= 1'000'000; ++d) {
        auto [lo_min, lo_max] = lo.bounds();
        (void)lo_max;
        BigInt n(static_cast<long>(std::floor(lo_min * static_cast<double>(d))) - 1);
        // Walk up to the least n with n/d >= lo.
        while (true) {
            LinearForm cand(Real::rational(Rational(n, BigInt(d))));
            if (compare(cand, lo) >= 0) {
                break;
            }
            ++n;
        }
        Rational q(n, BigInt(d));
        q.canonicalize();
        if (compare(LinearForm(Real::rational(q)), hi) < 0) {
            return q;
        }
    }
    throw PrecisionError("no rational with denominator <= 10^6 in [" + lo.to_string() + ", " + hi.to_string() + ")");
}

}  // namespace

BlackMajorityResult find_black_majority_c(const std::vector<Real>& alphas, std::size_t budget)
{
    if (alphas.size() < 2) {
        throw DomainError("black-majority search needs at least two coefficients");
    }
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (!alphas[i].is_positive()) {
            throw DomainError("coefficient " + alphas[i].to_string() + " is not positive");
        }
        if (i > 0 && compare(alphas[i - 1], alphas[i]) > 0) {
            throw DomainError("coefficients must be in ascending order");
        }
    }
    const bool integer_mode =
        std::all_of(alphas.begin(), alphas.end(), [](const Real& a) { return a.is_log_of_integer(); });
    const ValueOrder order(alphas, integer_mode);
    auto greater = [&order](const Queued& a, const Queued& b) { return order.compare(a, b) > 0; };
    std::priority_queue<Queued, std::vector<Queued>, decltype(greater)> heap(greater);
    heap.push(order.make(LatticeVec(alphas.size(), 0)));

    // Each point is generated once: from x, only raise coordinates at or after
    // its last nonzero coordinate.
    auto pop = [&]() {
        Queued q = heap.top();
        heap.pop();
        std::size_t last = 0;
        for (std::size_t i = 0; i < q.x.size(); ++i) {
            if (q.x[i] != 0) {
                last = i;
            }
        }
        for (std::size_t i = last; i < q.x.size(); ++i) {
            LatticeVec y = q.x;
            ++y[i];
            heap.push(order.make(std::move(y)));
        }
        return q;
    };

    BlackMajorityResult result;
    std::size_t white = 0, black = 0;
    while (result.points_scanned < budget) {
        Queued head = pop();
        ++result.points_scanned;
        (color_of(head.x) == Color::white ? white : black) += 1;
        while (order.compare(heap.top(), head) == 0) {
            Queued tie = pop();
            ++result.points_scanned;
            (color_of(tie.x) == Color::white ? white : black) += 1;
        }
        if (black > white) {
            BlackMajorityHit hit;
            hit.threshold = order.form(head.x);
            hit.next_threshold = order.form(heap.top().x);
            hit.white = white;
            hit.black = black;
            if (integer_mode) {
                hit.n = head.product;
            } else {
                hit.c = simplest_between(hit.threshold, hit.next_threshold);
            }
            result.hit = std::move(hit);
            return result;
        }
    }
    return result;
}

std::vector<ProfileRow> rational_slope_profile(long alpha1, long alpha2, long c_max)
{
    if (alpha1 <= 0 || alpha2 <= 0) {
        throw DomainError("slopes must be positive integers");
    }
    std::vector<ProfileRow> rows;
    for (long c = 1; c <= c_max; ++c) {
        ProfileRow row;
        row.c = c;
        for (long y = 0; alpha2 * y <= c; ++y) {
            for (long x = 0; alpha1 * x + alpha2 * y <= c; ++x) {
                ((x + y) % 2 == 0 ? row.white : row.black) += 1;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace qfree
