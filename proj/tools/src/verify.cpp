#include "qfree_cli/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qfree/qfree.hpp"
#include "qfree_oracles/oracles.hpp"

namespace qfree::cli {

namespace {

std::string show(const std::vector<LatticeVec>& pts)
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < pts.size(); ++i) {
        os << (i ? "," : "") << '(';
        for (std::size_t j = 0; j < pts[i].size(); ++j) {
            os << (j ? "," : "") << pts[i][j];
        }
        os << ')';
    }
    os << '}';
    return os.str();
}

/// Records one case; keeps the first failure's description.
void tally(PropertyResult& p, bool ok, const std::function<std::string()>& describe)
{
    ++p.total;
    if (ok) {
        ++p.passed;
    } else if (!p.counterexample) {
        p.counterexample = describe();
    }
}

std::size_t pick(Tier tier, std::size_t small, std::size_t standard, std::size_t large)
{
    switch (tier) {
    case Tier::small:
        return small;
    case Tier::large:
        return large;
    default:
        return standard;
    }
}

Rational random_positive(CounterRng& rng, long num_max, long den_max)
{
    Rational q(rng.uniform(1, num_max), rng.uniform(1, den_max));
    q.canonicalize();
    return q;
}

SuiteResult theorem6(std::uint64_t seed, Tier tier)
{
    SuiteResult suite{"theorem6", {}};
    CounterRng rng(seed);
    const auto u = unit_diffs(2);

    PropertyResult rational{"rational-triangles: exact max = max(white, black)", 0, 0, {}, {}};
    const std::size_t cases = pick(tier, 50, 200, 1000);
    std::size_t largest = 0;
    while (rational.total < cases) {
        auto a = random_positive(rng, 9, 4);
        auto b = random_positive(rng, 9, 4);
        auto c = random_positive(rng, 40, 4);
        auto tri = Triangle::rational(a, b, c);
        auto pts = tri.lattice_points();
        if (pts.size() > 30) {
            continue;
        }
        largest = std::max(largest, pts.size());
        LatticeConfig config(pts);
        auto exact = max_difference_free(config, u);
        auto split = checkerboard_split(config);
        tally(rational, exact.optimal && exact.size == split.majority(), [&] {
            return tri.describe() + ": search " + std::to_string(exact.size) + ", colours " +
                   std::to_string(split.white) + "/" + std::to_string(split.black);
        });
    }
    rational.detail = "largest triangle " + std::to_string(largest) + " points";
    suite.properties.push_back(rational);

    PropertyResult integer{"integer-triangles: exact max = f via checkerboard", 0, 0, {}, {}};
    const std::vector<std::pair<long, long>> pairs{{2, 3}, {2, 5}, {3, 4}, {3, 5}, {5, 7}};
    const std::size_t int_cases = pick(tier, 20, 50, 200);
    while (integer.total < int_cases) {
        auto pq = pairs[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(pairs.size()) - 1))];
        auto seq = enumerate_smooth_pair(pq.first, pq.second, 1'000'000);
        auto t = static_cast<std::size_t>(rng.uniform(1, 30));
        auto exact = max_difference_free(LatticeConfig::first_entries(seq, t), u);
        auto f = f_via_checkerboard(pq.first, pq.second, t);
        tally(integer, exact.size == f, [&] {
            return "(p,q,t)=(" + std::to_string(pq.first) + "," + std::to_string(pq.second) + "," +
                   std::to_string(t) + "): search " + std::to_string(exact.size) + ", f " + std::to_string(f);
        });
    }
    suite.properties.push_back(integer);

    PropertyResult guard{"counter-vector {(1,0),(0,2)}: max 2 > majority 1", 0, 0, {}, {}};
    LatticeConfig cv({{1, 0}, {0, 2}});
    auto m = max_difference_free(cv, u).size;
    auto maj = checkerboard_split(cv).majority();
    tally(guard, m == 2 && maj == 1, [&] { return "max " + std::to_string(m) + ", majority " + std::to_string(maj); });
    suite.properties.push_back(guard);
    return suite;
}

SuiteResult lemma2(std::uint64_t, Tier tier)
{
    SuiteResult suite{"lemma2", {}};
    const std::uint64_t x_max = pick(tier, 1000, 10000, 100000);
    for (const auto& raw : std::vector<std::vector<long>>{{2, 3}, {2, 3, 5}, {3, 4, 5}}) {
        std::vector<BigInt> big(raw.begin(), raw.end());
        std::vector<std::uint64_t> small(raw.begin(), raw.end());
        auto b = CoprimeBasis::from_coprime_integers(big);
        Rational ph = phi(b);
        Rational limit(1L << raw.size());
        std::string label = "{";
        for (std::size_t i = 0; i < raw.size(); ++i) {
            label += (i ? "," : "") + std::to_string(raw[i]);
        }
        label += "}";
        PropertyResult p{"|count - phi X| < 2^s for B=" + label, 0, 0, {}, {}};
        PropertyResult s{"inclusion-exclusion = sieve for B=" + label, 0, 0, {}, {}};
        Rational worst(0);
        std::uint64_t sieve = 0;
        for (std::uint64_t x = 1; x <= x_max; ++x) {
            sieve += is_basis_free(x, small) ? 1 : 0;
            BigInt c = count_coprime_part(b, BigInt(static_cast<unsigned long>(x)));
            Rational dev = abs(Rational(c) - ph * static_cast<unsigned long>(x));
            worst = std::max(worst, dev);
            tally(p, dev < limit, [&] { return "X=" + std::to_string(x) + " deviation " + to_string(dev); });
            tally(s, c == sieve, [&] { return "X=" + std::to_string(x) + ": " + c.get_str() + " vs " + std::to_string(sieve); });
        }
        p.detail = "max deviation " + to_string(worst) + " (" + to_decimal(worst, 6) + ")";
        suite.properties.push_back(p);
        suite.properties.push_back(s);
    }
    return suite;
}

SuiteResult corollary(std::uint64_t, Tier tier)
{
    SuiteResult suite{"corollary", {}};
    const std::uint64_t n_max = pick(tier, 30, 60, 80);
    for (auto pq : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 3}, {2, 5}, {3, 4}}) {
        const std::string label = "(" + std::to_string(pq.first) + "," + std::to_string(pq.second) + ")";
        PropertyResult p{"corollary sum = exhaustive maximum for " + label + ", N <= " + std::to_string(n_max), 0, 0, {}, {}};
        PropertyResult w{"witness is quotient-free and maximum for " + label, 0, 0, {}, {}};
        std::vector<Rational> quotients{Rational(pq.first), Rational(pq.second)};
        for (std::uint64_t n = 1; n <= n_max; ++n) {
            auto r = max_subset_count(pq.first, pq.second, n, true);
            auto brute = oracle::brute_max_quotient_free(n, {pq.first, pq.second});
            tally(p, r.count == brute.size, [&] {
                return "N=" + std::to_string(n) + ": corollary " + r.count.get_str() + ", exhaustive " +
                       std::to_string(brute.size);
            });
            bool good = r.witness.size() == brute.size && oracle::is_quotient_free(r.witness, quotients) &&
                        (r.witness.empty() || r.witness.back() <= n);
            tally(w, good, [&] { return "N=" + std::to_string(n); });
        }
        suite.properties.push_back(p);
        suite.properties.push_back(w);
    }
    return suite;
}

SuiteResult gap(std::uint64_t, Tier tier)
{
    SuiteResult suite{"gap", {}};
    const std::size_t budget = pick(tier, 200'000, 1'000'000, 10'000'000);
    for (auto pq : std::vector<std::pair<long, long>>{{2, 3}, {2, 5}, {3, 5}}) {
        const std::string label = "(" + std::to_string(pq.first) + "," + std::to_string(pq.second) + ")";
        PropertyResult p{"certified sigma lower > rho for " + label, 0, 0, {}, {}};
        auto report = strict_gap_check(pq.first, pq.second, budget);
        tally(p, report.gap_proven, [&] { return report.note; });
        p.detail = "rho " + to_string(report.rho) + ", sigma in [" + to_decimal(report.sigma.lower, 10) + ", " +
                   to_decimal(report.sigma.upper, 10) + "]";
        suite.properties.push_back(p);
    }
    return suite;
}

SuiteResult monochromatize_suite(std::uint64_t seed, Tier tier)
{
    SuiteResult suite{"monochromatize", {}};
    CounterRng rng(seed);
    const auto u = unit_diffs(2);
    const std::vector<std::pair<long, long>> pairs{{2, 3}, {2, 5}, {3, 4}};
    PropertyResult p{"sweep output: same size, inside, difference-free, monochromatic", 0, 0, {}, {}};
    const std::size_t cases = pick(tier, 30, 100, 500);
    std::size_t mixed_inputs = 0;
    for (std::size_t i = 0; i < cases; ++i) {
        auto pq = pairs[static_cast<std::size_t>(rng.uniform(0, 2))];
        long n = rng.uniform(1, 200);
        auto tri = Triangle::integer(pq.first, pq.second, n);
        auto pts = tri.lattice_points();
        // A random optimum: the lexicographically least one under a shuffled order.
        for (std::size_t k = pts.size(); k > 1; --k) {
            std::swap(pts[k - 1], pts[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(k) - 1))]);
        }
        auto opt = max_difference_free(LatticeConfig(pts), u);
        std::set<Color> colours;
        for (const auto& x : opt.witness) {
            colours.insert(color_of(x));
        }
        mixed_inputs += colours.size() > 1 ? 1 : 0;
        bool ok = true;
        std::string why;
        try {
            auto r = monochromatize(tri, opt.witness);
            ok = r.points.size() == opt.size && is_difference_free(r.points, u);
            for (const auto& x : r.points) {
                ok = ok && tri.contains(x[0], x[1]) && color_of(x) == r.color;
            }
            why = "output " + show(r.points);
        } catch (const std::exception& e) {
            ok = false;
            why = e.what();
        }
        tally(p, ok, [&] { return tri.describe() + " input " + show(opt.witness) + ": " + why; });
    }
    p.detail = std::to_string(mixed_inputs) + " of " + std::to_string(cases) + " inputs had both colours";
    suite.properties.push_back(p);
    return suite;
}

SuiteResult geometry(std::uint64_t seed, Tier tier)
{
    SuiteResult suite{"geometry", {}};
    CounterRng rng(seed);

    PropertyResult prof{"alpha=(1,2): white - black = 1 iff 4 | c, else 0 (c <= 100)", 0, 0, {}, {}};
    for (const auto& row : rational_slope_profile(1, 2, 100)) {
        tally(prof, row.diff() == (row.c % 4 == 0 ? 1 : 0),
              [&] { return "c=" + std::to_string(row.c) + " diff " + std::to_string(row.diff()); });
    }
    suite.properties.push_back(prof);

    PropertyResult agree{"integer-log simplex = smooth enumeration", 0, 0, {}, {}};
    const std::vector<std::pair<long, long>> pairs{{2, 3}, {2, 5}, {3, 4}, {3, 5}, {5, 7}, {2, 9}};
    const std::size_t cases = pick(tier, 20, 50, 200);
    for (std::size_t i = 0; i < cases; ++i) {
        auto pq = pairs[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(pairs.size()) - 1))];
        long n = rng.uniform(1, 10000);
        SimplexSpec s({Real::log(pq.first), Real::log(pq.second)}, Real::log(n));
        auto pts = simplex_points(s).points();
        std::set<LatticeVec> a(pts.begin(), pts.end());
        std::set<LatticeVec> b;
        for (const auto& e : enumerate_smooth_pair(pq.first, pq.second, n).entries) {
            b.insert(e.exponents);
        }
        tally(agree, a == b, [&] {
            return "(p,q,n)=(" + std::to_string(pq.first) + "," + std::to_string(pq.second) + "," + std::to_string(n) + ")";
        });
    }
    suite.properties.push_back(agree);

    PropertyResult perm{"colour counts invariant under coordinate permutation", 0, 0, {}, {}};
    for (std::size_t i = 0; i < pick(tier, 10, 30, 100); ++i) {
        std::vector<Real> alphas{Real::rational(random_positive(rng, 6, 3)), Real::sqrt(random_positive(rng, 12, 2)),
                                 Real::log(Rational(rng.uniform(2, 30)))};
        Real c = Real::rational(random_positive(rng, 30, 2));
        auto base = simplex_color_counts(SimplexSpec(alphas, c));
        std::vector<Real> rotated{alphas[2], alphas[0], alphas[1]};
        auto other = simplex_color_counts(SimplexSpec(rotated, c));
        tally(perm, base.white == other.white && base.black == other.black, [&] {
            return "c=" + c.to_string() + ": " + std::to_string(base.white) + "/" + std::to_string(base.black) +
                   " vs " + std::to_string(other.white) + "/" + std::to_string(other.black);
        });
    }
    suite.properties.push_back(perm);

    PropertyResult bm{"black-majority search: examples and recount", 0, 0, {}, {}};
    auto check_hit = [&](const std::vector<Real>& alphas, const std::function<bool(const BlackMajorityHit&)>& expect,
                         const std::string& label) {
        auto r = find_black_majority_c(alphas);
        bool ok = r.hit && expect(*r.hit);
        if (ok) {
            Real c = r.hit->n ? Real::log(Rational(*r.hit->n)) : Real::rational(*r.hit->c);
            auto counts = simplex_color_counts(SimplexSpec(alphas, c));
            ok = counts.black > counts.white && counts.black == r.hit->black && counts.white == r.hit->white;
        }
        tally(bm, ok, [&] { return label; });
    };
    check_hit({Real::log(2), Real::log(3)}, [](const BlackMajorityHit& h) { return h.n == BigInt(3); }, "(ln 2, ln 3)");
    check_hit({Real::rational(1), Real::sqrt(2)},
              [](const BlackMajorityHit& h) { return h.c == Rational(3, 2); }, "(1, sqrt 2)");
    check_hit({Real::rational(1), Real::sqrt(3)}, [](const BlackMajorityHit&) { return true; }, "(1, sqrt 3)");
    check_hit({Real::log(3), Real::log(5)}, [](const BlackMajorityHit&) { return true; }, "(ln 3, ln 5)");
    auto none = find_black_majority_c({Real::rational(1), Real::rational(2)});
    tally(bm, !none.hit, [] { return "(1, 2) produced a hit"; });
    suite.properties.push_back(bm);
    return suite;
}

}  // namespace

std::optional<Tier> parse_tier(const std::string& text)
{
    if (text == "small") {
        return Tier::small;
    }
    if (text == "standard" || text == "default") {
        return Tier::standard;
    }
    if (text == "large") {
        return Tier::large;
    }
    return std::nullopt;
}

const char* tier_name(Tier tier)
{
    switch (tier) {
    case Tier::small:
        return "small";
    case Tier::large:
        return "large";
    default:
        return "standard";
    }
}

bool SuiteResult::ok() const
{
    return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.ok(); });
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"theorem6", "lemma2", "corollary", "gap", "monochromatize", "geometry"};
    return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, Tier tier)
{
    static const std::map<std::string, std::function<SuiteResult(std::uint64_t, Tier)>> suites{
        {"theorem6", theorem6}, {"lemma2", lemma2},
        {"corollary", corollary}, {"gap", gap},
        {"monochromatize", monochromatize_suite}, {"geometry", geometry},
    };
    auto it = suites.find(name);
    if (it == suites.end()) {
        throw std::invalid_argument("unknown suite: " + name);
    }
    return it->second(seed, tier);
}

}  // namespace qfree::cli
