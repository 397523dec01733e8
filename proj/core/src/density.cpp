#include "qfree/density.hpp"

#include <algorithm>
#include <set>

#include <mpfr.h>

#include "qfree/error.hpp"
#include "qfree/lattice.hpp"

namespace qfree {

Rational rho_closed_form(const std::vector<BigInt>& a)
{
    require_coprime_increasing(a);
    Rational prod(1);
    for (const auto& ai : a) {
        prod *= Rational(ai - 1, ai + 1);
    }
    Rational r = (1 + prod) / 2;
    r.canonicalize();
    return r;
}

DensityBracket rho_general(const RationalSet& a, int depth, const SearchOptions& options)
{
    auto basis = derive_basis(a);
    auto g = gamma_bracket(basis, depth, options);
    auto f = phi(basis);
    DensityBracket out;
    out.lower = f * g.lower;
    out.upper = f * g.upper;
    out.method = "truncated-gamma";
    std::string primes;
    for (const auto& b : basis.basis()) {
        primes += (primes.empty() ? "" : ",") + b.get_str();
    }
    out.detail = {{"basis", primes},
                  {"depth", std::to_string(depth)},
                  {"phi", to_string(f)},
                  {"gamma_lower", to_string(g.lower)},
                  {"gamma_upper", to_string(g.upper)},
                  {"solver", g.method}};
    return out;
}

std::vector<std::size_t> majority_counts(const SmoothSequence& seq)
{
    std::vector<std::size_t> f(seq.size() + 1, 0);
    std::size_t white = 0, black = 0;
    for (std::size_t t = 1; t <= seq.size(); ++t) {
        if (color_of(seq.at(t).exponents) == Color::white) {
            ++white;
        } else {
            ++black;
        }
        f[t] = std::max(white, black);
    }
    return f;
}

Rational sigma_partial_sum(const SmoothSequence& seq, std::size_t terms)
{
    if (seq.size() <= terms) {
        throw InsufficientEnumeration("partial sum through t=" + std::to_string(terms) + " needs m_" +
                                      std::to_string(terms + 1));
    }
    auto f = majority_counts(seq);
    Rational sum(0);
    for (std::size_t t = 1; t <= terms; ++t) {
        sum += Rational(f[t]) * (Rational(1, seq.at(t).value) - Rational(1, seq.at(t + 1).value));
    }
    sum.canonicalize();
    return sum;
}

namespace {

struct SigmaState {
    bool done = false;
    SigmaResult result;
};

// Walks T = 1, 2, ... over one enumeration and stops at the first T whose
// bracket width is within tolerance; otherwise reports the last T.
SigmaState sigma_over(const SmoothSequence& seq, const Rational& phi_b, const Rational& total,
                      const Rational& tolerance)
{
    auto f = majority_counts(seq);
    SigmaState state;
    Rational partial(0);
    Rational prefix_recip(1);  // sum_{t <= T+1} 1/m_t, starting with T = 0
    for (std::size_t t = 1; t + 1 <= seq.size(); ++t) {
        Rational next_recip(1, seq.at(t + 1).value);
        partial += Rational(f[t]) * (Rational(1, seq.at(t).value) - next_recip);
        prefix_recip += next_recip;
        // sum_{t' > t} t' (1/m_t' - 1/m_{t'+1}) = (t+1)/m_{t+1} + sum_{t' >= t+2} 1/m_t'
        Rational tail = Rational(t + 1) * next_recip + (total - prefix_recip);
        Rational width = phi_b * tail / 2;
        state.result.terms = t;
        state.result.partial_sum = partial;
        state.result.tail_upper = tail;
        if (width <= tolerance) {
            state.done = true;
            break;
        }
    }
    auto& r = state.result;
    r.partial_sum.canonicalize();
    r.tail_upper.canonicalize();
    r.bracket.lower = phi_b * (r.partial_sum + r.tail_upper / 2);
    r.bracket.upper = phi_b * (r.partial_sum + r.tail_upper);
    r.bracket.lower.canonicalize();
    r.bracket.upper.canonicalize();
    r.bracket.method = "series-with-tail";
    r.bracket.detail = {{"terms", std::to_string(r.terms)},
                        {"m_T", r.terms >= 1 ? seq.at(r.terms).value.get_str() : "1"},
                        {"partial_sum", to_string(r.partial_sum)},
                        {"tail_upper", to_string(r.tail_upper)},
                        {"tolerance", to_string(tolerance)}};
    return state;
}

}  // namespace

SigmaResult sigma_series(const BigInt& p, const BigInt& q, const Rational& tolerance, std::size_t max_entries)
{
    if (tolerance <= 0) {
        throw DomainError("tolerance must be positive");
    }
    auto basis = CoprimeBasis::from_coprime_integers({p, q});
    if (!(p < q)) {
        throw DomainError("need p < q");
    }
    const Rational phi_b = phi(basis);
    const Rational total = total_weight(basis);
    BigInt bound(1024);
    std::optional<SigmaResult> last;
    while (true) {
        SmoothSequence seq;
        try {
            seq = enumerate_smooth(basis, bound, max_entries);
        } catch (const BudgetError&) {
            std::string achieved = last ? " (achieved [" + to_decimal(last->bracket.lower, 15) + ", " +
                                              to_decimal(last->bracket.upper, 15) + "])"
                                        : "";
            throw BudgetError("sigma series needs more than " + std::to_string(max_entries) +
                              " smooth numbers for tolerance " + to_string(tolerance) + achieved);
        }
        if (seq.size() >= 2) {
            auto state = sigma_over(seq, phi_b, total, tolerance);
            if (state.done) {
                return state.result;
            }
            last = state.result;
        }
        bound *= 16;
    }
}

SubsetCount max_subset_count(const BigInt& p, const BigInt& q, std::uint64_t n, bool with_witness)
{
    if (n < 1) {
        throw DomainError("N must be >= 1");
    }
    auto seq = enumerate_smooth_pair(p, q, BigInt(static_cast<unsigned long>(n)));
    auto f = majority_counts(seq);
    std::vector<std::uint64_t> values;
    std::vector<bool> white_majority(seq.size() + 1, true);
    std::size_t white = 0, black = 0;
    for (std::size_t t = 1; t <= seq.size(); ++t) {
        values.push_back(seq.at(t).value.get_ui());
        (color_of(seq.at(t).exponents) == Color::white ? white : black) += 1;
        white_majority[t] = white >= black;
    }
    const std::vector<std::uint64_t> basis{p.get_ui(), q.get_ui()};

    SubsetCount out;
    out.count = 0;
    std::uint64_t sum = 0;
    std::size_t t = values.size();
    for (std::uint64_t k = 1; k <= n; ++k) {
        if (!is_basis_free(k, basis)) {
            continue;
        }
        const std::uint64_t limit = n / k;  // m_t * k <= n  <=>  m_t <= floor(n / k)
        while (t > 0 && values[t - 1] > limit) {
            --t;
        }
        sum += f[t];
        if (with_witness) {
            const Color keep = white_majority[t] ? Color::white : Color::black;
            for (std::size_t i = 1; i <= t; ++i) {
                if (color_of(seq.at(i).exponents) == keep) {
                    out.witness.push_back(values[i - 1] * k);
                }
            }
        }
    }
    mpz_set_ui(out.count.get_mpz_t(), sum);
    std::sort(out.witness.begin(), out.witness.end());
    return out;
}

namespace {

constexpr mpfr_prec_t log_precision = 256;

// (sum of 1/k over ks) / ln x, correctly rounded at 256 bits per operation.
std::pair<std::string, double> log_density_of(const std::vector<std::uint64_t>& ks, std::size_t count,
                                              std::uint64_t x)
{
    mpfr_t sum, term, lnx;
    mpfr_inits2(log_precision, sum, term, lnx, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(sum, 1);
    for (std::size_t i = 0; i < count; ++i) {
        mpfr_set_ui(term, 1, MPFR_RNDN);
        mpfr_div_ui(term, term, ks[i], MPFR_RNDN);
        mpfr_add(sum, sum, term, MPFR_RNDN);
    }
    mpfr_set_ui(lnx, x, MPFR_RNDN);
    mpfr_log(lnx, lnx, MPFR_RNDN);
    mpfr_div(sum, sum, lnx, MPFR_RNDN);
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.40Rg", sum);
    std::string text(buf);
    mpfr_free_str(buf);
    double value = mpfr_get_d(sum, MPFR_RNDN);
    mpfr_clears(sum, term, lnx, static_cast<mpfr_ptr>(nullptr));
    return {text, value};
}

}  // namespace

DenseSetSample construct_dense_set(const CoprimeBasis& b, std::uint64_t x, const ExponentFilter& in_set)
{
    if (x < 1) {
        throw DomainError("X must be >= 1");
    }
    auto seq = enumerate_smooth(b, BigInt(static_cast<unsigned long>(x)));
    std::vector<std::uint64_t> chosen;  // smooth values whose exponent vector is in E
    for (const auto& e : seq.entries) {
        if (in_set(e.exponents)) {
            chosen.push_back(e.value.get_ui());
        }
    }
    std::vector<std::uint64_t> basis;
    for (const auto& bj : b.basis()) {
        basis.push_back(bj.fits_ulong_p() ? bj.get_ui() : UINT64_MAX);
    }
    DenseSetSample out;
    out.x = x;
    for (std::uint64_t n = 1; n <= x; ++n) {
        if (!is_basis_free(n, basis)) {
            continue;
        }
        const std::uint64_t limit = x / n;
        for (auto m : chosen) {
            if (m > limit) {
                break;
            }
            out.members.push_back(m * n);
        }
    }
    std::sort(out.members.begin(), out.members.end());
    out.counting_density = Rational(BigInt(static_cast<unsigned long>(out.members.size())),
                                    BigInt(static_cast<unsigned long>(x)));
    out.counting_density.canonicalize();
    if (x > 1) {
        out.log_density = log_density_of(out.members, out.members.size(), x).first;
    }
    return out;
}

DenseSetSample construct_dense_set(const RationalSet& a, std::uint64_t x,
                                   const std::optional<std::vector<LatticeVec>>& witness, int depth)
{
    if (!witness && a.is_coprime_integer_set()) {
        auto basis = CoprimeBasis::from_coprime_integers(a.integers());
        return construct_dense_set(basis, x, [](const LatticeVec& u) { return color_of(u) == Color::white; });
    }
    auto basis = derive_basis(a);
    std::set<LatticeVec> e;
    if (witness) {
        e.insert(witness->begin(), witness->end());
        if (!is_difference_free(*witness, basis.diffs())) {
            throw DomainError("witness exponent set is not difference-free");
        }
    } else {
        auto g = gamma_bracket(basis, depth);
        e.insert(g.witness.begin(), g.witness.end());
    }
    return construct_dense_set(basis, x, [&e](const LatticeVec& u) { return e.count(u) != 0; });
}

std::vector<DensityRow> empirical_densities(const std::vector<std::uint64_t>& members,
                                            const std::vector<std::uint64_t>& checkpoints)
{
    for (std::size_t i = 1; i < members.size(); ++i) {
        if (members[i - 1] >= members[i]) {
            throw DomainError("members must be strictly increasing");
        }
    }
    std::vector<DensityRow> rows;
    for (auto x : checkpoints) {
        if (x < 1) {
            throw DomainError("checkpoint must be >= 1");
        }
        DensityRow row;
        row.x = x;
        auto count = static_cast<std::size_t>(std::upper_bound(members.begin(), members.end(), x) - members.begin());
        row.count = count;
        row.counting_density = Rational(BigInt(static_cast<unsigned long>(count)), BigInt(static_cast<unsigned long>(x)));
        row.counting_density.canonicalize();
        if (x > 1) {
            auto [text, value] = log_density_of(members, count, x);
            row.log_density = text;
            row.log_density_value = value;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

GapReport strict_gap_check(const BigInt& p, const BigInt& q, std::size_t max_entries)
{
    GapReport report;
    report.rho = rho_closed_form({p, q});
    report.tolerance = Rational(1, 64);
    for (report.rounds = 1; report.rounds <= 40; ++report.rounds) {
        try {
            auto s = sigma_series(p, q, report.tolerance, max_entries);
            report.sigma = s.bracket;
        } catch (const BudgetError& e) {
            report.note = std::string("inconclusive: ") + e.what();
            return report;
        }
        if (report.sigma.lower > report.rho) {
            report.gap_proven = true;
            report.note = "certified lower bound exceeds rho";
            return report;
        }
        report.tolerance /= 4;
    }
    report.note = "inconclusive: round limit reached";
    return report;
}

}  // namespace qfree
