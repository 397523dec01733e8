#include "qfree_cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qfree/qfree.hpp"
#include "qfree_cli/verify.hpp"

namespace qfree::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// What a subcommand produces; rendered as text, JSON or CSV.
struct Output {
    Json params = Json::object();
    Json result;
    std::string provenance;
    std::string text;
    std::optional<Table> table;
    int exit_code = Exit::ok;
};

struct Globals {
    bool json = false;
    bool csv = false;
    bool exact = false;
    std::uint64_t seed = 0;
    std::string budget;
};

Json rational_json(const Rational& q)
{
    return to_string(q);
}

Json integer_json(const BigInt& z)
{
    if (z.fits_slong_p()) {
        return z.get_si();
    }
    return z.get_str();
}

Json points_json(const std::vector<LatticeVec>& pts)
{
    Json arr = Json::array();
    for (const auto& p : pts) {
        arr.push_back(p);
    }
    return arr;
}

std::string points_text(const std::vector<LatticeVec>& pts)
{
    return points_json(pts).dump();
}

Json bracket_json(const DensityBracket& b)
{
    Json j{{"lower", rational_json(b.lower)}, {"upper", rational_json(b.upper)}, {"width", rational_json(b.width())},
           {"method", b.method}};
    Json detail = Json::object();
    for (const auto& [k, v] : b.detail) {
        detail[k] = v;
    }
    j["detail"] = detail;
    return j;
}

std::vector<std::string> split_top_level(const std::string& text)
{
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char ch : text) {
        if (ch == '(') {
            ++depth;
        } else if (ch == ')') {
            --depth;
        }
        if (ch == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::vector<BigInt> integer_list(const std::string& text)
{
    std::vector<BigInt> out;
    for (const auto& part : split_top_level(text)) {
        out.push_back(parse_integer(part));
    }
    return out;
}

std::vector<Real> real_list(const std::string& text)
{
    std::vector<Real> out;
    for (const auto& part : split_top_level(text)) {
        out.push_back(Real::parse(part));
    }
    return out;
}

std::vector<std::uint64_t> u64_list(const std::string& text)
{
    std::vector<std::uint64_t> out;
    for (const auto& z : integer_list(text)) {
        if (z < 1 || !z.fits_ulong_p()) {
            throw DomainError("checkpoints must be positive 64-bit integers");
        }
        out.push_back(z.get_ui());
    }
    return out;
}

std::vector<LatticeVec> parse_points(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception&) {
        throw DomainError("points must be a JSON array of coordinate arrays, e.g. [[0,0],[2,1]]");
    }
    if (!j.is_array()) {
        throw DomainError("points must be a JSON array");
    }
    std::vector<LatticeVec> pts;
    for (const auto& p : j) {
        if (!p.is_array()) {
            throw DomainError("each point must be an array of integers");
        }
        LatticeVec v;
        for (const auto& c : p) {
            if (!c.is_number_integer()) {
                throw DomainError("coordinates must be integers");
            }
            v.push_back(c.get<int>());
        }
        pts.push_back(v);
    }
    return pts;
}

void require_positive(std::uint64_t value, const char* name)
{
    if (value == 0) {
        throw DomainError(std::string(name) + " must be positive");
    }
}

std::string with_decimal(const Rational& q, bool exact)
{
    if (exact) {
        return to_string(q);
    }
    return to_string(q) + "  (" + to_decimal(q, 12) + ")";
}

std::string bracket_text(const DensityBracket& b, bool exact)
{
    std::ostringstream os;
    os << "lower " << with_decimal(b.lower, exact) << "\n"
       << "upper " << with_decimal(b.upper, exact) << "\n"
       << "width " << with_decimal(b.width(), exact) << "\n"
       << "method " << b.method << "\n";
    return os.str();
}

Tier resolve_tier(const Globals& g)
{
    std::string name = g.budget;
    if (name.empty()) {
        const char* env = std::getenv("QFREE_BUDGET");
        name = env != nullptr ? env : "standard";
    }
    auto tier = parse_tier(name);
    if (!tier) {
        throw CLI::ValidationError("--budget", "budget tier must be small, standard or large (got '" + name + "')");
    }
    return *tier;
}

std::size_t tier_value(Tier tier, std::size_t small, std::size_t standard, std::size_t large)
{
    return tier == Tier::small ? small : tier == Tier::large ? large : standard;
}

// Subcommand handlers ------------------------------------------------------

struct Options {
    std::string a;
    std::string b;
    std::string alphas;
    std::string c;
    std::string tol = "1/10000";
    std::string points;
    std::string checkpoints;
    std::string triangle;
    std::string suite = "all";
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::uint64_t n = 0;
    std::uint64_t x = 0;
    std::uint64_t t = 0;
    std::uint64_t bound = 0;
    int depth = 8;
    std::size_t cap = 40;
    std::uint64_t limit = 0;
    std::int64_t alpha1 = 1;
    std::int64_t alpha2 = 2;
    std::int64_t c_max = 100;
    bool witness = false;
    bool list = false;
    bool no_max_check = false;
};

Output cmd_rho(const Options& o, const Globals& g)
{
    auto set = RationalSet::parse(o.a);
    if (!set.is_coprime_integer_set()) {
        throw DomainError("elements not pairwise coprime integers; use rho-general for other sets");
    }
    auto a = set.integers();
    std::sort(a.begin(), a.end());
    Rational rho = rho_closed_form(a);
    Output out;
    out.params = {{"a", o.a}};
    out.result = rational_json(rho);
    out.provenance = "closed form (1/2)(1 + prod (a_i - 1)/(a_i + 1)) for pairwise coprime integers";
    out.text = "rho = " + with_decimal(rho, g.exact) + "\n";
    return out;
}

Output cmd_rho_general(const Options& o, const Globals& g)
{
    auto set = RationalSet::parse(o.a);
    SearchOptions so;
    so.cap = o.cap;
    auto br = rho_general(set, o.depth, so);
    Output out;
    out.params = {{"a", o.a}, {"depth", o.depth}, {"cap", o.cap}};
    out.result = bracket_json(br);
    out.provenance = "phi(B) times the exact optimum of the truncated weighted difference-free problem, plus the "
                     "closed-form tail mass";
    out.text = bracket_text(br, g.exact);
    if (set.is_coprime_integer_set()) {
        auto a = set.integers();
        std::sort(a.begin(), a.end());
        Rational closed = rho_closed_form(a);
        out.result["closed_form"] = rational_json(closed);
        out.result["contains_closed_form"] = br.contains(closed);
        out.text += "closed form " + with_decimal(closed, g.exact) + (br.contains(closed) ? " (inside)\n" : " (OUTSIDE)\n");
    }
    return out;
}

Output cmd_sigma(const Options& o, const Globals& g)
{
    Rational tol = parse_rational(o.tol);
    auto max_entries = o.limit != 0 ? o.limit : tier_value(resolve_tier(g), 100'000, 1'000'000, 10'000'000);
    auto r = sigma_series(o.p, o.q, tol, max_entries);
    Output out;
    out.params = {{"p", o.p}, {"q", o.q}, {"tol", to_string(tol)}, {"max_entries", max_entries}};
    out.result = bracket_json(r.bracket);
    out.result["terms"] = r.terms;
    out.result["partial_sum"] = rational_json(r.partial_sum);
    out.result["tail_upper"] = rational_json(r.tail_upper);
    out.provenance = "phi * sum_t max(|A_0(t)|,|A_1(t)|)(1/m_t - 1/m_{t+1}); tail bounded by t/2 <= f(t) <= t "
                     "with summation by parts and the exact smooth harmonic remainder";
    out.text = bracket_text(r.bracket, g.exact) + "terms " + std::to_string(r.terms) + "\npartial sum (before phi) " +
               with_decimal(r.partial_sum, g.exact) + "\n";
    return out;
}

Output cmd_gap(const Options& o, const Globals& g)
{
    auto max_entries = o.limit != 0 ? o.limit : tier_value(resolve_tier(g), 200'000, 1'000'000, 10'000'000);
    auto r = strict_gap_check(o.p, o.q, max_entries);
    Output out;
    out.params = {{"p", o.p}, {"q", o.q}, {"max_entries", max_entries}};
    out.result = {{"rho", rational_json(r.rho)},
                  {"sigma", {{"lower", rational_json(r.sigma.lower)}, {"upper", rational_json(r.sigma.upper)}}},
                  {"gap_proven", r.gap_proven},
                  {"tolerance", rational_json(r.tolerance)},
                  {"rounds", r.rounds},
                  {"note", r.note}};
    out.provenance = "certified series lower bound compared with the closed-form density";
    out.text = "rho " + with_decimal(r.rho, g.exact) + "\nsigma lower " + with_decimal(r.sigma.lower, g.exact) +
               "\nsigma upper " + with_decimal(r.sigma.upper, g.exact) + "\ngap " +
               (r.gap_proven ? "proven" : "inconclusive") + " after " + std::to_string(r.rounds) + " rounds\n";
    if (!r.note.empty()) {
        out.text += r.note + "\n";
    }
    return out;
}

Output cmd_max_subset(const Options& o, const Globals&)
{
    require_positive(o.n, "--n");
    auto r = max_subset_count(o.p, o.q, o.n, o.witness);
    Output out;
    out.params = {{"p", o.p}, {"q", o.q}, {"n", o.n}, {"witness", o.witness}};
    out.result = {{"count", integer_json(r.count)}};
    if (o.witness) {
        out.result["witness"] = r.witness;
    }
    out.provenance = "sum over basis-free n <= N of the majority colour count of the first t(N/n) smooth numbers";
    out.text = r.count.get_str() + "\n";
    if (o.witness) {
        out.text += Json(r.witness).dump() + "\n";
        Table t{{"k"}, {}};
        for (auto k : r.witness) {
            t.rows.push_back({std::to_string(k)});
        }
        out.table = t;
    }
    return out;
}

Output cmd_dense_set(const Options& o, const Globals& g)
{
    require_positive(o.x, "--x");
    auto set = RationalSet::parse(o.a);
    std::optional<std::vector<LatticeVec>> witness;
    if (!o.points.empty()) {
        witness = parse_points(o.points);
    }
    auto s = construct_dense_set(set, o.x, witness, o.depth);
    Output out;
    out.params = {{"a", o.a}, {"x", o.x}, {"depth", o.depth}};
    if (witness) {
        out.params["points"] = points_json(*witness);
    }
    out.result = {{"count", s.members.size()}, {"counting_density", rational_json(s.counting_density)}};
    out.result["log_density"] = s.log_density ? Json(*s.log_density) : Json(nullptr);
    if (o.list || o.x <= 1000) {
        out.result["members"] = s.members;
    }
    out.provenance = "S = {m n : n free of the basis, exponent vector of m in the chosen difference-free set}";
    out.text = "count " + std::to_string(s.members.size()) + "\ncounting density " +
               with_decimal(s.counting_density, g.exact) + "\nlog density " + s.log_density.value_or("undefined") + "\n";
    if (o.list || o.x <= 1000) {
        out.text += Json(s.members).dump() + "\n";
    }
    Table t{{"k"}, {}};
    for (auto k : s.members) {
        t.rows.push_back({std::to_string(k)});
    }
    out.table = t;
    return out;
}

Output cmd_densities(const Options& o, const Globals& g)
{
    auto set = RationalSet::parse(o.a);
    std::vector<std::uint64_t> checkpoints;
    if (!o.checkpoints.empty()) {
        checkpoints = u64_list(o.checkpoints);
    } else {
        require_positive(o.x, "--x");
        for (std::uint64_t x = 10; x <= o.x; x *= 10) {
            checkpoints.push_back(x);
        }
        if (checkpoints.empty() || checkpoints.back() != o.x) {
            checkpoints.push_back(o.x);
        }
    }
    std::sort(checkpoints.begin(), checkpoints.end());
    auto s = construct_dense_set(set, checkpoints.back(), std::nullopt, o.depth);
    auto rows = empirical_densities(s.members, checkpoints);
    Output out;
    out.params = {{"a", o.a}, {"checkpoints", checkpoints}, {"depth", o.depth}};
    out.result = Json::array();
    Table t{{"X", "count", "count_density", "count_density_decimal", "log_density"}, {}};
    std::ostringstream text;
    for (const auto& r : rows) {
        std::string log = r.log_density.value_or("");
        out.result.push_back({{"X", r.x},
                              {"count", r.count},
                              {"count_density", rational_json(r.counting_density)},
                              {"log_density", r.log_density ? Json(log) : Json(nullptr)}});
        t.rows.push_back({std::to_string(r.x), std::to_string(r.count), to_string(r.counting_density),
                          to_decimal(r.counting_density, 12), log});
        text << "X=" << r.x << " count=" << r.count << " density=" << with_decimal(r.counting_density, g.exact)
             << " log=" << (r.log_density ? log : "undefined") << "\n";
    }
    out.table = t;
    out.provenance = "counting density |S cap [X]|/X and logarithmic density (sum 1/k)/ln X of the constructed set";
    out.text = text.str();
    return out;
}

Output cmd_enumerate(const Options& o, const Globals&)
{
    require_positive(o.bound, "--bound");
    auto b = CoprimeBasis::from_coprime_integers(integer_list(o.b));
    auto seq = enumerate_smooth(b, BigInt(static_cast<unsigned long>(o.bound)));
    Output out;
    out.params = {{"b", o.b}, {"bound", o.bound}};
    out.result = Json::array();
    Table t{{"t", "value", "exponents"}, {}};
    std::ostringstream text;
    for (std::size_t i = 1; i <= seq.size(); ++i) {
        const auto& e = seq.at(i);
        out.result.push_back({{"t", i}, {"value", integer_json(e.value)}, {"exponents", e.exponents}});
        std::string exps = Json(e.exponents).dump();
        t.rows.push_back({std::to_string(i), e.value.get_str(), "\"" + exps + "\""});
        text << i << " " << e.value.get_str() << " " << exps << "\n";
    }
    out.table = t;
    out.provenance = "products of basis powers up to the bound, exact integer arithmetic";
    out.text = text.str();
    return out;
}

Output cmd_f(const Options& o, const Globals&)
{
    require_positive(o.t, "--t");
    auto f = f_via_checkerboard(o.p, o.q, o.t);
    auto seq = enumerate_smooth_pair(o.p, o.q, o.q);
    for (BigInt bound = o.q; seq.size() < o.t; bound *= 2) {
        seq = enumerate_smooth_pair(o.p, o.q, bound);
    }
    auto split = checkerboard_split(LatticeConfig::first_entries(seq, o.t));
    Output out;
    out.params = {{"p", o.p}, {"q", o.q}, {"t", o.t}};
    out.result = {{"f", f}, {"white", split.white}, {"black", split.black}};
    out.provenance = "largest colour class of the first t smooth numbers";
    out.text = "f = " + std::to_string(f) + " (white " + std::to_string(split.white) + ", black " +
               std::to_string(split.black) + ")\n";
    return out;
}

Output cmd_gamma(const Options& o, const Globals& g)
{
    if (o.a.empty() == o.b.empty()) {
        throw CLI::ValidationError("gamma", "give exactly one of --a (prime basis) or --b (coprime integer basis)");
    }
    CoprimeBasis basis = o.b.empty() ? derive_basis(RationalSet::parse(o.a))
                                     : CoprimeBasis::from_coprime_integers(integer_list(o.b));
    SearchOptions so;
    so.cap = o.cap;
    auto br = gamma_bracket(basis, o.depth, so);
    Output out;
    out.params = {{"a", o.a}, {"b", o.b}, {"depth", o.depth}, {"cap", o.cap}};
    Json basis_json = Json::array();
    for (const auto& x : basis.basis()) {
        basis_json.push_back(integer_json(x));
    }
    out.result = {{"basis", basis_json},
                  {"diffs", points_json(basis.diffs())},
                  {"lower", rational_json(br.lower)},
                  {"upper", rational_json(br.upper)},
                  {"width", rational_json(br.upper - br.lower)},
                  {"method", br.method}};
    if (o.witness) {
        out.result["witness"] = points_json(br.witness);
    }
    out.provenance = "exact optimum of sum prod b_j^{-u_j} over difference-free sets with |u|_1 <= depth, plus "
                     "closed-form tail mass";
    out.text = "lower " + with_decimal(br.lower, g.exact) + "\nupper " + with_decimal(br.upper, g.exact) +
               "\nmethod " + br.method + "\n";
    if (o.witness) {
        out.text += points_text(br.witness) + "\n";
    }
    return out;
}

Triangle parse_triangle(const Options& o)
{
    if (!o.triangle.empty()) {
        auto parts = split_top_level(o.triangle);
        if (parts.size() != 3) {
            throw DomainError("--triangle expects a,b,c");
        }
        return Triangle::rational(parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]));
    }
    require_positive(o.n, "--n");
    return Triangle::integer(o.p, o.q, BigInt(static_cast<unsigned long>(o.n)));
}

Output cmd_monochromatize(const Options& o, const Globals&)
{
    auto tri = parse_triangle(o);
    auto pts = parse_points(o.points);
    MonochromatizeOptions mo;
    mo.require_maximum = !o.no_max_check;
    mo.search.cap = o.cap;
    auto r = monochromatize(tri, pts, mo);
    Output out;
    out.params = {{"triangle", tri.describe()}, {"points", points_json(pts)}};
    Json steps = Json::array();
    for (const auto& s : r.steps) {
        steps.push_back({{"diagonal", s.diagonal}, {"case", s.sweep_case}, {"moved", s.moved}});
    }
    out.result = {{"points", points_json(r.points)}, {"color", color_name(r.color)}, {"steps", steps}};
    out.provenance = "diagonal sweep moving off-colour diagonals down, left or up";
    out.text = points_text(r.points) + "\ncolor " + color_name(r.color) + "\n";
    for (const auto& s : r.steps) {
        out.text += "diagonal " + std::to_string(s.diagonal) + ": case " + std::to_string(s.sweep_case) + ", moved " +
                    std::to_string(s.moved) + "\n";
    }
    return out;
}

Output cmd_simplex(const Options& o, const Globals&)
{
    SimplexSpec spec(real_list(o.alphas), Real::parse(o.c));
    auto config = simplex_points(spec);
    auto counts = checkerboard_split(config);
    Output out;
    out.params = {{"alphas", o.alphas}, {"c", o.c}};
    out.result = {{"points", config.size()}, {"white", counts.white}, {"black", counts.black},
                  {"integer_mode", spec.integer_mode()}};
    if (o.list) {
        out.result["lattice_points"] = points_json(config.points());
    }
    out.provenance = "lattice points of {x >= 0 : alpha . x <= c}, boundary decided exactly";
    out.text = "points " + std::to_string(config.size()) + " (white " + std::to_string(counts.white) + ", black " +
               std::to_string(counts.black) + ")\n";
    if (o.list) {
        out.text += points_text(config.points()) + "\n";
    }
    Table t{{"point", "color"}, {}};
    for (const auto& p : config.points()) {
        t.rows.push_back({"\"" + Json(p).dump() + "\"", color_name(color_of(p))});
    }
    out.table = t;
    return out;
}

Output cmd_black_majority(const Options& o, const Globals& g)
{
    auto alphas = real_list(o.alphas);
    auto budget = o.limit != 0 ? o.limit : tier_value(resolve_tier(g), 2'000, 20'000, 200'000);
    auto r = find_black_majority_c(alphas, budget);
    Output out;
    out.params = {{"alphas", o.alphas}, {"budget", budget}};
    out.provenance = "sweep of attained values alpha . x in increasing order with exact ties";
    if (!r.hit) {
        out.result = {{"found", false}, {"points_scanned", r.points_scanned}};
        out.text = "none found within " + std::to_string(budget) + " points\n";
        return out;
    }
    const auto& h = *r.hit;
    out.result = {{"found", true},
                  {"threshold", h.threshold.to_string()},
                  {"next_threshold", h.next_threshold.to_string()},
                  {"white", h.white},
                  {"black", h.black},
                  {"points_scanned", r.points_scanned}};
    if (h.n) {
        out.result["n"] = integer_json(*h.n);
        out.text = "n = " + h.n->get_str() + " (black " + std::to_string(h.black) + ", white " + std::to_string(h.white) + ")\n";
    }
    if (h.c) {
        out.result["c"] = rational_json(*h.c);
        out.text = "c = " + to_string(*h.c) + " (black " + std::to_string(h.black) + ", white " + std::to_string(h.white) +
                   "; threshold " + h.threshold.to_string() + ")\n";
    }
    return out;
}

Output cmd_slope_profile(const Options& o, const Globals&)
{
    auto rows = rational_slope_profile(o.alpha1, o.alpha2, o.c_max);
    Output out;
    out.params = {{"alpha1", o.alpha1}, {"alpha2", o.alpha2}, {"c_max", o.c_max}};
    out.result = Json::array();
    Table t{{"c", "white", "black", "diff"}, {}};
    std::ostringstream text;
    for (const auto& r : rows) {
        out.result.push_back({{"c", r.c}, {"white", r.white}, {"black", r.black}, {"diff", r.diff()}});
        t.rows.push_back({std::to_string(r.c), std::to_string(r.white), std::to_string(r.black), std::to_string(r.diff())});
        text << "c=" << r.c << " white=" << r.white << " black=" << r.black << " diff=" << r.diff() << "\n";
    }
    out.table = t;
    out.provenance = "direct colour count of {x + alpha2/alpha1 y <= c/alpha1}";
    out.text = text.str();
    return out;
}

Output cmd_verify(const Options& o, const Globals& g)
{
    Tier tier = resolve_tier(g);
    std::vector<std::string> names;
    if (o.suite == "all") {
        names = suite_names();
    } else if (std::find(suite_names().begin(), suite_names().end(), o.suite) != suite_names().end()) {
        names = {o.suite};
    } else {
        throw CLI::ValidationError("--suite", "unknown suite '" + o.suite + "'");
    }
    Output out;
    out.params = {{"suite", o.suite}, {"seed", g.seed}, {"budget", tier_name(tier)}};
    out.result = Json::array();
    out.provenance = "seeded property suites against brute-force oracles (counter-based SplitMix64)";
    std::ostringstream text;
    Table t{{"suite", "property", "passed", "total"}, {}};
    bool all_ok = true;
    for (const auto& name : names) {
        auto suite = run_suite(name, g.seed, tier);
        all_ok = all_ok && suite.ok();
        Json props = Json::array();
        text << name << ": " << (suite.ok() ? "PASS" : "FAIL") << "\n";
        for (const auto& p : suite.properties) {
            Json pj{{"name", p.name}, {"passed", p.passed}, {"total", p.total}, {"ok", p.ok()}};
            if (!p.detail.empty()) {
                pj["detail"] = p.detail;
            }
            if (p.counterexample) {
                pj["counterexample"] = *p.counterexample;
            }
            props.push_back(pj);
            text << "  [" << (p.ok() ? "pass" : "FAIL") << "] " << p.name << ": " << p.passed << "/" << p.total;
            if (!p.detail.empty()) {
                text << "  (" << p.detail << ")";
            }
            text << "\n";
            if (p.counterexample) {
                text << "    first counterexample: " << *p.counterexample << "\n";
            }
            t.rows.push_back({name, "\"" + p.name + "\"", std::to_string(p.passed), std::to_string(p.total)});
        }
        out.result.push_back({{"suite", name}, {"ok", suite.ok()}, {"properties", props}});
    }
    text << (all_ok ? "all properties hold" : "FAILURES present") << "\n";
    out.text = text.str();
    out.table = t;
    out.exit_code = all_ok ? Exit::ok : Exit::verify_failed;
    return out;
}

void render(const Output& out, const Globals& g, std::ostream& os)
{
    if (g.json) {
        Json j{{"params", out.params}, {"result", out.result}, {"provenance", out.provenance}};
        os << j.dump(2) << "\n";
        return;
    }
    if (g.csv) {
        const auto& t = *out.table;
        for (std::size_t i = 0; i < t.header.size(); ++i) {
            os << (i ? "," : "") << t.header[i];
        }
        os << "\n";
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                os << (i ? "," : "") << row[i];
            }
            os << "\n";
        }
        return;
    }
    os << out.text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact densities and extremal sizes of quotient-free integer sets", "qfree"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    auto* json_flag = app.add_flag("--json", g.json, "Emit one JSON object {params, result, provenance}");
    auto* csv_flag = app.add_flag("--csv", g.csv, "Emit a CSV table where the subcommand has one");
    json_flag->excludes(csv_flag);
    app.add_flag("--exact", g.exact, "Text output without decimal approximations");
    app.add_option("--seed", g.seed, "Seed for randomized suites (default 0)");
    app.add_option("--budget", g.budget, "Budget tier: small, standard or large (default from QFREE_BUDGET)");

    Options o;
    using Handler = std::function<Output(const Options&, const Globals&)>;
    std::vector<std::pair<CLI::App*, Handler>> handlers;
    auto sub = [&](const std::string& name, const std::string& help, Handler h) {
        auto* s = app.add_subcommand(name, help);
        handlers.emplace_back(s, std::move(h));
        return s;
    };

    auto* rho = sub("rho", "Closed-form density for pairwise coprime integers", cmd_rho);
    rho->add_option("--a", o.a, "Comma-separated integers, e.g. 2,3")->required();

    auto* rg = sub("rho-general", "Density bracket for any finite set of rationals", cmd_rho_general);
    rg->add_option("--a", o.a, "Comma-separated rationals, e.g. 3/2,5")->required();
    rg->add_option("--depth", o.depth, "Truncation depth L")->check(CLI::NonNegativeNumber);
    rg->add_option("--cap", o.cap, "Branch-and-bound cap for non-bipartite instances");

    auto* sg = sub("sigma", "Certified bracket for the upper-density series of a coprime pair", cmd_sigma);
    sg->add_option("--p", o.p)->required();
    sg->add_option("--q", o.q)->required();
    sg->add_option("--tol", o.tol, "Target bracket width (rational)");
    sg->add_option("--limit", o.limit, "Smooth numbers to enumerate at most (overrides the tier)");

    auto* gp = sub("gap", "Certify that the upper density strictly exceeds the density", cmd_gap);
    gp->add_option("--p", o.p)->required();
    gp->add_option("--q", o.q)->required();
    gp->add_option("--limit", o.limit, "Smooth numbers to enumerate at most (overrides the tier)");

    auto* ms = sub("max-subset", "Largest {p,q}-quotient-free subset of [N]", cmd_max_subset);
    ms->add_option("--p", o.p)->required();
    ms->add_option("--q", o.q)->required();
    ms->add_option("--n", o.n)->required();
    ms->add_flag("--witness", o.witness, "Also list an optimal subset");

    auto* ds = sub("dense-set", "List the constructed dense quotient-free set up to X", cmd_dense_set);
    ds->add_option("--a", o.a)->required();
    ds->add_option("--x", o.x)->required();
    ds->add_option("--depth", o.depth, "Depth for the gamma witness when A is not coprime integers");
    ds->add_option("--points", o.points, "Explicit exponent set as JSON, e.g. [[0,0],[1,1]]");
    ds->add_flag("--list", o.list, "Print members even for large X");

    auto* dn = sub("densities", "Counting and log density of the constructed set at checkpoints", cmd_densities);
    dn->add_option("--a", o.a)->required();
    dn->add_option("--x", o.x, "Largest checkpoint; decades below it are added");
    dn->add_option("--checkpoints", o.checkpoints, "Comma-separated X values");
    dn->add_option("--depth", o.depth);

    auto* en = sub("enumerate", "Smooth numbers over a coprime basis", cmd_enumerate);
    en->add_option("--b", o.b, "Comma-separated pairwise coprime integers")->required();
    en->add_option("--bound", o.bound)->required();

    auto* fc = sub("f", "Largest quotient-free subset of the first t smooth numbers", cmd_f);
    fc->add_option("--p", o.p)->required();
    fc->add_option("--q", o.q)->required();
    fc->add_option("--t", o.t)->required();

    auto* gm = sub("gamma", "Bracket for the weighted difference-free supremum", cmd_gamma);
    gm->add_option("--a", o.a, "Rationals; the prime basis is derived");
    gm->add_option("--b", o.b, "Pairwise coprime integers used as their own basis");
    gm->add_option("--depth", o.depth)->check(CLI::NonNegativeNumber);
    gm->add_option("--cap", o.cap);
    gm->add_flag("--witness", o.witness, "Print the optimal truncated set");

    auto* mc = sub("monochromatize", "Recolour an optimal configuration in a triangle", cmd_monochromatize);
    mc->add_option("--p", o.p);
    mc->add_option("--q", o.q);
    mc->add_option("--n", o.n, "Integer mode: p^x q^y <= n");
    mc->add_option("--triangle", o.triangle, "Rational mode: a,b,c for a x + b y <= c");
    mc->add_option("--points", o.points, "JSON array of [x,y] points")->required();
    mc->add_option("--cap", o.cap);
    mc->add_flag("--no-max-check", o.no_max_check, "Skip the maximum-size precondition");

    auto* sx = sub("simplex", "Colour counts of lattice points in alpha . x <= c", cmd_simplex);
    sx->add_option("--alphas", o.alphas, "e.g. 1,sqrt(2) or ln(2),ln(3)")->required();
    sx->add_option("--c", o.c)->required();
    sx->add_flag("--list", o.list, "Print the points");

    auto* bm = sub("black-majority", "First threshold where black points outnumber white ones", cmd_black_majority);
    bm->add_option("--alphas", o.alphas)->required();
    bm->add_option("--limit", o.limit, "Lattice points to scan at most (overrides the tier)");

    auto* sp = sub("slope-profile", "White minus black for alpha1 x + alpha2 y <= c, c = 1..c_max", cmd_slope_profile);
    sp->add_option("--alpha1", o.alpha1);
    sp->add_option("--alpha2", o.alpha2);
    sp->add_option("--c-max", o.c_max);

    auto* vf = sub("verify", "Run seeded property suites", cmd_verify);
    vf->add_option("--suite", o.suite, "theorem6, lemma2, corollary, gap, monochromatize, geometry or all");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        resolve_tier(g);  // reject a bad tier even for subcommands that ignore it
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // app.help() already renders the selected subcommand's help.
            out << app.help();
            return Exit::ok;
        }
        err << "error: " << e.what() << "\n" << app.help();
        return Exit::usage;
    }

    for (const auto& [s, h] : handlers) {
        if (!s->parsed()) {
            continue;
        }
        try {
            Output result = h(o, g);
            if (g.csv && !result.table) {
                err << "error: " << s->get_name() << " has no CSV form\n";
                return Exit::usage;
            }
            render(result, g, out);
            return result.exit_code;
        } catch (const CLI::ValidationError& e) {
            err << "error: " << e.what() << "\n" << s->help();
            return Exit::usage;
        } catch (const std::invalid_argument& e) {
            err << "error: " << e.what() << "\n";
            return Exit::domain;
        } catch (const SweepError& e) {
            err << "error: " << e.what() << " (diagonal " << e.diagonal() << ")\n";
            return Exit::domain;
        } catch (const CapError& e) {
            err << "error: " << e.what();
            if (e.largest_feasible() >= 0) {
                err << " (largest feasible depth " << e.largest_feasible() << ")";
            }
            err << "\n";
            return Exit::budget;
        } catch (const BudgetError& e) {
            err << "error: " << e.what() << "\n";
            return Exit::budget;
        } catch (const PrecisionError& e) {
            err << "error: " << e.what() << "\n";
            return Exit::budget;
        } catch (const InsufficientEnumeration& e) {
            err << "error: " << e.what() << "\n";
            return Exit::budget;
        } catch (const std::exception& e) {
            err << "internal error: " << e.what() << "\n";
            return Exit::internal;
        }
    }
    return Exit::usage;
}

}  // namespace qfree::cli
