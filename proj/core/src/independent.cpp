#include "qfree/independent.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <queue>

#include "qfree/error.hpp"

namespace qfree {

namespace {

class Bitset {
public:
    explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

    /// Index of the lowest set bit, or npos.
    std::size_t first() const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w] != 0) {
                return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
            }
        }
        return npos;
    }

    std::size_t next(std::size_t i) const
    {
        ++i;
        std::size_t w = i / 64;
        if (w >= words_.size()) {
            return npos;
        }
        std::uint64_t word = words_[w] & (~std::uint64_t{0} << (i % 64));
        while (true) {
            if (word != 0) {
                return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
            }
            if (++w == words_.size()) {
                return npos;
            }
            word = words_[w];
        }
    }

    void subtract(const Bitset& other)
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            words_[w] &= ~other.words_[w];
        }
    }

    /// True when every bit of *this is also set in other.
    bool subset_of(const Bitset& other) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if ((words_[w] & ~other.words_[w]) != 0) {
                return false;
            }
        }
        return true;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::vector<std::uint64_t> words_;
};

template <class W>
class BranchAndBound {
public:
    BranchAndBound(const std::vector<std::vector<std::size_t>>& graph, std::vector<W> weights, W incumbent,
                   std::uint64_t node_budget)
        : n_(graph.size()), weights_(std::move(weights)), best_(std::move(incumbent)), node_budget_(node_budget)
    {
        adj_.assign(n_, Bitset(n_));
        for (std::size_t v = 0; v < n_; ++v) {
            for (auto w : graph[v]) {
                adj_[v].set(w);
            }
        }
    }

    void run()
    {
        Bitset all(n_);
        for (std::size_t v = 0; v < n_; ++v) {
            all.set(v);
        }
        search(all, W(0));
    }

    bool found() const { return found_; }
    bool aborted() const { return aborted_; }
    const W& best() const { return best_; }
    const std::vector<std::size_t>& best_set() const { return best_set_; }

private:
    // Greedy clique partition in index order; each clique contributes its max weight.
    W clique_bound(const Bitset& cand) const
    {
        std::vector<Bitset> cliques;
        std::vector<W> heaviest;
        for (auto v = cand.first(); v != Bitset::npos; v = cand.next(v)) {
            bool placed = false;
            for (std::size_t c = 0; c < cliques.size(); ++c) {
                if (cliques[c].subset_of(adj_[v])) {
                    cliques[c].set(v);
                    if (heaviest[c] < weights_[v]) {
                        heaviest[c] = weights_[v];
                    }
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                cliques.emplace_back(n_);
                cliques.back().set(v);
                heaviest.push_back(weights_[v]);
            }
        }
        W total(0);
        for (const auto& h : heaviest) {
            total += h;
        }
        return total;
    }

    void search(const Bitset& cand, const W& current)
    {
        if (aborted_) {
            return;
        }
        if (node_budget_ != 0 && ++nodes_ > node_budget_) {
            aborted_ = true;
            return;
        }
        auto v = cand.first();
        if (v == Bitset::npos) {
            if (best_ < current || (current == best_ && !found_)) {
                best_ = current;
                best_set_ = chosen_;
                found_ = true;
            }
            return;
        }
        W bound = current + clique_bound(cand);
        if (bound < best_ || (bound == best_ && found_)) {
            return;
        }
        Bitset with = cand;
        with.subtract(adj_[v]);
        with.reset(v);
        chosen_.push_back(v);
        search(with, current + weights_[v]);
        chosen_.pop_back();

        Bitset without = cand;
        without.reset(v);
        search(without, current);
    }

    std::size_t n_;
    std::vector<Bitset> adj_;
    std::vector<W> weights_;
    W best_;
    bool found_ = false;
    bool aborted_ = false;
    std::vector<std::size_t> chosen_;
    std::vector<std::size_t> best_set_;
    std::uint64_t node_budget_;
    std::uint64_t nodes_ = 0;
};

bool diffs_flip_color(const std::vector<LatticeVec>& diffs)
{
    return std::all_of(diffs.begin(), diffs.end(), [](const LatticeVec& u) { return color_of(u) == Color::black; });
}

// Heaviest colour class when every diff flips the colour, else greedy first-fit.
template <class W>
std::vector<std::size_t> initial_incumbent(const std::vector<LatticeVec>& points,
                                           const std::vector<std::vector<std::size_t>>& graph,
                                           const std::vector<W>& weights, const std::vector<LatticeVec>& diffs)
{
    std::vector<std::size_t> out;
    if (diffs_flip_color(diffs)) {
        std::vector<std::size_t> white, black;
        W ww(0), wb(0);
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (color_of(points[i]) == Color::white) {
                white.push_back(i);
                ww += weights[i];
            } else {
                black.push_back(i);
                wb += weights[i];
            }
        }
        return wb > ww ? black : white;
    }
    std::vector<bool> blocked(points.size(), false);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!blocked[i]) {
            out.push_back(i);
            for (auto j : graph[i]) {
                blocked[j] = true;
            }
        }
    }
    return out;
}

std::vector<LatticeVec> pick(const std::vector<LatticeVec>& points, std::vector<std::size_t> idx)
{
    std::sort(idx.begin(), idx.end());
    std::vector<LatticeVec> out;
    for (auto i : idx) {
        out.push_back(points[i]);
    }
    return out;
}

// Dinic max-flow on exact integer capacities.
class MaxFlow {
public:
    explicit MaxFlow(std::size_t n) : graph_(n), level_(n), iter_(n) {}

    void add_edge(std::size_t from, std::size_t to, const BigInt& cap)
    {
        graph_[from].push_back(edges_.size());
        edges_.push_back({to, cap});
        graph_[to].push_back(edges_.size());
        edges_.push_back({from, BigInt(0)});
    }

    BigInt run(std::size_t s, std::size_t t)
    {
        BigInt flow(0);
        while (bfs(s, t)) {
            std::fill(iter_.begin(), iter_.end(), 0);
            while (true) {
                BigInt f = dfs(s, t, BigInt(-1));
                if (f == 0) {
                    break;
                }
                flow += f;
            }
        }
        return flow;
    }

    std::vector<bool> reachable(std::size_t s) const
    {
        std::vector<bool> seen(graph_.size(), false);
        std::deque<std::size_t> queue{s};
        seen[s] = true;
        while (!queue.empty()) {
            auto v = queue.front();
            queue.pop_front();
            for (auto e : graph_[v]) {
                if (edges_[e].cap > 0 && !seen[edges_[e].to]) {
                    seen[edges_[e].to] = true;
                    queue.push_back(edges_[e].to);
                }
            }
        }
        return seen;
    }

private:
    struct Edge {
        std::size_t to;
        BigInt cap;
    };

    bool bfs(std::size_t s, std::size_t t)
    {
        std::fill(level_.begin(), level_.end(), -1);
        std::deque<std::size_t> queue{s};
        level_[s] = 0;
        while (!queue.empty()) {
            auto v = queue.front();
            queue.pop_front();
            for (auto e : graph_[v]) {
                if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
                    level_[edges_[e].to] = level_[v] + 1;
                    queue.push_back(edges_[e].to);
                }
            }
        }
        return level_[t] >= 0;
    }

    // limit < 0 means unbounded.
    BigInt dfs(std::size_t v, std::size_t t, const BigInt& limit)
    {
        if (v == t) {
            return limit;
        }
        for (; iter_[v] < graph_[v].size(); ++iter_[v]) {
            auto e = graph_[v][iter_[v]];
            auto& edge = edges_[e];
            if (edge.cap > 0 && level_[v] < level_[edge.to]) {
                BigInt next = (limit < 0 || edge.cap < limit) ? edge.cap : limit;
                BigInt d = dfs(edge.to, t, next);
                if (d > 0) {
                    edge.cap -= d;
                    edges_[e ^ 1].cap += d;
                    return d;
                }
            }
        }
        return BigInt(0);
    }

    std::vector<std::vector<std::size_t>> graph_;
    std::vector<Edge> edges_;
    std::vector<int> level_;
    std::vector<std::size_t> iter_;
};

WeightedSetResult min_cut_solve(const std::vector<LatticeVec>& points, const std::vector<Rational>& weights,
                                const std::vector<std::vector<std::size_t>>& graph, const std::vector<int>& side)
{
    const auto n = points.size();
    BigInt den(1);
    for (const auto& w : weights) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), w.get_den().get_mpz_t());
    }
    std::vector<BigInt> scaled(n);
    BigInt total(0);
    for (std::size_t i = 0; i < n; ++i) {
        scaled[i] = weights[i].get_num() * (den / weights[i].get_den());
        total += scaled[i];
    }
    const std::size_t source = n;
    const std::size_t sink = n + 1;
    MaxFlow flow(n + 2);
    BigInt infinite = total + 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (side[i] == 0) {
            flow.add_edge(source, i, scaled[i]);
            for (auto j : graph[i]) {
                flow.add_edge(i, j, infinite);
            }
        } else {
            flow.add_edge(i, sink, scaled[i]);
        }
    }
    BigInt cut = flow.run(source, sink);
    auto seen = flow.reachable(source);
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < n; ++i) {
        if ((side[i] == 0) == seen[i]) {
            chosen.push_back(i);
        }
    }
    WeightedSetResult out;
    out.weight = Rational(total - cut, den);
    out.weight.canonicalize();
    out.witness = pick(points, chosen);
    out.optimal = true;
    out.method = "min-cut";
    return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> conflict_graph(const std::vector<LatticeVec>& points,
                                                     const std::vector<LatticeVec>& diffs)
{
    std::map<LatticeVec, std::size_t> index;
    for (std::size_t i = 0; i < points.size(); ++i) {
        index.emplace(points[i], i);
    }
    std::vector<std::vector<std::size_t>> graph(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (const auto& u : diffs) {
            LatticeVec q = points[i];
            for (std::size_t k = 0; k < q.size(); ++k) {
                q[k] += u[k];
            }
            auto it = index.find(q);
            if (it != index.end() && it->second != i) {
                graph[i].push_back(it->second);
                graph[it->second].push_back(i);
            }
        }
    }
    for (auto& nbrs : graph) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return graph;
}

std::vector<int> bipartition(const std::vector<std::vector<std::size_t>>& graph)
{
    std::vector<int> side(graph.size(), -1);
    for (std::size_t start = 0; start < graph.size(); ++start) {
        if (side[start] >= 0) {
            continue;
        }
        side[start] = 0;
        std::deque<std::size_t> queue{start};
        while (!queue.empty()) {
            auto v = queue.front();
            queue.pop_front();
            for (auto w : graph[v]) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    return {};
                }
            }
        }
    }
    return side;
}

IndependentSetResult max_difference_free(const LatticeConfig& config, const std::vector<LatticeVec>& diffs,
                                         const SearchOptions& options)
{
    const auto& points = config.points();
    if (points.size() > options.cap) {
        throw CapError("instance too large for exact search: " + std::to_string(points.size()) +
                           " points exceed the cap of " + std::to_string(options.cap),
                       points.size(), options.cap);
    }
    auto graph = conflict_graph(points, diffs);
    std::vector<std::size_t> unit(points.size(), 1);
    auto incumbent = initial_incumbent(points, graph, unit, diffs);

    BranchAndBound<std::size_t> bb(graph, unit, incumbent.size(), options.node_budget);
    bb.run();

    IndependentSetResult out;
    if (bb.found()) {
        out.size = bb.best();
        out.witness = pick(points, bb.best_set());
    } else {
        out.size = incumbent.size();
        out.witness = pick(points, incumbent);
    }
    out.optimal = !bb.aborted();
    return out;
}

WeightedSetResult max_weight_difference_free(const std::vector<LatticeVec>& points,
                                             const std::vector<Rational>& weights,
                                             const std::vector<LatticeVec>& diffs, const SearchOptions& options)
{
    if (weights.size() != points.size()) {
        throw DomainError("one weight per point is required");
    }
    for (const auto& w : weights) {
        if (w <= 0) {
            throw DomainError("weights must be positive");
        }
    }
    auto graph = conflict_graph(points, diffs);
    auto side = bipartition(graph);
    if (!side.empty() && points.size() <= options.flow_cap) {
        return min_cut_solve(points, weights, graph, side);
    }
    if (points.size() > options.cap) {
        throw CapError("instance too large for exact search: " + std::to_string(points.size()) +
                           " points exceed the cap of " + std::to_string(side.empty() ? options.cap : options.flow_cap),
                       points.size(), side.empty() ? options.cap : options.flow_cap);
    }
    auto incumbent = initial_incumbent(points, graph, weights, diffs);
    Rational incumbent_weight(0);
    for (auto i : incumbent) {
        incumbent_weight += weights[i];
    }
    BranchAndBound<Rational> bb(graph, weights, incumbent_weight, options.node_budget);
    bb.run();

    WeightedSetResult out;
    out.method = "branch-and-bound";
    if (bb.found()) {
        out.weight = bb.best();
        out.witness = pick(points, bb.best_set());
    } else {
        out.weight = incumbent_weight;
        out.witness = pick(points, incumbent);
    }
    out.optimal = !bb.aborted();
    return out;
}

}  // namespace qfree
