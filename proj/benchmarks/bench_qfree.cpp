#include <benchmark/benchmark.h>

#include "qfree/qfree.hpp"

using namespace qfree;

static void BM_EnumerateSmooth(benchmark::State& state)
{
    auto b = CoprimeBasis::from_coprime_integers({2, 3, 5});
    BigInt bound = pow(BigInt(10), static_cast<unsigned long>(state.range(0)));
    std::size_t n = 0;
    for (auto _ : state) {
        auto seq = enumerate_smooth(b, bound);
        n = seq.size();
        benchmark::DoNotOptimize(seq);
    }
    state.counters["entries"] = static_cast<double>(n);
}
BENCHMARK(BM_EnumerateSmooth)->DenseRange(4, 12, 4);

static void BM_MaxDifferenceFree(benchmark::State& state)
{
    auto seq = enumerate_smooth_pair(2, 3, 1'000'000);
    auto config = LatticeConfig::first_entries(seq, static_cast<std::size_t>(state.range(0)));
    auto u = unit_diffs(2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(max_difference_free(config, u));
    }
}
BENCHMARK(BM_MaxDifferenceFree)->Arg(10)->Arg(20)->Arg(30)->Arg(40);

static void BM_GammaBracket(benchmark::State& state)
{
    auto b = CoprimeBasis::from_coprime_integers({2, 3, 5});
    for (auto _ : state) {
        benchmark::DoNotOptimize(gamma_bracket(b, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_GammaBracket)->Arg(4)->Arg(8)->Arg(12);

static void BM_SigmaSeries(benchmark::State& state)
{
    Rational tol(1, state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sigma_series(2, 3, tol));
    }
}
BENCHMARK(BM_SigmaSeries)->Arg(100)->Arg(10000)->Arg(1000000);

static void BM_MaxSubsetCount(benchmark::State& state)
{
    auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(max_subset_count(2, 3, n));
    }
}
BENCHMARK(BM_MaxSubsetCount)->Range(1 << 10, 1 << 20);

static void BM_BlackMajority(benchmark::State& state)
{
    std::vector<Real> alphas{Real::rational(1), Real::rational(2)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_black_majority_c(alphas, static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_BlackMajority)->Arg(1000)->Arg(20000);

BENCHMARK_MAIN();
