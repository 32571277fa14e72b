#include <benchmark/benchmark.h>

#include "qder/cyclesums.hpp"
#include "qder/group_oracle.hpp"
#include "qder/qfunctions.hpp"
#include "qder/series.hpp"

using namespace qder;

static void BM_PartitionEnumeration(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long count = 0;
        enumerate_partitions(n, {}, [&](const Partition&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_PartitionEnumeration)->Arg(30)->Arg(40)->Arg(50);

static void BM_SymplReducedSum(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    SumOptions opts;
    opts.threads = 1;
    for (auto _ : state) {
        auto r = sum_sympl_lhs(m, SumMode::reduced, opts);
        benchmark::DoNotOptimize(r.terms);
    }
}
BENCHMARK(BM_SymplReducedSum)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_GaussianBinomial(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gaussian_binomial(n, n / 2));
}
BENCHMARK(BM_GaussianBinomial)->Arg(10)->Arg(20)->Arg(40);

static void BM_ChainUnitary(benchmark::State& state) {
    int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto recs = verify_chain(ChainFamily::u, order);
        benchmark::DoNotOptimize(recs.size());
    }
}
BENCHMARK(BM_ChainUnitary)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_BuildSp2(benchmark::State& state) {
    for (auto _ : state) {
        GroupInstance g = build_group(Family::asp, 1, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(g.elements.size());
    }
}
BENCHMARK(BM_BuildSp2)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
