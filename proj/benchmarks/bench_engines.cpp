#include <benchmark/benchmark.h>

#include "qaoa/gm_engine.hpp"
#include "qaoa/oracle.hpp"
#include "qaoa/pm_engine.hpp"
#include "qaoa/random.hpp"

using namespace qaoa;

static void BM_PmTotal(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SplitMix64 rng(1);
    auto g = random_graph(rng, n, 0.3);
    GraphView gv(g);
    auto w = random_ising(rng, gv);
    auto params = random_pm_params(rng, n, gv.m());
    auto axes = random_axes(rng, n);
    for (auto _ : state) benchmark::DoNotOptimize(expectation_total(w, params, axes, gv));
    state.counters["edges"] = gv.m();
}
BENCHMARK(BM_PmTotal)->Arg(10)->Arg(40)->Arg(160);

static void BM_PmOracle(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SplitMix64 rng(2);
    auto g = random_graph(rng, n, 0.3);
    GraphView gv(g);
    auto w = random_ising(rng, gv);
    auto params = random_pm_params(rng, n, gv.m());
    auto axes = random_axes(rng, n);
    for (auto _ : state) benchmark::DoNotOptimize(run_pm(gv, w, params, axes).total);
}
BENCHMARK(BM_PmOracle)->Arg(8)->Arg(12);

static void BM_GmTotal(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    const GmMode mode = state.range(1) ? GmMode::T : GmMode::L;
    SplitMix64 rng(3);
    auto g = random_hypergraph(rng, 8, 12, 3);
    auto params = random_gm_params(rng, g.m(), p);
    auto omega = random_product_state(rng, g.n());
    for (auto _ : state) {
        GmEvaluator ev(g, mode, omega);
        benchmark::DoNotOptimize(ev.expectation_total(params));
    }
}
BENCHMARK(BM_GmTotal)->ArgsProduct({{1, 2, 4}, {0, 1}});

static void BM_GmOracle(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    SplitMix64 rng(3);
    auto g = random_hypergraph(rng, 8, 12, 3);
    auto params = random_gm_params(rng, g.m(), p);
    for (auto _ : state) benchmark::DoNotOptimize(run_gm(g, params, GmMode::L).total);
}
BENCHMARK(BM_GmOracle)->Arg(1)->Arg(4);

static void BM_EvenFamilyCounts(benchmark::State& state) {
    SplitMix64 rng(4);
    auto g = random_graph(rng, static_cast<int>(state.range(0)), 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(count_even_by_size(g));
    state.counters["dimension"] = even_subhypergraph_basis(g).dimension;
}
BENCHMARK(BM_EvenFamilyCounts)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
