#include <benchmark/benchmark.h>

#include "pasts/grid.hpp"

namespace {

using pasts::grid::Execution;

void BM_WignerGrid(benchmark::State& state, Execution exec) {
    const int n = static_cast<int>(state.range(0));
    const pasts::grid::GridSpec g{-4.0, 4.0, n, -4.0, 4.0, n};
    const pasts::StateSpec s{0.5, 0.3, static_cast<int>(state.range(1))};
    for (auto _ : state) {
        auto out = pasts::grid::sample_wigner(g, s, exec);
        benchmark::DoNotOptimize(out.values.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(g.size()));
    state.counters["threads"] = exec == Execution::parallel ? pasts::grid::worker_count() : 1;
}

void BM_EvolvedGrid(benchmark::State& state, Execution exec) {
    const int n = static_cast<int>(state.range(0));
    const pasts::grid::GridSpec g{-4.0, 4.0, n, -4.0, 4.0, n};
    const pasts::StateSpec s{0.5, 0.3, 3};
    for (auto _ : state) {
        auto out = pasts::grid::sample_evolved_wigner(g, s, {0.2, 0.3}, exec);
        benchmark::DoNotOptimize(out.values.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(g.size()));
}

}  // namespace

BENCHMARK_CAPTURE(BM_WignerGrid, serial, Execution::serial)->Args({201, 1})->Args({201, 8})->Args({501, 3})->UseRealTime();
BENCHMARK_CAPTURE(BM_WignerGrid, parallel, Execution::parallel)->Args({201, 1})->Args({201, 8})->Args({501, 3})->UseRealTime();
BENCHMARK_CAPTURE(BM_EvolvedGrid, serial, Execution::serial)->Arg(301)->UseRealTime();
BENCHMARK_CAPTURE(BM_EvolvedGrid, parallel, Execution::parallel)->Arg(301)->UseRealTime();

BENCHMARK_MAIN();
