#include <benchmark/benchmark.h>

#include "cubekappa/constructions.hpp"
#include "cubekappa/cube.hpp"
#include "cubekappa/graph.hpp"
#include "cubekappa/solver.hpp"
#include "cubekappa/verify.hpp"

using namespace cubekappa;

static void BM_BuildCube(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto cube = build_kary_cube(3, n);
        benchmark::DoNotOptimize(cube.graph.edge_count());
    }
}
BENCHMARK(BM_BuildCube)->Arg(3)->Arg(4)->Arg(6);

static void BM_VertexConnectivity(benchmark::State& state) {
    auto cube = build_kary_cube(3, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(vertex_connectivity(cube.graph));
}
BENCHMARK(BM_VertexConnectivity)->Arg(2)->Arg(3)->Arg(4);

static void BM_Components(benchmark::State& state) {
    auto cube = build_kary_cube(3, 3);
    VertexSet cut = extremal_cut(cube.graph, cube.meta, 3).cut;
    for (auto _ : state) benchmark::DoNotOptimize(components(cube.graph, cut).size());
}
BENCHMARK(BM_Components);

static void BM_ExhaustiveSweep(benchmark::State& state) {
    auto cube = build_kary_cube(3, 3);
    int bound = static_cast<int>(state.range(0));
    SearchBudget budget;
    budget.workers = 1;
    for (auto _ : state) {
        auto out = verify_bounded_cut_structure(cube.graph, bound, patterns_small_side(1),
                                                VerifyMode::exhaustively(), budget);
        benchmark::DoNotOptimize(out.checked_count);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 397594);
}
BENCHMARK(BM_ExhaustiveSweep)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_FragmentSearch(benchmark::State& state) {
    auto cube = build_kary_cube(3, 3);
    SearchBudget budget;
    budget.workers = 1;
    for (auto _ : state) {
        auto out = fragment_search_bounds(cube.graph, 3, budget, &cube.meta);
        benchmark::DoNotOptimize(out.evidence.upper);
    }
}
BENCHMARK(BM_FragmentSearch)->Unit(benchmark::kMillisecond);

static void BM_ExactExtraSmall(benchmark::State& state) {
    auto cube = build_kary_cube(3, 2);
    SearchBudget budget;
    budget.workers = 1;
    for (auto _ : state) {
        auto out = exact_extra_connectivity(cube.graph, 1, budget);
        benchmark::DoNotOptimize(out.value);
    }
}
BENCHMARK(BM_ExactExtraSmall);

BENCHMARK_MAIN();
