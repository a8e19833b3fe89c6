#include <benchmark/benchmark.h>

#include "pcrp/cover.hpp"
#include "pcrp/generator.hpp"
#include "pcrp/maxrpsp.hpp"

namespace {

using namespace pcrp;

void BM_TransitiveClosure(benchmark::State& state) {
    Dag dag = random_dag({static_cast<int>(state.range(0)), 24, 0.02}, 1);
    for (auto _ : state) {
        auto reach = transitive_closure(dag);
        benchmark::DoNotOptimize(reach);
    }
}
BENCHMARK(BM_TransitiveClosure)->Arg(256)->Arg(1024)->Arg(4096);

void BM_MinPathCover(benchmark::State& state) {
    Dag dag = random_dag({static_cast<int>(state.range(0)), 16, 0.05}, 2);
    for (auto _ : state) {
        auto paths = min_path_cover(dag);
        benchmark::DoNotOptimize(paths);
    }
}
BENCHMARK(BM_MinPathCover)->Arg(128)->Arg(512);

void BM_MaxRpspDp(benchmark::State& state) {
    auto inst = serial_blocks_instance(static_cast<int>(state.range(0)), 400);
    for (auto _ : state) {
        auto res = max_rpsp_dp(inst);
        benchmark::DoNotOptimize(res);
    }
    state.counters["pairs"] = static_cast<double>(inst.pairs().size());
}
BENCHMARK(BM_MaxRpspDp)->Arg(2)->Arg(4)->Arg(6);

void BM_TwoPathSolver(benchmark::State& state) {
    auto inst = random_instance({{static_cast<int>(state.range(0)), 8, 0.2}, 12, {}}, 3);
    for (auto _ : state) {
        try {
            auto sol = solve_2pcrp(inst);
            benchmark::DoNotOptimize(sol);
        } catch (const Error&) {
        }
    }
}
BENCHMARK(BM_TwoPathSolver)->Arg(40)->Arg(80);

void BM_EnumeratePaths(benchmark::State& state) {
    // serial two-way blocks: 2^range paths
    const int blocks = static_cast<int>(state.range(0));
    std::vector<Arc> arcs;
    int at = 0;
    for (int k = 0; k < blocks; ++k) {
        arcs.emplace_back(at, at + 1);
        arcs.emplace_back(at, at + 2);
        arcs.emplace_back(at + 1, at + 3);
        arcs.emplace_back(at + 2, at + 3);
        at += 3;
    }
    Dag dag(3 * blocks + 1, std::move(arcs), 0, 3 * blocks);
    for (auto _ : state) {
        std::uint64_t count = 0;
        for_each_st_path(dag, ~std::uint64_t{0}, [&](const StPath&) {
            ++count;
            return true;
        });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumeratePaths)->Arg(10)->Arg(14);

}  // namespace

BENCHMARK_MAIN();
