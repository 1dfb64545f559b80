#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "rimhook/extraction.hpp"
#include "rimhook/insertion.hpp"
#include "rimhook/series.hpp"

using namespace rimhook;

namespace {

Partition staircase(int n) {
    std::vector<int> parts;
    for (int p = n; p >= 1; --p) parts.push_back(p);
    return Partition(std::move(parts));
}

// Deterministic multiset of hooks with a fixed total size.
std::vector<RimHook> sample_hooks(const Partition& shape, int total, std::uint32_t seed) {
    const std::vector<RimHook> hooks = all_rim_hooks(shape);
    std::mt19937 rng(seed);
    std::vector<RimHook> out;
    int used = 0;
    while (true) {
        std::vector<const RimHook*> fitting;
        for (const RimHook& h : hooks) {
            if (used + h.cell_count() <= total) fitting.push_back(&h);
        }
        if (fitting.empty()) return out;
        const auto pick =
            std::uniform_int_distribution<std::size_t>(0, fitting.size() - 1)(rng);
        out.push_back(*fitting[pick]);
        used += fitting[pick]->cell_count();
    }
}

void BM_RimHookConstruction(benchmark::State& state) {
    const Partition shape = staircase(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(all_rim_hooks(shape));
    }
}
BENCHMARK(BM_RimHookConstruction)->Arg(8)->Arg(16)->Arg(32);

void BM_InsertionWalk(benchmark::State& state) {
    const Partition shape = staircase(static_cast<int>(state.range(0)));
    const ReversePlanePartition pi = build_rpp(shape, sample_hooks(shape, 200, 7));
    const RimHook hook(shape, {1, 1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(insertion_path(pi, hook));
    }
}
BENCHMARK(BM_InsertionWalk)->Arg(8)->Arg(16);

void BM_BuildRpp(benchmark::State& state) {
    const Partition shape = staircase(10);
    const std::vector<RimHook> hooks = sample_hooks(shape, static_cast<int>(state.range(0)), 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_rpp(shape, hooks));
    }
}
BENCHMARK(BM_BuildRpp)->Arg(50)->Arg(200);

void BM_LexFactorize(benchmark::State& state) {
    const Partition shape = staircase(10);
    const ReversePlanePartition pi =
        build_rpp(shape, sample_hooks(shape, static_cast<int>(state.range(0)), 13));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lex_factorize(pi));
    }
}
BENCHMARK(BM_LexFactorize)->Arg(50)->Arg(200);

void BM_HookProduct(benchmark::State& state) {
    const Partition shape = staircase(10);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hook_product(shape, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_HookProduct)->Arg(40)->Arg(120);

void BM_CountRppBySize(benchmark::State& state) {
    const Partition shape({4, 4, 4});
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_rpp_by_size(shape, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_CountRppBySize)->Arg(8)->Arg(12);

void BM_TraceProduct(benchmark::State& state) {
    const Partition shape({5, 4, 3, 2, 1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(trace_product(shape, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_TraceProduct)->Arg(6)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
