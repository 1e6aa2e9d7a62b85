// Serial reference path against the OpenMP path for the parallel kernels.

#include "edgecolor/bench.hpp"
#include "edgecolor/coloring.hpp"
#include "edgecolor/execution.hpp"
#include "edgecolor/matching.hpp"

#include <benchmark/benchmark.h>

using namespace edgecolor;

namespace {

Exec exec_of(const benchmark::State& state) {
    return state.range(0) == 0 ? Exec::serial : Exec::parallel;
}

void label(benchmark::State& state) {
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel x" + std::to_string(available_threads()));
}

void BM_EnumerateAugmentations(benchmark::State& state) {
    const auto gen = bench::generate("weighted:100:gnm:200,600", 1);
    const Matching m = greedy_maximal_matching(gen.graph);
    EnumerateOptions opts;
    opts.exec = exec_of(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_augmentations(*gen.weighted, m, 3, opts));
    }
    label(state);
}

void BM_PervasiveMatching(benchmark::State& state) {
    const Graph g = bench::generate("gnm:300,1500", 2).graph;
    PervasiveOptions opts;
    opts.exec = exec_of(state);
    opts.matching.exec = opts.exec;
    opts.matching.limits = {2, 4'000'000, true};
    for (auto _ : state) {
        benchmark::DoNotOptimize(pervasive_matching(g, g.max_degree(), 4, Ratio(1, 2), opts));
    }
    label(state);
}

void BM_FullColoringLeaves(benchmark::State& state) {
    const Graph g = bench::generate("dregular:256,64", 3).graph;
    ColoringOptions opts;
    opts.exec = exec_of(state);
    opts.forced_split_depth = 3;
    opts.split_constant = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(full_coloring(g, g.max_degree(), Ratio(1, 2), opts));
    }
    label(state);
}

} // namespace

BENCHMARK(BM_EnumerateAugmentations)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PervasiveMatching)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FullColoringLeaves)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
