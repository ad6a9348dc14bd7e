#include <benchmark/benchmark.h>

#include <random>

#include "nimseq/optimize.hpp"
#include "nimseq/random.hpp"
#include "nimseq/wythoff.hpp"

using namespace nimseq;

static void BM_Generate(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const auto inst = random_instance(rng);
    for (auto _ : state) benchmark::DoNotOptimize(generate(inst, state.range(0)));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Generate)->Range(1 << 10, 1 << 20);

static void BM_DetectSimple(benchmark::State& state) {
    const Int half = state.range(0);
    const auto inst = simple_instance(-half, half);
    for (auto _ : state) benchmark::DoNotOptimize(detect(inst));
}
BENCHMARK(BM_DetectSimple)->DenseRange(2, 12, 2);

static void BM_DetectMethod(benchmark::State& state) {
    std::mt19937_64 rng(2);
    std::vector<ProblemInstance> sample;
    for (int i = 0; i < 50; ++i) sample.push_back(random_instance(rng));
    const auto method = state.range(0) == 0 ? Method::cuts : Method::window;
    for (auto _ : state)
        for (const auto& inst : sample) benchmark::DoNotOptimize(detect(inst, method));
}
BENCHMARK(BM_DetectMethod)->Arg(0)->Arg(1);

static void BM_WythoffRows(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(analyze_rows(state.range(0)));
}
BENCHMARK(BM_WythoffRows)->DenseRange(3, 6);

static void BM_KPaper(benchmark::State& state) {
    const Int m = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(k_paper(-(m / 2), m - m / 2));
}
BENCHMARK(BM_KPaper)->DenseRange(20, 80, 20);

static void BM_Extremal(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(construct_extremal(-4, 4));
}
BENCHMARK(BM_Extremal);

static void BM_Digraph(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(explore_digraph(6, -2, 2));
}
BENCHMARK(BM_Digraph);

BENCHMARK_MAIN();
