#include <benchmark/benchmark.h>

#include "generators.hpp"
#include "pfaffian/decompose.hpp"
#include "pfaffian/matching.hpp"
#include "pfaffian/oracle.hpp"
#include "pfaffian/orient.hpp"

using namespace pfaffian;

static void BM_PipelineGrid(benchmark::State &state) {
    BipartiteGraph g = testing::grid(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    PipelineOptions options;
    options.splice_check_matchings = 0;
    for (auto _ : state) benchmark::DoNotOptimize(pfaffian_orientation(g, options));
}
BENCHMARK(BM_PipelineGrid)->Arg(4)->Arg(8)->Arg(12);

static void BM_PipelineBiwheel(benchmark::State &state) {
    BipartiteGraph g = testing::biwheel(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(pfaffian_orientation(g));
}
BENCHMARK(BM_PipelineBiwheel)->Arg(4)->Arg(8)->Arg(16);

static void BM_PipelineTrisum(benchmark::State &state) {
    testing::Rng rng(1);
    BipartiteGraph g = testing::glue_trisum(rng, {testing::cube(), testing::biwheel(4), testing::cube()}, true);
    for (auto _ : state) benchmark::DoNotOptimize(pfaffian_orientation(g));
}
BENCHMARK(BM_PipelineTrisum);

static void BM_Trisectors(benchmark::State &state) {
    BipartiteGraph g = testing::biwheel(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_trisectors(g));
}
BENCHMARK(BM_Trisectors)->Arg(4)->Arg(8);

static void BM_Permanent(benchmark::State &state) {
    ZeroOneMatrix m(static_cast<int>(state.range(0)));
    for (int r = 0; r < m.order(); ++r)
        for (int c = 0; c < m.order(); ++c) m.set(r, c, (r + 2 * c) % 3 != 0);
    for (auto _ : state) benchmark::DoNotOptimize(oracle::permanent(m));
}
BENCHMARK(BM_Permanent)->Arg(10)->Arg(16);

static void BM_MaxMatching(benchmark::State &state) {
    BipartiteGraph g = testing::grid(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(max_matching(g));
}
BENCHMARK(BM_MaxMatching)->Arg(16)->Arg(64);
BENCHMARK_MAIN();
