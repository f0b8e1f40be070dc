// Throughput of the structural graph passes. Enumeration itself is
// cached after the first call, so these curves measure the uncached
// work: validating raw edge masks, packing and normalizing a full
// enumeration, and grouping it into equivalence classes.

#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "thinset/largeness_graph.hpp"

using namespace thinset;

namespace {

void BM_ValidateAllMasks(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int pairs = n * (n - 1) / 2;
    for (auto _ : state) {
        int valid = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            LargenessGraph g = LargenessGraph::from_code(GraphCode{n, {mask}});
            valid += is_valid(g) ? 1 : 0;
        }
        benchmark::DoNotOptimize(valid);
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << pairs));
}

void BM_PackNormalize(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const std::vector<LargenessGraph>& all = enumerate_graphs(n);
    for (auto _ : state) {
        for (const LargenessGraph& g : all) {
            LargenessGraph p = pack(g);
            LargenessGraph m = normalize(g);
            benchmark::DoNotOptimize(p);
            benchmark::DoNotOptimize(m);
        }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(all.size()));
}

void BM_GraphClasses(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    enumerate_graphs(n); // warm the cache so grouping dominates
    for (auto _ : state) {
        std::vector<GraphClass> classes = graph_classes(n);
        benchmark::DoNotOptimize(classes);
    }
}

BENCHMARK(BM_ValidateAllMasks)->DenseRange(4, 6)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_PackNormalize)->Arg(8)->Arg(10)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_GraphClasses)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMicrosecond);

} // namespace
