// Search costs on small pair colorings: the lexicographic thin-set
// search in its found and exhausted regimes, the brute oracle it is
// checked against, and the exhaustive extremal computation.

#include <memory>
#include <numeric>
#include <span>
#include <vector>

#include <benchmark/benchmark.h>

#include "thinset/coloring.hpp"
#include "thinset/search.hpp"

using namespace thinset;

namespace {

std::vector<int> iota_domain(int d) {
    std::vector<int> v(d);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

Coloring parity(int d) {
    return Coloring("parity", 2, iota_domain(d), std::make_shared<IntPalette>(2),
                    [](std::span<const int> t) { return (t[0] + t[1]) % 2; });
}

// difference mod 5; with two colors allowed a witness needs a whole
// residue class, which exists from 30 points on
Coloring residue(int d) {
    return Coloring("residue", 2, iota_domain(d), std::make_shared<IntPalette>(5),
                    [](std::span<const int> t) { return (t[1] - t[0]) % 5; });
}

void BM_ThinParity(benchmark::State& state) {
    Coloring f = parity(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto w = find_thin_set(f, 1, 6);
        benchmark::DoNotOptimize(w);
    }
}

void BM_ThinResidue(benchmark::State& state) {
    Coloring f = residue(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto w = find_thin_set(f, 2, 6);
        benchmark::DoNotOptimize(w);
    }
}

void BM_BruteParity(benchmark::State& state) {
    Coloring f = parity(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto w = brute_thin_oracle(f, 1, 6);
        benchmark::DoNotOptimize(w);
    }
}

void BM_Extremal(benchmark::State& state) {
    for (auto _ : state) {
        int v = extremal_number(2, 2, 1, 3);
        benchmark::DoNotOptimize(v);
    }
}

BENCHMARK(BM_ThinParity)->Arg(16)->Arg(24)->Arg(32)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ThinResidue)->Arg(20)->Arg(30)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_BruteParity)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Extremal)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
