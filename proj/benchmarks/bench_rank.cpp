#include <benchmark/benchmark.h>

#include "tenslab/matrix.hpp"
#include "tenslab/rng.hpp"
#include "tenslab/varieties.hpp"

namespace {

using namespace tenslab;

void BM_exact_rank(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Rng rng(7);
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Rat(rng.uniform(-9, 9));
    for (auto _ : state) benchmark::DoNotOptimize(m.rank());
}
BENCHMARK(BM_exact_rank)->Arg(16)->Arg(48)->Arg(96);

void BM_terracini_segre444(benchmark::State& state) {
    const auto v = VarietySpec::segre({4, 4, 4});
    for (auto _ : state) {
        auto rep = secant_dim(v, 7, 1, 0);
        benchmark::DoNotOptimize(rep.observed);
    }
}
BENCHMARK(BM_terracini_segre444);

}  // namespace

BENCHMARK_MAIN();
