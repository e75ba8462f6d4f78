#include <benchmark/benchmark.h>

#include "tenslab/matmul.hpp"
#include "tenslab/rng.hpp"

namespace {

using namespace tenslab;

DenseMatrix<double> random_matrix(int n, std::uint64_t seed) {
    Rng rng(seed);
    DenseMatrix<double> m(n, n);
    for (auto& x : m.a) x = 2.0 * rng.uniform_real() - 1.0;
    return m;
}

void BM_classical(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto A = random_matrix(n, 1), B = random_matrix(n, 2);
    for (auto _ : state) {
        auto [C, st] = classical_mul(A, B);
        benchmark::DoNotOptimize(C.a.data());
    }
}
BENCHMARK(BM_classical)->Arg(64)->Arg(128)->Arg(256);

void BM_strassen(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto A = random_matrix(n, 1), B = random_matrix(n, 2);
    const auto base = catalog("strassen-2x2");
    for (auto _ : state) {
        auto [C, st] = recursive_mul(A, B, base, 64);
        benchmark::DoNotOptimize(C.a.data());
    }
}
BENCHMARK(BM_strassen)->Arg(64)->Arg(128)->Arg(256);

void BM_strassen_threads(benchmark::State& state) {
    const int n = 256;
    auto A = random_matrix(n, 1), B = random_matrix(n, 2);
    const auto base = catalog("strassen-2x2");
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto [C, st] = recursive_mul(A, B, base, 64, threads);
        benchmark::DoNotOptimize(C.a.data());
    }
}
BENCHMARK(BM_strassen_threads)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
