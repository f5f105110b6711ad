// Serial versus OpenMP kernels for F_p elimination and products.

#include <benchmark/benchmark.h>

#include <random>

#include "foulkes/fp_matrix.hpp"

using foulkes::fp::FpMatrix;
namespace fp = foulkes::fp;

namespace {

FpMatrix random_matrix(int p, int rows, int cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(0, p - 1);
    FpMatrix m(p, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.set(r, c, entry(rng));
    return m;
}

void BM_rref_serial(benchmark::State& state) {
    const auto m = random_matrix(3, static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(fp::serial::rref(m));
}

void BM_rref_parallel(benchmark::State& state) {
    const auto m = random_matrix(3, static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(fp::parallel::rref(m));
}

void BM_matmul_serial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto a = random_matrix(32749, n, n, 2);
    const auto b = random_matrix(32749, n, n, 3);
    for (auto _ : state) benchmark::DoNotOptimize(fp::serial::matmul(a, b));
}

void BM_matmul_parallel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto a = random_matrix(32749, n, n, 2);
    const auto b = random_matrix(32749, n, n, 3);
    for (auto _ : state) benchmark::DoNotOptimize(fp::parallel::matmul(a, b));
}

}  // namespace

BENCHMARK(BM_rref_serial)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_rref_parallel)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_matmul_serial)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_matmul_parallel)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
