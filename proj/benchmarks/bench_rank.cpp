#include <benchmark/benchmark.h>
#include <sph/linalg.hpp>
#include <random>

using namespace sph;

namespace {

QMat random_matrix(std::size_t rows, std::size_t cols, long height, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-height, height);
    std::uniform_int_distribution<long> den(1, height);
    QMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rat(num(rng), den(rng));
    return m;
}

void bm_rank_modular_first(benchmark::State& state) {
    QMat m = random_matrix(255, 512, 7, 0xfeedbeef);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(bm_rank_modular_first)->Unit(benchmark::kMillisecond);

void bm_rank_exact(benchmark::State& state) {
    QMat m = random_matrix(64, 128, 7, 0xfeedbeef);
    for (auto _ : state) benchmark::DoNotOptimize(rank_exact(m));
}
BENCHMARK(bm_rank_exact)->Unit(benchmark::kMillisecond);

void bm_rank_mod_p(benchmark::State& state) {
    QMat m = random_matrix(255, 512, 7, 0xfeedbeef);
    for (auto _ : state) benchmark::DoNotOptimize(rank_mod_p(m, 1073741789ull));
}
BENCHMARK(bm_rank_mod_p)->Unit(benchmark::kMillisecond);

void bm_signature(benchmark::State& state) {
    QMat a = random_matrix(60, 60, 5, 0x1234);
    QMat s = a.transpose() * a;
    for (auto _ : state) benchmark::DoNotOptimize(signature(s));
}
BENCHMARK(bm_signature)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
