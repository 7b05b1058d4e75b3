#include <benchmark/benchmark.h>

#include <random>

#include "cesaro/norms.hpp"
#include "cesaro/witness.hpp"

namespace {

using namespace cesaro;

SampledFunction random_function(std::size_t n, std::uint64_t seed) {
    auto grid = make_grid(1.0, n, GridScheme::GeometricNearZero, 1e-6,
                          1.0 - 1e-5);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> val(0.0, 2.0);
    std::vector<double> v(n);
    for (auto& x : v) x = val(rng);
    return SampledFunction{std::move(grid), std::move(v)};
}

void BM_EssentialMajorant(benchmark::State& state) {
    const auto f = random_function(static_cast<std::size_t>(state.range(0)), 7);
    const PsiTransform psi(WeightSpec::power(-1.0, 2.0, 1.0));
    for (auto _ : state) {
        auto m = essential_majorant(f, psi);
        benchmark::DoNotOptimize(m);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EssentialMajorant)->RangeMultiplier(4)->Range(1000, 64000)->Complexity();

void BM_DualNorm(benchmark::State& state) {
    const auto f = random_function(static_cast<std::size_t>(state.range(0)), 11);
    const auto w = WeightSpec::power(-1.0, 2.0, 1.0);
    for (auto _ : state) {
        auto r = dual_norm(f, w);
        benchmark::DoNotOptimize(r);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DualNorm)->RangeMultiplier(4)->Range(1000, 64000)->Complexity();

void BM_CesaroNorm(benchmark::State& state) {
    const auto f = random_function(static_cast<std::size_t>(state.range(0)), 13);
    const auto w = WeightSpec::power(-1.0, 2.0, 1.0);
    for (auto _ : state) {
        auto r = cesaro_norm(f, w);
        benchmark::DoNotOptimize(r);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CesaroNorm)->RangeMultiplier(4)->Range(1000, 64000)->Complexity();

void BM_NearOptimizer(benchmark::State& state) {
    const auto grid = make_grid(1.0, 10000, GridScheme::GeometricNearZero,
                                1e-6, 1.0 - 1e-5);
    const auto f = sample(grid, [](double x) { return 1.0 - x; });
    const auto w = WeightSpec::power(-1.0, 2.0, 1.0);
    for (auto _ : state) {
        auto r = near_optimizer(f, w, 0.1);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_NearOptimizer);

} // namespace

BENCHMARK_MAIN();
