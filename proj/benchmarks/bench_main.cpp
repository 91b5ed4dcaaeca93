#include <benchmark/benchmark.h>

#include "hdconc/metrics.hpp"
#include "hdconc/pca.hpp"
#include "hdconc/random.hpp"

namespace {

using namespace hdconc;

void BM_Minkowski(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const double k = static_cast<double>(state.range(1));
    const Dataset data = generate_uniform(2, dim, UniformSpec(0.0, 1.0, 1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(minkowski_distance(data.sample(0), data.sample(1), k));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(dim));
}
BENCHMARK(BM_Minkowski)->ArgsProduct({{64, 1024, 16384}, {1, 2, 3}});

void BM_Chebyshev(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const Dataset data = generate_uniform(2, dim, UniformSpec(0.0, 1.0, 2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(chebyshev_distance(data.sample(0), data.sample(1)));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(dim));
}
BENCHMARK(BM_Chebyshev)->Arg(64)->Arg(1024)->Arg(16384);

void BM_PairwiseCosine(benchmark::State& state) {
    const Dataset data = generate_uniform(static_cast<std::size_t>(state.range(0)), 256, UniformSpec(-1.0, 1.0, 3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pairwise_cosine_stats(data));
    }
}
BENCHMARK(BM_PairwiseCosine)->Arg(50)->Arg(200);

void BM_Jacobi(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const CovarianceMatrix c = covariance(generate_uniform(2 * d, d, UniformSpec(0.0, 1.0, 4)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(eigen_symmetric(c));
    }
}
BENCHMARK(BM_Jacobi)->Arg(16)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_SpectrumHdlss(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Dataset data = generate_uniform(n, 1000, UniformSpec(0.0, 1.0, 5));
    for (auto _ : state) {
        benchmark::DoNotOptimize(spectrum_hdlss(data));
    }
}
BENCHMARK(BM_SpectrumHdlss)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
