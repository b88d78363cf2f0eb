#include <benchmark/benchmark.h>

#include "acs/corpus.hpp"
#include "acs/invariants.hpp"
#include "acs/spencer.hpp"

namespace {

void BM_SpencerDimensions(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const acs::RatMatrix j0 = acs::standard_structure(n);
    for (auto _ : state) benchmark::DoNotOptimize(acs::spencer_dimensions(j0));
}
BENCHMARK(BM_SpencerDimensions)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Rref(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    acs::SeededRng rng(1);
    acs::RatMatrix m = acs::zero_matrix(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = acs::Rational(rng.uniform(-5, 5));
    for (auto _ : state) benchmark::DoNotOptimize(acs::rref(m));
}
BENCHMARK(BM_Rref)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMicrosecond);

void BM_OmegaSymbolic(benchmark::State& state) {
    const auto degree = static_cast<std::size_t>(state.range(0));
    const acs::Acs s = acs::generate_gauge(2, degree, 7);
    for (auto _ : state) benchmark::DoNotOptimize(acs::omega_symbolic(s));
}
BENCHMARK(BM_OmegaSymbolic)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_NijenhuisSymbolic(benchmark::State& state) {
    const acs::Acs s = acs::generate_gauge(2, static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(acs::nijenhuis_symbolic(s));
}
BENCHMARK(BM_NijenhuisSymbolic)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_OmegaPipeline(benchmark::State& state) {
    acs::SeededRng rng(2);
    const acs::Jet1 jet = acs::random_j1pi_jet(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) {
        const acs::Hom1 h = acs::solve_horizontal(jet).particular;
        benchmark::DoNotOptimize(acs::omega_pipeline(jet, h));
    }
}
BENCHMARK(BM_OmegaPipeline)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
