#include <benchmark/benchmark.h>

#include "nessfi/liouvillian.hpp"
#include "nessfi/metrology.hpp"
#include "nessfi/observables.hpp"
#include "nessfi/sweep.hpp"

namespace {

const nessfi::SystemParams kParams{1.0, 1.0, 0.005, 0.002, 0.002};
const nessfi::BathParams kBaths{0.2, 0.8, 0.5, 0.5};

void BM_BuildLiouvillian(benchmark::State& state) {
    const auto basis = nessfi::diagonalize(kParams);
    for (auto _ : state) {
        benchmark::DoNotOptimize(nessfi::build_liouvillian(basis, kBaths, kParams));
    }
}
BENCHMARK(BM_BuildLiouvillian);

void BM_SteadyState(benchmark::State& state) {
    const auto l = nessfi::build_liouvillian(kParams, kBaths);
    for (auto _ : state) benchmark::DoNotOptimize(nessfi::steady_state(l));
}
BENCHMARK(BM_SteadyState);

void BM_QfiSpectral(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(nessfi::qfi_spectral(kParams, kBaths));
}
BENCHMARK(BM_QfiSpectral);

void BM_QfiFidelityOracle(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(nessfi::qfi_fidelity_oracle(kParams, kBaths));
}
BENCHMARK(BM_QfiFidelityOracle);

void BM_Discord(benchmark::State& state) {
    const auto rho = nessfi::steady_state(nessfi::build_liouvillian(kParams, kBaths)).rho;
    nessfi::DiscordOptions opts;
    opts.grid = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(nessfi::discord(rho, opts));
}
BENCHMARK(BM_Discord)->Arg(20)->Arg(40);

void BM_EvaluatePoint(benchmark::State& state) {
    const nessfi::SweepSpec spec;
    for (auto _ : state) benchmark::DoNotOptimize(nessfi::evaluate_point(kParams, kBaths, spec));
}
BENCHMARK(BM_EvaluatePoint);

} // namespace

BENCHMARK_MAIN();
