#include <benchmark/benchmark.h>

#include <vector>

#include "stabledrift/asymptotics.hpp"
#include "stabledrift/estimators.hpp"
#include "stabledrift/kernel.hpp"
#include "stabledrift/sde.hpp"
#include "stabledrift/stable.hpp"

namespace sd = stabledrift;

namespace {

void BM_sample_standard_stable(benchmark::State& state) {
    const double alpha = state.range(0) / 10.0;
    sd::RngStream rng(1, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(sd::sample_standard_stable(alpha, 0.3, rng));
}
BENCHMARK(BM_sample_standard_stable)->Arg(13)->Arg(15)->Arg(20);

void BM_levy_path(benchmark::State& state) {
    const sd::TimeGrid grid(2.0, static_cast<std::size_t>(state.range(0)));
    std::uint64_t stream = 0;
    for (auto _ : state) {
        sd::RngStream rng(2, stream++);
        benchmark::DoNotOptimize(sd::simulate_levy_path(1.5, 0.0, grid, rng));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_levy_path)->Arg(1 << 10)->Arg(1 << 13)->Arg(1 << 16);

void BM_simulate_sde(benchmark::State& state) {
    sd::SdeConfig cfg;
    cfg.multiplier = sd::sine_multiplier(1.0, 1.0);
    cfg.x0 = 1.0;
    cfg.eps = 0.1;
    cfg.alpha = 1.5;
    cfg.grid = sd::TimeGrid(2.0, static_cast<std::size_t>(state.range(0)));
    std::uint64_t stream = 0;
    for (auto _ : state) {
        sd::RngStream rng(3, stream++);
        benchmark::DoNotOptimize(sd::simulate_sde(cfg, rng));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_simulate_sde)->Arg(1 << 12)->Arg(1 << 14);

void BM_estimate_drift(benchmark::State& state) {
    sd::SdeConfig cfg;
    cfg.multiplier = sd::sine_multiplier(1.0, 1.0);
    cfg.x0 = 1.0;
    cfg.eps = 0.05;
    cfg.alpha = 1.5;
    cfg.grid = sd::TimeGrid(2.0, 1 << 15);
    sd::RngStream rng(4, 0);
    const sd::SdePaths paths = sd::simulate_sde(cfg, rng);
    const sd::Kernel g = sd::make_kernel(1, sd::KernelFamily::epanechnikov);
    for (auto _ : state)
        benchmark::DoNotOptimize(sd::estimate_drift(paths.x, g, 0.1, 1.0));
}
BENCHMARK(BM_estimate_drift);

void BM_ks_two_sample(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    sd::RngStream rng(5, 0);
    std::vector<double> a(n), b(n);
    for (double& x : a)
        x = sd::sample_standard_stable(1.5, 0.0, rng);
    for (double& x : b)
        x = sd::sample_standard_stable(1.5, 0.0, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(sd::ks_two_sample(a, b));
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_ks_two_sample)->Arg(1 << 12)->Arg(1 << 14);

void BM_kernel_alpha_integrals(benchmark::State& state) {
    const sd::Kernel g = sd::make_kernel(2, sd::KernelFamily::polynomial);
    for (auto _ : state)
        benchmark::DoNotOptimize(sd::kernel_alpha_integrals(g, 1.5));
}
BENCHMARK(BM_kernel_alpha_integrals);

} // namespace

BENCHMARK_MAIN();
