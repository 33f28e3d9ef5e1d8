// Serial reference vs OpenMP Monte-Carlo kernels on the sanity preset.
#include "secrelay/config.hpp"
#include "secrelay/monte_carlo.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

#include <array>

namespace {

using namespace secrelay;

const SystemConfig& system_config() {
    static const SystemConfig cfg = sanity_preset().system;
    return cfg;
}

constexpr std::array kTargets{0.5, 1.0, 2.0, 4.0};

void BM_RateSerial(benchmark::State& state) {
    const auto mode = static_cast<mc::Mode>(state.range(0));
    const auto n = static_cast<std::uint64_t>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mc::serial::mc_avg_secrecy_rate(system_config(), mode, n, 1));
    }
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_RateParallel(benchmark::State& state) {
    const auto mode = static_cast<mc::Mode>(state.range(0));
    const auto n = static_cast<std::uint64_t>(state.range(1));
    omp_set_num_threads(static_cast<int>(state.range(2)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mc::mc_avg_secrecy_rate(system_config(), mode, n, 1));
    }
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_OutageSerial(benchmark::State& state) {
    const auto mode = static_cast<mc::Mode>(state.range(0));
    const auto n = static_cast<std::uint64_t>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mc::serial::mc_secrecy_outage(system_config(), kTargets, mode, n, 1));
    }
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_OutageParallel(benchmark::State& state) {
    const auto mode = static_cast<mc::Mode>(state.range(0));
    const auto n = static_cast<std::uint64_t>(state.range(1));
    omp_set_num_threads(static_cast<int>(state.range(2)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mc::mc_secrecy_outage(system_config(), kTargets, mode, n, 1));
    }
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

// range(0): 0 = ln_fit, 1 = composite; range(1): samples; range(2): threads.
BENCHMARK(BM_RateSerial)->ArgsProduct({{0, 1}, {1 << 18}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RateParallel)->ArgsProduct({{0, 1}, {1 << 18}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OutageSerial)->ArgsProduct({{0, 1}, {1 << 18}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OutageParallel)->ArgsProduct({{0, 1}, {1 << 18}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();

} // namespace

BENCHMARK_MAIN();
