#include <benchmark/benchmark.h>

#include "rsa/kernels.hpp"
#include "rsa/ldf.hpp"
#include "rsa/sim.hpp"

namespace {

struct EmptySpaceInput {
    std::vector<double> z, cz;
    std::size_t m1;
};

EmptySpaceInput empty_space_input(double L_max, std::size_t m1) {
    const auto d = rsa::LengthDistribution::power_law(1.0);
    const auto n = static_cast<std::size_t>(L_max * m1);
    EmptySpaceInput in{std::vector<double>(n + 1), std::vector<double>(n + 1), m1};
    for (std::size_t j = 0; j <= n; ++j) {
        in.z[j] = d.normalizing_constant(static_cast<double>(j) / m1);
        in.cz[j] = d.cumulative_Z(static_cast<double>(j) / m1);
    }
    return in;
}

void BM_EmptySpaceReference(benchmark::State& state) {
    const auto in = empty_space_input(static_cast<double>(state.range(0)), 32);
    for (auto _ : state) benchmark::DoNotOptimize(rsa::kernels::empty_space_reference(in.z, in.cz, in.m1));
}

void BM_EmptySpaceParallel(benchmark::State& state) {
    const auto in = empty_space_input(static_cast<double>(state.range(0)), 32);
    for (auto _ : state) benchmark::DoNotOptimize(rsa::kernels::empty_space_parallel(in.z, in.cz, in.m1));
}

std::vector<double> ramp(std::size_t n) {
    std::vector<double> e(n + 1);
    for (std::size_t i = 0; i <= n; ++i) e[i] = 0.3 * static_cast<double>(i) / 100.0;
    return e;
}

void BM_SelfConvolutionReference(benchmark::State& state) {
    const auto e = ramp(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rsa::kernels::self_convolution_reference(e, e, 0.01));
}

void BM_SelfConvolutionParallel(benchmark::State& state) {
    const auto e = ramp(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rsa::kernels::self_convolution_parallel(e, e, 0.01));
}

void BM_MonteCarloSerial(benchmark::State& state) {
    const rsa::McSpec spec{rsa::LengthDistribution::power_law(1.0), rsa::Process::Rsa, 200.0, {}};
    for (auto _ : state) benchmark::DoNotOptimize(rsa::monte_carlo_serial(spec, state.range(0), 1));
}

void BM_MonteCarloParallel(benchmark::State& state) {
    const rsa::McSpec spec{rsa::LengthDistribution::power_law(1.0), rsa::Process::Rsa, 200.0, {}};
    for (auto _ : state) benchmark::DoNotOptimize(rsa::monte_carlo(spec, state.range(0), 1));
}

}  // namespace

BENCHMARK(BM_EmptySpaceReference)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EmptySpaceParallel)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SelfConvolutionReference)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SelfConvolutionParallel)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MonteCarloSerial)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarloParallel)->Arg(20000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
