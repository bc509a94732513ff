// Serial reference vs OpenMP kernels on the two published sweeps.

#include <benchmark/benchmark.h>

#include "sprd/analysis.hpp"

namespace {

sprd::SweepConfig sweep(sprd::Axis axis) {
    sprd::SweepConfig c;
    c.axis = axis;
    c.fixed = axis == sprd::Axis::Time ? 64 : 256;
    c.refine_values = {32, 64, 128, 256};
    c.epsilons = sprd::default_epsilons();
    c.problem = sprd::example_problem();
    return c;
}

void BM_SweepSerial(benchmark::State& state) {
    const auto cfg = sweep(static_cast<sprd::Axis>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sprd::run_sweep_serial(cfg));
}

void BM_SweepParallel(benchmark::State& state) {
    const auto cfg = sweep(static_cast<sprd::Axis>(state.range(0)));
    const int jobs = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(sprd::run_sweep(cfg, jobs));
}

struct Pair {
    sprd::GridSolution coarse;
    sprd::GridSolution fine;
};

const Pair& space_pair() {
    static const Pair pair = [] {
        const auto p = sprd::example_problem(0x1p-14);
        auto solve = [&](int N) {
            return sprd::march(p, sprd::build_space_mesh(p.epsilon, p.alpha, N), sprd::build_time_mesh(p.T, 1024));
        };
        return Pair{solve(512), solve(1024)};
    }();
    return pair;
}

void BM_CoarseDifferenceSerial(benchmark::State& state) {
    const auto& p = space_pair();
    for (auto _ : state) benchmark::DoNotOptimize(sprd::max_coarse_difference_serial(p.coarse, p.fine));
}

void BM_CoarseDifferenceParallel(benchmark::State& state) {
    const auto& p = space_pair();
    for (auto _ : state) benchmark::DoNotOptimize(sprd::max_coarse_difference(p.coarse, p.fine));
}

}  // namespace

// range(0): 0 = time axis, 1 = space axis
BENCHMARK(BM_SweepSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->ArgsProduct({{0, 1}, {1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoarseDifferenceSerial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CoarseDifferenceParallel)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
