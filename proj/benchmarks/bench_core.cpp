#include <benchmark/benchmark.h>

#include "ringcoul/expand.hpp"
#include "ringcoul/grid.hpp"
#include "ringcoul/mesh.hpp"

using namespace ringcoul;

namespace {

void bench_density_point(benchmark::State& state) {
    const model::DensityEvaluator rho({5, 2, 1, 0.5, 1.0});
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(rho(x, 4.0, 2.5));
        x += 1e-6;
    }
}
BENCHMARK(bench_density_point);

void bench_legendre_real_order(benchmark::State& state) {
    const auto p = specfun::RealOrderLegendreParams::make(3.3166247903554, 4);
    double x = -0.9;
    for (auto _ : state) {
        benchmark::DoNotOptimize(specfun::legendre_real_order(p, x));
        x += 1e-7;
    }
}
BENCHMARK(bench_legendre_real_order);

void bench_sample_block(benchmark::State& state) {
    const grid::GridSpec spec{{3, 2, 1, 0.5, 1.0}, 41, 20.0};
    for (auto _ : state) {
        auto block = grid::sample_block(spec, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(block.rho_max);
    }
}
BENCHMARK(bench_sample_block)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void bench_marching_cubes(benchmark::State& state) {
    const grid::GridSpec spec{{3, 2, 1, 0.5, 1.0}, 81, 25.0};
    const auto block = grid::sample_block(spec, 4);
    for (auto _ : state) {
        auto mesh = grid::marching_cubes(block, 0.5 * block.rho_max, false);
        benchmark::DoNotOptimize(mesh.triangles.size());
    }
}
BENCHMARK(bench_marching_cubes)->Unit(benchmark::kMillisecond);

void bench_expansion_coefficient(benchmark::State& state) {
    const expand::AngularState st{1, 2, 10.0};
    for (auto _ : state) {
        auto c = expand::coefficient(3, 1, st);
        benchmark::DoNotOptimize(c.value);
    }
}
BENCHMARK(bench_expansion_coefficient)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
