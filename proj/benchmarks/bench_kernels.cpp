#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "fsl/grid.hpp"
#include "fsl/norms.hpp"
#include "fsl/region.hpp"
#include "fsl/stationary_phase.hpp"
#include "fsl/transform.hpp"

namespace {

fsl::cd gaussian(std::span<const double> x) {
    double s = 0.0;
    for (double c : x) s += c * c;
    return std::exp(-0.5 * s);
}

fsl::SampledField gaussian_line(std::size_t n) {
    return fsl::make_field(fsl::GridSpec::line(-20.0, 20.0, n), gaussian);
}

void FieldEvaluation(benchmark::State& state) {
    const fsl::GridSpec grid = fsl::GridSpec::line(-20.0, 20.0, std::size_t(state.range(0)));
    for (auto _ : state) {
        fsl::SampledField f = fsl::make_field(grid, gaussian);
        benchmark::DoNotOptimize(f.values.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(FieldEvaluation)->RangeMultiplier(4)->Range(1024, 65536)->Complexity();

void FastTransform1d(benchmark::State& state) {
    const fsl::SampledField f = gaussian_line(std::size_t(state.range(0)));
    for (auto _ : state) {
        fsl::SampledField g = fsl::fourier_fast(f);
        benchmark::DoNotOptimize(g.values.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(FastTransform1d)->RangeMultiplier(2)->Range(1024, 16384)->Complexity();

void FastTransform2d(benchmark::State& state) {
    const auto per_axis = std::size_t(state.range(0));
    const fsl::GridSpec grid =
        fsl::GridSpec::make({-10.0, -10.0}, {10.0, 10.0}, {per_axis, per_axis});
    const fsl::SampledField f = fsl::make_field(grid, gaussian);
    for (auto _ : state) {
        fsl::SampledField g = fsl::fourier_fast(f);
        benchmark::DoNotOptimize(g.values.data());
    }
    state.SetComplexityN(state.range(0) * state.range(0));
}
BENCHMARK(FastTransform2d)->RangeMultiplier(2)->Range(32, 128)->Complexity();

void DirectTransform(benchmark::State& state) {
    const fsl::SampledField f = gaussian_line(std::size_t(state.range(0)));
    fsl::PointList xi(1);
    for (int i = 0; i < 128; ++i) {
        const double value = -5.0 + 10.0 * double(i) / 127.0;
        xi.push(std::span<const double>(&value, 1));
    }
    for (auto _ : state) {
        std::vector<fsl::cd> g = fsl::fourier_direct(f, xi);
        benchmark::DoNotOptimize(g.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(DirectTransform)->RangeMultiplier(2)->Range(512, 4096)->Complexity();

void BallNorm(benchmark::State& state) {
    const fsl::SampledField f = gaussian_line(std::size_t(state.range(0)));
    const fsl::Region ball = fsl::Region::ball(1, 15.0);
    const fsl::LebesgueExponent p = fsl::LebesgueExponent::from_p(2.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fsl::lp_norm(f, p, ball));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BallNorm)->RangeMultiplier(4)->Range(1024, 65536)->Complexity();

void BoxChirpOracle(benchmark::State& state) {
    for (auto _ : state) {
        fsl::cd acc = 0.0;
        for (int i = 0; i < 64; ++i) {
            const double xi = -40.0 + 80.0 * double(i) / 63.0;
            acc += fsl::closed_form_box_chirp(-1.0, 1.0, 25.0, std::span<const double>(&xi, 1));
        }
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BoxChirpOracle);

void StationaryQuadrature(benchmark::State& state) {
    const double N = double(state.range(0));
    const fsl::QuadraticPhase phase = fsl::make_quadratic_phase(N, {0.5 * N});
    const fsl::GridSpec grid = fsl::recommended_ball_grid(phase);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fsl::ball_quadrature(phase, grid));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(StationaryQuadrature)->RangeMultiplier(2)->Range(8, 64)->Complexity();

}  // namespace

BENCHMARK_MAIN();
