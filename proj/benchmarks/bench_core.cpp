#include <benchmark/benchmark.h>

#include "bohrlab/families.hpp"
#include "bohrlab/harmonic.hpp"
#include "bohrlab/oracle.hpp"
#include "bohrlab/props.hpp"
#include "bohrlab/quasisub.hpp"
#include "bohrlab/radii.hpp"

namespace {

using namespace bohr;

void BM_CauchyProduct(benchmark::State& state)
{
    const auto order = static_cast<std::size_t>(state.range(0));
    const auto f = random_blaschke(4, 1, order);
    const auto g = random_blaschke(3, 2, order);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cauchy_product(f, g));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CauchyProduct)->RangeMultiplier(2)->Range(32, 512)->Complexity(benchmark::oNSquared);

void BM_ComposePolynomial(benchmark::State& state)
{
    const auto order = static_cast<std::size_t>(state.range(0));
    const auto g = fejer_mean(random_blaschke(3, 3, order), 8);
    const auto w = shift_up(random_blaschke(2, 4, order - 1), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compose(g, w));
    }
}
BENCHMARK(BM_ComposePolynomial)->Arg(100)->Arg(200)->Arg(400);

void BM_ComposeFull(benchmark::State& state)
{
    const auto order = static_cast<std::size_t>(state.range(0));
    const auto g = random_blaschke(3, 3, order);
    const auto w = Complex(0.5) * shift_up(random_blaschke(2, 4, order - 1), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compose(g, w));
    }
}
BENCHMARK(BM_ComposeFull)->Arg(50)->Arg(100)->Arg(200);

void BM_MajorantWithTail(benchmark::State& state)
{
    const auto t = random_quasi_triple(7);
    const auto f = quasi_compose(t.phi_series(kDefaultOrder), t.g, t.w_series(kDefaultOrder));
    for (auto _ : state) {
        benchmark::DoNotOptimize(majorant_sum(f, 0.33));
    }
}
BENCHMARK(BM_MajorantWithTail);

void BM_HeadRadius(benchmark::State& state)
{
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(head_radius(1.5, x));
        x = x < 0.99 ? x + 0.01 : 0.0;
    }
}
BENCHMARK(BM_HeadRadius);

void BM_HarmonicRadius(benchmark::State& state)
{
    const RadiusParams params{1.5, 0.5, 2, 0.6};
    for (auto _ : state) {
        benchmark::DoNotOptimize(harmonic_radius(params));
    }
}
BENCHMARK(BM_HarmonicRadius);

void BM_ExtremalCrossover(benchmark::State& state)
{
    const RadiusParams params{1.0, 1.0, 1, 0.5};
    for (auto _ : state) {
        benchmark::DoNotOptimize(extremal_crossover(params, 0.0, 0.6));
    }
}
BENCHMARK(BM_ExtremalCrossover)->Unit(benchmark::kMillisecond);

void BM_DftCoefficients(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto b = random_blaschke_product(5, 11);
    const Evaluator f = [&b](LongComplex z) { return b(z); };
    for (auto _ : state) {
        benchmark::DoNotOptimize(dft_coefficients(f, 0.7, n));
    }
}
BENCHMARK(BM_DftCoefficients)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
