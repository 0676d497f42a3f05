#include <cmath>

#include <benchmark/benchmark.h>

#include "fracbateman/fracbateman.hpp"

namespace fb = fracbateman;

namespace {

fb::BatemanParams params(double alpha) {
    fb::BatemanParams p;
    p.order = fb::FractionalOrder(alpha);
    p.damping = 0.5;
    return p;
}

void BM_OracleSpectrum(benchmark::State& state) {
    const auto p = params(0.9);
    fb::EigensolverSpec spec;
    spec.nodes = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fb::oracle_spectrum(p, 3, spec));
    }
}
BENCHMARK(BM_OracleSpectrum)->Arg(1000)->Arg(4000)->Arg(16000)->Unit(benchmark::kMillisecond);

void BM_PaperEigenfunction(benchmark::State& state) {
    const auto p = params(0.85);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fb::eigenfunction_paper(p, n));
    }
}
BENCHMARK(BM_PaperEigenfunction)->DenseRange(1, 9, 4);

void BM_DifferentiateN(benchmark::State& state) {
    const auto e = fb::PolyExpSum::term(1.0, 2.3, -1.2, 1.7);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fb::differentiate_n(e, n));
    }
}
BENCHMARK(BM_DifferentiateN)->Arg(2)->Arg(8)->Arg(16);

void BM_Normalization(benchmark::State& state) {
    const auto p = params(0.8);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fb::normalization_constant(p, n));
    }
}
BENCHMARK(BM_Normalization)->Arg(0)->Arg(3)->Unit(benchmark::kMicrosecond);

void BM_ConformableSecondDerivative(benchmark::State& state) {
    const auto g = fb::Grid1D::uniform(0.1, 10.0, static_cast<std::size_t>(state.range(0)));
    const auto f = fb::SampledField::sample_real(g, [](double t) { return std::cos(t); });
    const fb::FractionalOrder order(0.9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fb::conformable_second_derivative(f, order));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ConformableSecondDerivative)->Arg(2000)->Arg(20000);

void BM_Fig3Table(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(fb::figure_data(fb::Figure::fig3));
    }
}
BENCHMARK(BM_Fig3Table)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
