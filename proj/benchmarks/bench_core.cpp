#include <benchmark/benchmark.h>

#include <random>

#include "conelab/conelab.hpp"

using namespace conelab;

static void BM_QuadRep(benchmark::State& state) {
    const auto alg = AlgebraDescriptor::sym2();
    std::mt19937_64 rng(1);
    const auto x = random_real(alg, rng), y = random_real(alg, rng);
    for (auto _ : state) benchmark::DoNotOptimize(quad_rep(quad_rep(x).apply(y)));
}
BENCHMARK(BM_QuadRep);

static void BM_SpectralDecompose(benchmark::State& state) {
    const auto alg = AlgebraDescriptor::sym2();
    std::mt19937_64 rng(2);
    const auto x = random_real(alg, rng);
    for (auto _ : state) benchmark::DoNotOptimize(spectral_decompose(x));
}
BENCHMARK(BM_SpectralDecompose);

static void BM_PknDecompose(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const auto g = random_su11(rng);
    for (auto _ : state) benchmark::DoNotOptimize(pkn_decompose(g));
}
BENCHMARK(BM_PknDecompose);

static void BM_BesselSeries(benchmark::State& state) {
    const double u = double(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(bessel_series(3.0, u));
}
BENCHMARK(BM_BesselSeries)->Arg(1)->Arg(10)->Arg(40);

static void BM_GammaConeQuadrature(benchmark::State& state) {
    const auto alg = AlgebraDescriptor::sym2();
    const ExponentVector s({3.0, 2.0});
    const auto p = GridProfile::named(state.range(0) ? "default" : "fast");
    for (auto _ : state) {
        const auto r = integrate_omega(
            [&](const JordanElement& x) {
                return std::exp(-jtrace(x).real()) * power_function(x, s) * std::pow(jdet(x).real(), -1.5);
            },
            alg, p);
        state.counters["evals"] = double(r.evaluations);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_GammaConeQuadrature)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_GnNorm(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(gn_norm_fn(3, 1.0));
}
BENCHMARK(BM_GnNorm)->Unit(benchmark::kMillisecond);

static void BM_FormalDimension(benchmark::State& state) {
    const auto v = JordanElement::unit(AlgebraDescriptor::rank_one());
    for (auto _ : state) benchmark::DoNotOptimize(formal_dimension_numeric(ExponentVector({4.0}), v));
}
BENCHMARK(BM_FormalDimension)->Unit(benchmark::kMillisecond);

static void BM_Orthogonality(benchmark::State& state) {
    const auto p = GridProfile::named("fast");
    for (auto _ : state) benchmark::DoNotOptimize(orthogonality_factorization(3, 1.0, p));
}
BENCHMARK(BM_Orthogonality)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
