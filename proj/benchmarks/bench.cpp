#include <benchmark/benchmark.h>

#include "novikov/catalog.hpp"
#include "novikov/series.hpp"

using namespace novikov;

namespace {

ProjectivePoint pt(long x, long y) { return {Rational(x), Rational(y)}; }

void BM_EmbedIdentities(benchmark::State& state) {
    const auto ids = novikov_identities();
    for (auto _ : state) {
        for (const auto& f : ids) benchmark::DoNotOptimize(embed(f));
    }
}
BENCHMARK(BM_EmbedIdentities);

// Closure of the two-dimensional-module family up to the given arity.
void BM_BuildIdealTwoDim(benchmark::State& state) {
    const auto gens = family_generators(Family::Q, {{}, pt(1, 2)}).embedded;
    for (auto _ : state) benchmark::DoNotOptimize(build_ideal(gens, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildIdealTwoDim)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
    const IdealBasis ideal = build_ideal(family_generators(Family::P, {pt(1, 1), {}}).embedded, 5);
    for (auto _ : state) benchmark::DoNotOptimize(decompose(ideal, 5));
}
BENCHMARK(BM_Decompose)->Unit(benchmark::kMillisecond);

void BM_CompleteNovikov(benchmark::State& state) {
    Presentation p;
    p.relations = polarized_novikov_presentation();
    const RewriteSystem rs = to_rewrite_system(p);
    for (auto _ : state) {
        benchmark::DoNotOptimize(complete(rs, CompletionOptions{static_cast<int>(state.range(0)), 5000, 1}));
    }
}
BENCHMARK(BM_CompleteNovikov)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

void BM_IsGroebnerListed(benchmark::State& state) {
    const RewriteSystem rs = gb_system(GbSystem::q_1_0);
    for (auto _ : state) benchmark::DoNotOptimize(is_groebner(rs, 5));
}
BENCHMARK(BM_IsGroebnerListed)->Unit(benchmark::kMillisecond);

void BM_CompInverse(benchmark::State& state) {
    const RationalSeries f = from_dims([](int n) { return n <= 2 ? long(n) : long(n + 1); }, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(comp_inverse(f));
}
BENCHMARK(BM_CompInverse)->RangeMultiplier(2)->Range(8, 32);

void BM_WeightedInverse(benchmark::State& state) {
    const PolySeries f = parse_series("t + (1/2 + 1/2 u) t^2 + (1/6 + 1/6 u) t^3", 20);
    for (auto _ : state) benchmark::DoNotOptimize(weighted_inverse_coeff(f, 20, 2));
}
BENCHMARK(BM_WeightedInverse)->Unit(benchmark::kMillisecond);

void BM_KoszulDual(benchmark::State& state) {
    const QuadraticPresentation nov = novikov_relation_space();
    for (auto _ : state) benchmark::DoNotOptimize(koszul_dual(nov));
}
BENCHMARK(BM_KoszulDual);

void BM_LatticeReport(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(lattice_report({pt(1, -1), pt(1, 0)}, 5, 1));
}
BENCHMARK(BM_LatticeReport)->Unit(benchmark::kMillisecond);

void BM_VerifyAll(benchmark::State& state) {
    VerifyConfig config;
    config.jobs = 1;
    for (auto _ : state) benchmark::DoNotOptimize(verify_all(config));
}
BENCHMARK(BM_VerifyAll)->Unit(benchmark::kMillisecond)->Iterations(1);

} // namespace
BENCHMARK_MAIN();
