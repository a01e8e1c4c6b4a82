#include <benchmark/benchmark.h>

#include <random>

#include "hirota/calculus.hpp"
#include "hirota/identities.hpp"
#include "hirota/trace_solution.hpp"

namespace {

using namespace hirota;

SolitonSet make_set(std::size_t n) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> re(0.3, 1.5), im(-1.0, 1.0), mag(0.5, 2.0), ph(0.0, 6.283185307179586);
    std::vector<Soliton> out;
    for (std::size_t k = 0; k < n; ++k) out.push_back({cplx{re(rng) + 0.2 * k, im(rng)}, std::polar(mag(rng), ph(rng))});
    return SolitonSet(std::move(out));
}

const Medium kMedium(1.0, 0.5, 8.0);

void BM_EvalPsiClosed(benchmark::State& state) {
    const SolitonSet set = make_set(static_cast<std::size_t>(state.range(0)));
    double x = -5.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_psi_closed(set, kMedium, {x, 0.3}));
        x = x > 5.0 ? -5.0 : x + 0.01;
    }
}
BENCHMARK(BM_EvalPsiClosed)->DenseRange(1, 4);

void BM_EvalPsiDirect(benchmark::State& state) {
    const SolitonSet set = make_set(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(eval_psi_direct(set, kMedium, {0.2, 0.3}));
}
BENCHMARK(BM_EvalPsiDirect)->DenseRange(1, 4);

void BM_AnalyticDerivatives(benchmark::State& state) {
    const SolitonSet set = make_set(static_cast<std::size_t>(state.range(0)));
    double x = -5.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(analytic_derivatives(set, kMedium, {x, 0.3}));
        x = x > 5.0 ? -5.0 : x + 0.01;
    }
}
BENCHMARK(BM_AnalyticDerivatives)->DenseRange(1, 4);

void BM_SeriesPartialSums(benchmark::State& state) {
    const SolitonSet set = make_set(3);
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(series_partial_sums(set, kMedium, {-3.0, 0.0}, order));
}
BENCHMARK(BM_SeriesPartialSums)->Arg(5)->Arg(20)->Arg(80);

void BM_SeriesTerm(benchmark::State& state) {
    const SolitonSet set = make_set(2);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(series_term(set, kMedium, {-1.0, 0.0}, n));
}
BENCHMARK(BM_SeriesTerm)->DenseRange(0, 2);

void BM_IdentitySuite(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(run_identity_suite(3, 10, 42));
}
BENCHMARK(BM_IdentitySuite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
