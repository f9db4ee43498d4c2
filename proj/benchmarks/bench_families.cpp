#include <benchmark/benchmark.h>

#include "degen/bernoulli.hpp"
#include "degen/identity.hpp"
#include "degen/poly_bernoulli.hpp"
#include "degen/stirling.hpp"

using namespace degen;

namespace {

void BM_StirlingRow(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        for (int k = 0; k <= n; ++k) {
            benchmark::DoNotOptimize(stirling2_deg(n, k));
        }
    }
}
BENCHMARK(BM_StirlingRow)->Arg(8)->Arg(12)->Arg(16);

void BM_StirlingPoly(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(stirling_poly(n, n / 2));
    }
}
BENCHMARK(BM_StirlingPoly)->Arg(6)->Arg(10);

void BM_BetaNumber(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(beta_deg_number(n));
    }
}
BENCHMARK(BM_BetaNumber)->Arg(6)->Arg(10);

void BM_BetaGfRow(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(beta_deg_gf(n, BetaMode::symbolic_x));
    }
}
BENCHMARK(BM_BetaGfRow)->Arg(6)->Arg(10);

void BM_Fubini(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fubini_deg(n));
    }
}
BENCHMARK(BM_Fubini)->Arg(6)->Arg(10);

void BM_PolyBernoulliGf(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(poly_bernoulli_gf(-3, n));
    }
}
BENCHMARK(BM_PolyBernoulliGf)->Arg(6)->Arg(8);

void BM_IdentityCase(benchmark::State& state) {
    SweepOverrides o;
    o.n_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_identity("eq7", o));
    }
}
BENCHMARK(BM_IdentityCase)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
