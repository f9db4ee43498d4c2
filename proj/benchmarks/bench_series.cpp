#include <benchmark/benchmark.h>

#include "degen/series.hpp"

using namespace degen;

namespace {

TruncatedSeries<LambdaPoly> shifted_exponential(int order) {
    TruncatedSeries<LambdaPoly> s = exp_deg_series<LambdaPoly>(lp_const(Rational(1)), order);
    s.set_coeff(0, LambdaPoly());
    return s;
}

void BM_ExpSeries(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(exp_deg_series<LambdaPoly>(lp_const(Rational(1)), order));
    }
}
BENCHMARK(BM_ExpSeries)->Arg(8)->Arg(16)->Arg(32);

void BM_ExpSeriesTower(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(exp_deg_series<MultiPoly>(mp_x(), order));
    }
}
BENCHMARK(BM_ExpSeriesTower)->Arg(8)->Arg(16);

void BM_SeriesMul(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    TruncatedSeries<LambdaPoly> a = shifted_exponential(order);
    TruncatedSeries<LambdaPoly> b = deg_log_series(order);
    for (auto _ : state) {
        benchmark::DoNotOptimize(series_mul(a, b));
    }
}
BENCHMARK(BM_SeriesMul)->Arg(8)->Arg(16)->Arg(32);

void BM_SeriesDiv(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    TruncatedSeries<LambdaPoly> num = log1p_scaled_series(order);
    TruncatedSeries<LambdaPoly> den = shifted_exponential(order);
    for (auto _ : state) {
        benchmark::DoNotOptimize(series_div(num, den));
    }
}
BENCHMARK(BM_SeriesDiv)->Arg(8)->Arg(16)->Arg(32);

void BM_SeriesCompose(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    TruncatedSeries<LambdaPoly> outer = deg_log_series(order);
    TruncatedSeries<LambdaPoly> inner = shifted_exponential(order);
    for (auto _ : state) {
        benchmark::DoNotOptimize(series_compose(outer, inner));
    }
}
BENCHMARK(BM_SeriesCompose)->Arg(8)->Arg(16);

void BM_Polylog(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(deg_polylog_series(-3, order));
    }
}
BENCHMARK(BM_Polylog)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
