#include "asianq/cases.hpp"
#include "asianq/mc.hpp"
#include "asianq/pricer.hpp"
#include "asianq/quadrature.hpp"
#include "asianq/specfun.hpp"

#include <benchmark/benchmark.h>

using namespace asianq;

static void BM_LaguerreRule(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gauss_laguerre_rule(n));
}
BENCHMARK(BM_LaguerreRule)->Arg(64)->Arg(200)->Arg(512)->Unit(benchmark::kMicrosecond);

static void BM_WhittakerW(benchmark::State& state) {
    const double z = static_cast<double>(state.range(0));
    double p = 0.0;
    for (auto _ : state) {
        p = p > 20.0 ? 0.1 : p + 0.37;
        benchmark::DoNotOptimize(whittaker_w({-1.2, {0.0, p}}, z));
    }
}
BENCHMARK(BM_WhittakerW)->Arg(2)->Arg(22)->Arg(200);

static void BM_BesselKImag(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0)) / 10.0;
    double p = 0.0;
    for (auto _ : state) {
        p = p > 30.0 ? 0.05 : p + 0.61;
        benchmark::DoNotOptimize(bessel_k_imag(p, x));
    }
}
BENCHMARK(BM_BesselKImag)->Arg(5)->Arg(10)->Arg(50);

static void BM_PriceCase(benchmark::State& state) {
    const MarketParams m = case_params(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(price(m));
}
BENCHMARK(BM_PriceCase)->Arg(1)->Arg(2)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_TrapezoidCase2(benchmark::State& state) {
    const MarketParams m = case_params(2);
    for (auto _ : state) benchmark::DoNotOptimize(price(m, Method::trapezoid, 20000));
}
BENCHMARK(BM_TrapezoidCase2)->Unit(benchmark::kMillisecond);

static void BM_MonteCarloSmall(benchmark::State& state) {
    McConfig cfg;
    cfg.paths = 20000;
    cfg.steps = 250;
    const MarketParams m = case_params(5);
    for (auto _ : state) benchmark::DoNotOptimize(simulate_asian_pair(m, cfg));
    state.SetItemsProcessed(state.iterations() * cfg.paths * cfg.steps);
}
BENCHMARK(BM_MonteCarloSmall)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
