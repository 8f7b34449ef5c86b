#include <benchmark/benchmark.h>

#include "rankbound/bound.hpp"
#include "rankbound/kernels.hpp"
#include "rankbound/mollifier.hpp"
#include "rankbound/special.hpp"
#include "rankbound/testfn.hpp"

using namespace rankbound;

static void BM_ExpE(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0)) / 100.0;
    for (auto _ : state) benchmark::DoNotOptimize(exp_e(x));
}
BENCHMARK(BM_ExpE)->Arg(1)->Arg(50)->Arg(100)->Arg(500)->Arg(5000);

static void BM_ExpEQuadrature(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(exp_e_quadrature(1.5).value);
}
BENCHMARK(BM_ExpEQuadrature);

static void BM_BigF(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(big_f(0.48, 0.7));
}
BENCHMARK(BM_BigF);

static void BM_GTransform(benchmark::State& state) {
    const Measure m = limit_measure(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(g_psi(0.48, m).value);
}
BENCHMARK(BM_GTransform)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

static void BM_BoundAtPoint(benchmark::State& state) {
    const BoundConstants c = bound_constants();
    for (auto _ : state) benchmark::DoNotOptimize(h_of_a(0.48, 0.5, c).H);
}
BENCHMARK(BM_BoundAtPoint)->Unit(benchmark::kMillisecond);

static void BM_Minimize(benchmark::State& state) {
    ScanOptions opts;
    opts.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(minimize(0.5, 0.3, 0.7, 0.01, opts).a_star);
}
BENCHMARK(BM_Minimize)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_SSums(benchmark::State& state) {
    const auto M = static_cast<std::uint32_t>(state.range(0));
    const ArithTable table(M);
    MollifierParams p;
    p.M = M;
    for (auto _ : state) benchmark::DoNotOptimize(s_sums(p, table).S);
}
BENCHMARK(BM_SSums)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
