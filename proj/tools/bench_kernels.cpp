#include <benchmark/benchmark.h>

#include <vector>

#include "schur/haarmc.hpp"
#include "schur/parallel.hpp"
#include "schur/symfunc.hpp"

using namespace schur;

// one staged transition of the box sweep, serial slot loop against the
// OpenMP slot loop
static void bench_strip(benchmark::State& state, bool parallel) {
    const int m = static_cast<int>(state.range(0));
    StripSweep sweep(m);
    std::vector<Int> src(static_cast<size_t>(sweep.state_count()), Int(1)), dst;
    for (auto _ : state) {
        sweep.apply_strip(3, src, dst, parallel);
        benchmark::DoNotOptimize(dst.data());
    }
}
static void strip_serial(benchmark::State& s) { bench_strip(s, false); }
static void strip_omp(benchmark::State& s) { bench_strip(s, true); }
BENCHMARK(strip_serial)->Arg(12)->Arg(20);
BENCHMARK(strip_omp)->Arg(12)->Arg(20);

static void bench_mc(benchmark::State& state, int threads) {
    set_threads(threads);
    const CosetStructure c = coset_structure(SubgroupId::H34);
    MCConfig cfg;
    cfg.samples = state.range(0);
    cfg.seed = 7;
    cfg.x_points = {{0.3, 0.0}, {0.2, 0.0}, {-0.4, 0.0}};
    for (auto _ : state) {
        const MCEstimate est = empirical_autocorrelation(c, cfg);
        benchmark::DoNotOptimize(est.estimate);
    }
    set_threads(0);
}
static void mc_serial(benchmark::State& s) { bench_mc(s, 1); }
static void mc_omp(benchmark::State& s) { bench_mc(s, 0); }
BENCHMARK(mc_serial)->Arg(200000)->Unit(benchmark::kMillisecond);
BENCHMARK(mc_omp)->Arg(200000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
