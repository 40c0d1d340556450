// Serial reference vs OpenMP sweep on a steering preset grid.

#include <benchmark/benchmark.h>

#include "qtsteer/sweep.hpp"

namespace {

qtsteer::SweepConfig grid()
{
    qtsteer::SweepConfig c = *qtsteer::preset("fig5a");
    c.quantities = qtsteer::all_quantities();
    return c;
}

void BM_SweepSerial(benchmark::State& state)
{
    const auto c = grid();
    for (auto _ : state) {
        benchmark::DoNotOptimize(qtsteer::run_sweep_serial(c));
    }
}
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State& state)
{
    auto c = grid();
    c.workers = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qtsteer::run_sweep(c));
    }
}
BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
