#include "lingdyn/doubled.hpp"

#include <benchmark/benchmark.h>

namespace db = lingdyn::doubled;

static void BM_ThetaVacuumClosedForm(benchmark::State& state) {
    const db::FockCutoff cutoff(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(db::theta_vacuum_vector(0.5, cutoff));
}
BENCHMARK(BM_ThetaVacuumClosedForm)->Arg(30)->Arg(60);

static void BM_ThetaVacuumFromGenerator(benchmark::State& state) {
    const db::FockCutoff cutoff(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(db::generator_vacuum_vector(0.5, cutoff));
}
BENCHMARK(BM_ThetaVacuumFromGenerator)->Arg(30)->Arg(60);
