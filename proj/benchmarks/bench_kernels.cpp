// Serial reference vs OpenMP throughput for the hot kernels: trial batches,
// the centralizer scan, and the oracle enumeration.

#include <benchmark/benchmark.h>

#include "decomp/group.hpp"
#include "decomp/montecarlo.hpp"
#include "decomp/oracle.hpp"
#include "decomp/structure.hpp"

using namespace decomp;

namespace {

void BM_trials_serial(benchmark::State& state) {
    const Group g = build_cyclic(1024);
    for (auto _ : state) {
        const auto pt = estimate_p(g, 84, 84, Variant::both, 200, 5, 1);
        benchmark::DoNotOptimize(pt.successes);
    }
}
BENCHMARK(BM_trials_serial);

void BM_trials_parallel(benchmark::State& state) {
    const Group g = build_cyclic(1024);
    for (auto _ : state) {
        const auto pt = estimate_p(g, 84, 84, Variant::both, 200, 5, 0);
        benchmark::DoNotOptimize(pt.successes);
    }
}
BENCHMARK(BM_trials_parallel);

void BM_profile_serial(benchmark::State& state) {
    const Group g = build_dihedral(1024);
    for (auto _ : state) {
        const auto p = profile(g, 1);
        benchmark::DoNotOptimize(p.class_count);
    }
}
BENCHMARK(BM_profile_serial);

void BM_profile_parallel(benchmark::State& state) {
    const Group g = build_dihedral(1024);
    for (auto _ : state) {
        const auto p = profile(g, 0);
        benchmark::DoNotOptimize(p.class_count);
    }
}
BENCHMARK(BM_profile_parallel);

void BM_oracle_exact_p_serial(benchmark::State& state) {
    const Group g = build_symmetric(3);
    for (auto _ : state) {
        const auto value = oracle::exact_p(g, 3, 3, Variant::both, 1);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_oracle_exact_p_serial);

void BM_oracle_exact_p_parallel(benchmark::State& state) {
    const Group g = build_symmetric(3);
    for (auto _ : state) {
        const auto value = oracle::exact_p(g, 3, 3, Variant::both, 0);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_oracle_exact_p_parallel);

}  // namespace

BENCHMARK_MAIN();
