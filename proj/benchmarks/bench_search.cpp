#include <benchmark/benchmark.h>

#include "pizzacut/generators.hpp"
#include "pizzacut/partition.hpp"
#include "pizzacut/sections.hpp"

using namespace pizza;

namespace {

void BM_FindSimultaneousSection(benchmark::State& state) {
    const Pizza p = make_random_pair(1001);
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_simultaneous_section(p, 0.25));
    }
}
BENCHMARK(BM_FindSimultaneousSection);

void BM_FindHalvingCut(benchmark::State& state) {
    const Pizza p = make_random_pair(1001);
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_halving_cut(p));
    }
}
BENCHMARK(BM_FindHalvingCut);

void BM_FairPartition(benchmark::State& state) {
    const Pizza p = make_random_pair(1001);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fair_partition(p, n));
    }
}
BENCHMARK(BM_FairPartition)->Arg(2)->Arg(6)->Arg(12);

void BM_FairPartitionDisks(benchmark::State& state) {
    const Pizza disks = make_disk_pair(1.0, 2.0, 512);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fair_partition(disks, 6));
    }
}
BENCHMARK(BM_FairPartitionDisks);

}  // namespace

BENCHMARK_MAIN();
