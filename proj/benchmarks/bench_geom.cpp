#include <benchmark/benchmark.h>

#include <numbers>

#include "pizzacut/generators.hpp"
#include "pizzacut/geom.hpp"

using namespace pizza;

namespace {

void BM_Clip(benchmark::State& state) {
    const ConvexPolygon P = make_regular_polygon(static_cast<int>(state.range(0)), 1.0);
    const OrientedLine line(0.7, 0.2);
    for (auto _ : state) {
        auto cap = clip(P, line, Side::minus);
        benchmark::DoNotOptimize(cap);
    }
}
BENCHMARK(BM_Clip)->Arg(8)->Arg(64)->Arg(512);

void BM_SectionFraction(benchmark::State& state) {
    const ConvexPolygon P = make_regular_polygon(static_cast<int>(state.range(0)), 1.0);
    const OrientedLine line(0.7, 0.2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(section_fraction(line, P));
    }
}
BENCHMARK(BM_SectionFraction)->Arg(8)->Arg(64)->Arg(512);

void BM_AlphaSection(benchmark::State& state) {
    const ConvexPolygon P = make_regular_polygon(static_cast<int>(state.range(0)), 1.0);
    double theta = 0.0;
    for (auto _ : state) {
        theta += 0.01;
        benchmark::DoNotOptimize(alpha_section(P, 0.3, theta));
    }
}
BENCHMARK(BM_AlphaSection)->Arg(8)->Arg(64)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
