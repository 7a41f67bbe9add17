/**
 * @file bench_qpl.cpp
 * @brief google-benchmark harnesses for the main kernels.
 */

#include "qpl/constants/euler_products.hpp"
#include "qpl/constants/zeta.hpp"
#include "qpl/cusp/atlas.hpp"
#include "qpl/geometry/chart.hpp"
#include "qpl/geometry/region.hpp"
#include "qpl/local/local_fields.hpp"
#include "qpl/local/masses.hpp"
#include "qpl/pencil/pencil.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

namespace {

std::vector<qpl::Quadruple> sample_quadruples(std::size_t n, long radius) {
    std::mt19937_64 rng(42);
    std::vector<qpl::Quadruple> qs;
    for (std::size_t k = 0; k < n; ++k) qs.push_back(qpl::random_quadruple(rng, radius));
    return qs;
}

void BM_SubPfaffians(benchmark::State& state) {
    const auto qs = sample_quadruples(64, 5);
    std::size_t k = 0;
    for (auto _ : state) benchmark::DoNotOptimize(qpl::sub_pfaffians(qs[k++ % qs.size()]));
}
BENCHMARK(BM_SubPfaffians);

void BM_CharQuintic(benchmark::State& state) {
    const auto qs = sample_quadruples(64, state.range(0));
    std::size_t k = 0;
    for (auto _ : state) benchmark::DoNotOptimize(qpl::char_quintic(qs[k++ % qs.size()], 7));
}
BENCHMARK(BM_CharQuintic)->Arg(5)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
    const auto qs = sample_quadruples(64, 5);
    std::size_t k = 0;
    for (auto _ : state) benchmark::DoNotOptimize(qpl::classify(qs[k++ % qs.size()], 7));
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMillisecond);

void BM_GenerateAtlas(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(qpl::generate_atlas());
}
BENCHMARK(BM_GenerateAtlas)->Unit(benchmark::kMillisecond);

void BM_TameBeta(benchmark::State& state) {
    const long p = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(qpl::beta_p(p, qpl::tame_local_fields(p)));
}
BENCHMARK(BM_TameBeta)->Arg(7)->Arg(101);

void BM_Zeta(benchmark::State& state) {
    const int bits = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(qpl::zeta(3, bits));
}
BENCHMARK(BM_Zeta)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_C5TwoRoute(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(qpl::c5_two_route(96, state.range(0)));
}
BENCHMARK(BM_C5TwoRoute)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_OrbitJacobian(benchmark::State& state) {
    const auto y = qpl::to_real(sample_quadruples(1, 5).front());
    std::mt19937_64 rng(3);
    const auto cp = qpl::ChartSampler{}(rng);
    for (auto _ : state) benchmark::DoNotOptimize(qpl::orbit_map_jacobian(y, cp));
}
BENCHMARK(BM_OrbitJacobian)->Unit(benchmark::kMillisecond);

void BM_DavenportEllipsoid(benchmark::State& state) {
    const auto region = qpl::ellipsoid_region({0, 0, 0}, {qpl::Rat(state.range(0)), qpl::Rat(5), qpl::Rat(3)});
    for (auto _ : state) benchmark::DoNotOptimize(qpl::davenport_count(region, {.qmc_points = 1 << 14, .replicates = 8}));
}
BENCHMARK(BM_DavenportEllipsoid)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
