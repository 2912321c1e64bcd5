#include <benchmark/benchmark.h>

#include "stieltjes2d/cubature.hpp"
#include "stieltjes2d/gruss.hpp"
#include "stieltjes2d/registry.hpp"
#include "stieltjes2d/rs_integral.hpp"
#include "stieltjes2d/variation.hpp"

using namespace stieltjes2d;

namespace {
const Rect unit{0, 1, 0, 1};
}

static void BM_RsDoubleSum(benchmark::State& state) {
    const Surface& f = registry_lookup("sin_prod");
    const Surface& u = registry_lookup("sq_prod");
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto p = GridPartition::uniform_midpoint(unit, n, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rs_double_sum(f, u, p));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RsDoubleSum)->RangeMultiplier(2)->Range(16, 512)->Complexity();

static void BM_RsOracle(benchmark::State& state) {
    const Surface& f = registry_lookup("prod_ts");
    const Surface& u = registry_lookup("sq_prod");
    const double tol = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rs_oracle(f, u, unit, tol, 1024).value);
    }
}
BENCHMARK(BM_RsOracle)->Arg(1000)->Arg(100000)->Arg(10000000);

static void BM_VitaliLevel(benchmark::State& state) {
    const Surface& f = registry_lookup("sin_prod");
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto p = GridPartition::uniform_midpoint(unit, n, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(vitali_sum(f, p));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_VitaliLevel)->RangeMultiplier(2)->Range(16, 512)->Complexity();

static void BM_BdpScan(benchmark::State& state) {
    const Surface& u = registry_lookup("sq_prod");
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bdp_sup_inf(u, unit, n).S);
    }
}
BENCHMARK(BM_BdpScan)->Arg(16)->Arg(32)->Arg(64);

static void BM_RsTrapezoid(benchmark::State& state) {
    const Surface& f = registry_lookup("sin_prod");
    const Surface& g = registry_lookup("exp_sum");
    for (auto _ : state) {
        benchmark::DoNotOptimize(rs_trapezoid_rule(f, g, unit, 1e-10));
    }
}
BENCHMARK(BM_RsTrapezoid);

static void BM_Korkine(benchmark::State& state) {
    const Surface& f = registry_lookup("prod_ts");
    const Surface& g = registry_lookup("sin_prod");
    for (auto _ : state) {
        benchmark::DoNotOptimize(korkine_residual(f, g, unit, 1e-9));
    }
}
BENCHMARK(BM_Korkine);

BENCHMARK_MAIN();
