// Serial reference against OpenMP kernel for each parallel entry point.
#include "confpair/geometry.hpp"
#include "confpair/gram.hpp"
#include "confpair/io.hpp"
#include "confpair/operad.hpp"

#include <benchmark/benchmark.h>

using namespace confpair;

namespace {

void BM_GramSerial(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gram_matrix_serial(n, n - 2, Parity::even));
}

void BM_GramParallel(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gram_matrix_parallel(n, n - 2, Parity::even));
}

void BM_DualitySerial(benchmark::State& state) {
    OTree tau = OTree::two_level({2, 0, 2});
    for (auto _ : state) benchmark::DoNotOptimize(check_duality_serial(tau, Parity::odd));
}

void BM_DualityParallel(benchmark::State& state) {
    OTree tau = OTree::two_level({2, 0, 2});
    for (auto _ : state) benchmark::DoNotOptimize(check_duality_parallel(tau, Parity::odd));
}

const Forest figure = parse_forest("[[2,6],[[1,7],3]] ; [4,5]");

void BM_IdentitiesSerial(benchmark::State& state) {
    int samples = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(check_identities_serial(figure, 0.01, 3, samples, 1));
}

void BM_IdentitiesParallel(benchmark::State& state) {
    int samples = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(check_identities_parallel(figure, 0.01, 3, samples, 1));
}

} // namespace

BENCHMARK(BM_GramSerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GramParallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DualitySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DualityParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IdentitiesSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IdentitiesParallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
