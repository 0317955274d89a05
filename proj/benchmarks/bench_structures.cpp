#include <benchmark/benchmark.h>

#include "cliffork/classification.hpp"
#include "cliffork/ext.hpp"
#include "cliffork/groups.hpp"
#include "cliffork/quotient.hpp"
#include "cliffork/verify.hpp"

using namespace cliffork;

namespace {

void BM_PeriodicTable(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(periodic_table(7, 7, TableKind::Representations));
}
BENCHMARK(BM_PeriodicTable);

void BM_ExtGroupGamma(benchmark::State& state) {
    const SpinBasis b = gamma_basis();
    for (auto _ : state) {
        const ExtGroupMatrices m = ext_group(b);
        benchmark::DoNotOptimize(classify_ext_group(m));
    }
}
BENCHMARK(BM_ExtGroupGamma);

void BM_SignatureCensus(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_signatures(n, 1));
}
BENCHMARK(BM_SignatureCensus)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_VeeFactor(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Signature s(n / 2, n - n / 2);
    for (auto _ : state) benchmark::DoNotOptimize(vee_factor_check(s));
}
BENCHMARK(BM_VeeFactor)->DenseRange(2, 6, 2)->Unit(benchmark::kMicrosecond);

void BM_EpsilonHomomorphism(benchmark::State& state) {
    const EpsilonContext ctx = make_context(Signature(5, 0, Field::Complex));
    for (auto _ : state) benchmark::DoNotOptimize(check_homomorphism(ctx));
}
BENCHMARK(BM_EpsilonHomomorphism)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
