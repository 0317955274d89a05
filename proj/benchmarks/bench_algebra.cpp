#include <benchmark/benchmark.h>

#include <random>

#include "cliffork/algebra.hpp"
#include "cliffork/spinor.hpp"

using namespace cliffork;

namespace {

MultiVector dense(const Signature& s, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> c(-3, 3);
    MultiVector x(s);
    for (std::uint32_t b = 0; b <= s.full_mask(); ++b) x.add_term(Blade(b), Gaussian(c(rng)));
    return x;
}

void BM_BladeProduct(benchmark::State& state) {
    const Signature s(4, 4);
    std::uint32_t a = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(blade_product_sign(a & 0xff, (a * 37) & 0xff, s.negative_mask()));
        ++a;
    }
}
BENCHMARK(BM_BladeProduct);

void BM_DenseProduct(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Signature s(n / 2, n - n / 2);
    const MultiVector x = dense(s, 1), y = dense(s, 2);
    for (auto _ : state) benchmark::DoNotOptimize(x * y);
    state.SetComplexityN(std::int64_t{1} << (2 * n));
}
BENCHMARK(BM_DenseProduct)->DenseRange(2, 8, 2)->Complexity();

void BM_Reversion(benchmark::State& state) {
    const MultiVector x = dense(Signature(3, 3), 3);
    for (auto _ : state) benchmark::DoNotOptimize(reversion(x));
}
BENCHMARK(BM_Reversion);

void BM_BuildSpinbasis(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Signature s(n / 2, n - n / 2);
    for (auto _ : state) benchmark::DoNotOptimize(build_spinbasis(s));
}
BENCHMARK(BM_BuildSpinbasis)->DenseRange(2, 8, 2);

}  // namespace
