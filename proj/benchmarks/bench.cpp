#include <benchmark/benchmark.h>

#include <random>

#include "monoidk/abgroup.hpp"
#include "monoidk/monomial.hpp"
#include "monoidk/steinberg.hpp"

namespace {

using namespace monoidk;

void bm_smith_normal_form(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> entry(-9, 9);
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = entry(rng);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(bm_smith_normal_form)->Arg(4)->Arg(8)->Arg(12);

void bm_enumerate_gl(benchmark::State& state) {
    PointedMonoid a = group_monoid(cyclic_group(3));
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_gl(a, n));
}
BENCHMARK(bm_enumerate_gl)->Arg(2)->Arg(3)->Arg(4);

void bm_m_mul(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    MGroupElement x = parse_m_word(d, "a X2^1 X5^3");
    MGroupElement y = parse_m_word(d, "X3^2 X4^1");
    for (auto _ : state) {
        benchmark::DoNotOptimize(m_mul(x, y));
    }
}
BENCHMARK(bm_m_mul)->Arg(0)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
