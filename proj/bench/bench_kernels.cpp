#include "fuchs/construct.hpp"
#include "fuchs/kernels.hpp"

#include <benchmark/benchmark.h>

using namespace fuchs;

namespace {

Matrix sample(std::size_t n, std::uint64_t seed)
{
    Rng rng(seed);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = Gaussian(Rational(rng.uniform(-9, 9), rng.uniform(1, 5)), Rational(rng.uniform(-2, 2)));
    return m;
}

template <Matrix (*Multiply)(const Matrix&, const Matrix&)>
void bm_multiply(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix a = sample(n, 1), b = sample(n, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(Multiply(a, b));
    state.SetComplexityN(state.range(0));
}

template <std::vector<std::size_t> (*Rref)(Matrix&)>
void bm_rref(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix a = sample(n, 3);
    for (auto _ : state) {
        Matrix m = a;
        benchmark::DoNotOptimize(Rref(m));
    }
}

} // namespace

BENCHMARK(bm_multiply<kernels::serial::multiply>)->Name("multiply/serial")->RangeMultiplier(2)->Range(8, 64);
BENCHMARK(bm_multiply<kernels::omp::multiply>)->Name("multiply/omp")->RangeMultiplier(2)->Range(8, 64);
BENCHMARK(bm_rref<kernels::serial::rref_inplace>)->Name("rref/serial")->RangeMultiplier(2)->Range(8, 32);
BENCHMARK(bm_rref<kernels::omp::rref_inplace>)->Name("rref/omp")->RangeMultiplier(2)->Range(8, 32);

BENCHMARK_MAIN();
