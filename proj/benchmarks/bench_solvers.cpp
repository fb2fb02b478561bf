#include <benchmark/benchmark.h>

#include <random>

#include "liecot/catalog.hpp"
#include "liecot/forms.hpp"
#include "liecot/operator_spaces.hpp"

using namespace liecot;

namespace {

Matrix random_rational_matrix(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(num(rng), den(rng));
  return m;
}

void BM_rref(benchmark::State& state) {
  Matrix m = random_rational_matrix(static_cast<std::size_t>(state.range(0)), 1234);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_rref)->Arg(8)->Arg(16)->Arg(32);

void BM_inertia(benchmark::State& state) {
  Matrix m = random_rational_matrix(static_cast<std::size_t>(state.range(0)), 99);
  Matrix sym = m + m.transpose();
  for (auto _ : state) benchmark::DoNotOptimize(inertia(sym));
}
BENCHMARK(BM_inertia)->Arg(8)->Arg(16)->Arg(32);

void BM_derivations_cotangent_sl2(benchmark::State& state) {
  LieAlgebra d = cotangent(sl2());
  for (auto _ : state) benchmark::DoNotOptimize(derivations(d));
}
BENCHMARK(BM_derivations_cotangent_sl2);

void BM_prederivations_cotangent_oscillator(benchmark::State& state) {
  LieAlgebra d = cotangent(oscillator(Rational(1)));
  for (auto _ : state) benchmark::DoNotOptimize(prederivations(d));
}
BENCHMARK(BM_prederivations_cotangent_oscillator);

void BM_invariant_forms_cotangent_oscillator(benchmark::State& state) {
  LieAlgebra d = cotangent(oscillator(Rational(1)));
  for (auto _ : state) benchmark::DoNotOptimize(invariant_forms(d));
}
BENCHMARK(BM_invariant_forms_cotangent_oscillator);

}  // namespace

BENCHMARK_MAIN();
