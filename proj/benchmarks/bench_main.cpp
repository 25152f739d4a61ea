#include <benchmark/benchmark.h>

#include "hconv/catalog.hpp"
#include "hconv/matrix.hpp"
#include "hconv/operator_checks.hpp"
#include "hconv/positive_maps.hpp"
#include "hconv/quadrature.hpp"

namespace {

using namespace hconv;

void BM_EigH(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const HermitianMatrix a = rand_hermitian(dim, 0.5, 2.0, 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eig_h(a));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EigH)->RangeMultiplier(2)->Range(2, 32)->Complexity();

void BM_MatFunc(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const HermitianMatrix a = rand_hermitian(dim, 0.5, 2.0, 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mat_func([](double t) { return t * t; }, a));
  }
}
BENCHMARK(BM_MatFunc)->RangeMultiplier(2)->Range(2, 32);

void BM_MercerChain(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const auto& cat = builtin_catalog();
  const MapFamily family = random_family(3, dim, dim, FamilyMode::each_unital, 7);
  std::vector<HermitianMatrix> as;
  for (int j = 0; j < 3; ++j) {
    as.push_back(rand_hermitian(dim, 0.5, 2.0, 100 + j));
  }
  const WeightVector w{{0.5, 0.25, 0.25}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_mercer_operator(
        cat.f("f:square"), cat.h("h:id"), family, as, w, 0.5, 2.0));
  }
}
BENCHMARK(BM_MercerChain)->RangeMultiplier(2)->Range(2, 16);

void BM_BetaCompute(benchmark::State& state) {
  const auto& cat = builtin_catalog();
  for (auto _ : state) {
    benchmark::DoNotOptimize(beta_compute(cat.f("f:square"), cat.f("f:square"),
                                          cat.h("h:id"), 1.0, 0.0, 1.0));
  }
}
BENCHMARK(BM_BetaCompute);

void BM_Integrate01(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate01(
        [](double t) { return std::pow((1 - t) * (1 - t) + t * t, 0.25); },
        1e-10));
  }
}
BENCHMARK(BM_Integrate01);

}  // namespace

BENCHMARK_MAIN();
