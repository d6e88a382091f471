#include <benchmark/benchmark.h>

#include <cmath>

#include "deepzero/bargmann.hpp"
#include "deepzero/deep_zero.hpp"
#include "deepzero/operators.hpp"
#include "deepzero/quadrature.hpp"

namespace {

using namespace deepzero;

void BM_DisplacementMatrix(benchmark::State& state) {
  const auto cols = static_cast<Index>(state.range(0));
  const Complex alpha{1.3, -0.7};
  const Index rows = cols + auto_pad(alpha, cols);
  for (auto _ : state) benchmark::DoNotOptimize(displacement_matrix(alpha, rows, cols));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DisplacementMatrix)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_SamplingConstant(benchmark::State& state) {
  const auto n = static_cast<Index>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sampling_constant(IndexSet::even(), 1.0, n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SamplingConstant)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_BargmannForward(benchmark::State& state) {
  const auto degree = static_cast<Index>(state.range(0));
  const L2Function phi = L2Function::sample(gauss_hermite_grid(kDefaultHermiteNodes),
                                            [](double t) { return Complex{std::exp(-0.25 * (t - 1) * (t - 1))}; });
  for (auto _ : state) benchmark::DoNotOptimize(bargmann_forward(phi, degree));
}
BENCHMARK(BM_BargmannForward)->Arg(16)->Arg(32)->Arg(64);

void BM_IntegrateCosSingular(benchmark::State& state) {
  const double p = -0.9;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        integrate_cos_singular([](double t) { return Complex{1.0 / ((1 + t * t) * (1 + t * t))}; }, 1.0, p));
  }
}
BENCHMARK(BM_IntegrateCosSingular);

}  // namespace

BENCHMARK_MAIN();
