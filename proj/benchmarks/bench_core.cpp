#include <benchmark/benchmark.h>

#include <random>

#include "drivenjc/analysis.hpp"
#include "drivenjc/hermitian_eigen.hpp"
#include "drivenjc/negativity.hpp"

using namespace drivenjc;

namespace {

CMatrix random_hermitian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  CMatrix h(n, n);
  for (int i = 0; i < n; ++i) {
    h(i, i) = gauss(rng);
    for (int j = i + 1; j < n; ++j) {
      h(i, j) = Complex(gauss(rng), gauss(rng));
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

void BM_HermitianEigen(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const CMatrix h = random_hermitian(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(h));
}
BENCHMARK(BM_HermitianEigen)->Arg(4)->Arg(32)->Arg(96);

void BM_NegativityOracleTwoQubit(benchmark::State& state) {
  std::mt19937_64 rng(2);
  CMatrix g(4, 4);
  std::normal_distribution<double> gauss;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  CMatrix m = g * g.adjoint();
  m *= Complex(1.0 / m.trace().real());
  const DensityMatrix rho{m, {2, 2}};
  for (auto _ : state) benchmark::DoNotOptimize(negativity_oracle(rho, 0));
}
BENCHMARK(BM_NegativityOracleTwoQubit);

void BM_XLogNegativity(benchmark::State& state) {
  const XState x = ewl_state({EwlKind::Phi, 2.0 / 3.0, std::sqrt(1.0 / 6.0),
                              std::sqrt(5.0 / 6.0)});
  for (auto _ : state) benchmark::DoNotOptimize(x_log_negativity(x));
}
BENCHMARK(BM_XLogNegativity);

void BM_ThermalLogNegativity(benchmark::State& state) {
  const DrivenJCParams p{5.0, 1.0, 2.0, 1.0, 2.0, MixingBranch::HalfPlane};
  const ThermalFieldSpec spec{1.0, 0, 1e-12};
  double t = 0.0;
  for (auto _ : state) {
    t += 0.01;
    benchmark::DoNotOptimize(thermal_log_negativity(p, spec, t));
  }
}
BENCHMARK(BM_ThermalLogNegativity);

void BM_TwoAtomTracePoint(benchmark::State& state) {
  const Scenario s = TwoAtomScenario{
      {1.0, 1.0, 0.5, 1.0, 1.0, MixingBranch::HalfPlane},
      {EwlKind::Psi, 2.0 / 3.0, std::sqrt(1.0 / 6.0), std::sqrt(5.0 / 6.0)}};
  double t = 0.0;
  for (auto _ : state) {
    t += 0.01;
    benchmark::DoNotOptimize(scenario_negativity(s, t));
  }
}
BENCHMARK(BM_TwoAtomTracePoint);

}  // namespace

BENCHMARK_MAIN();
