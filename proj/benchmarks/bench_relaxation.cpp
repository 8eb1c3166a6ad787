#include <benchmark/benchmark.h>

#include "excivib/excivib.hpp"

using namespace excivib;

namespace {

RateMatrix bench_rates(int n, double temperature) {
  const auto band =
      exciton_dispersion(build_grid({n, 2000.0, Boundary::Periodic}), 1.0, 2e-8);
  CouplingSet c;
  c.j = 2e-8;
  c.f_g = -5e-10;
  c.f_e = -4e-10;
  const VibrationSpec vib{1.2e-8, 1.9e-8, 1, 2};
  return build_rate_matrix(band, c, vib, default_eta(band), temperature);
}

}  // namespace

static void BM_BuildRateMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto band =
      exciton_dispersion(build_grid({n, 2000.0, Boundary::Periodic}), 1.0, 2e-8);
  CouplingSet c;
  c.j = 2e-8;
  c.f_g = -5e-10;
  c.f_e = -4e-10;
  const VibrationSpec vib{1.2e-8, 1.9e-8, 1, 2};
  const double eta = default_eta(band);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_rate_matrix(band, c, vib, eta, 0.0));
  }
}
BENCHMARK(BM_BuildRateMatrix)->RangeMultiplier(2)->Range(8, 128);

static void BM_EvolvePopulations(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto rates = bench_rates(n, 3e-8);
  Eigen::VectorXd p0 = Eigen::VectorXd::Constant(n, 1.0 / n);
  const double scale = rates.total().maxCoeff();
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve_populations(rates, p0, 10.0 / scale, 200));
  }
}
BENCHMARK(BM_EvolvePopulations)->RangeMultiplier(2)->Range(8, 64);

BENCHMARK_MAIN();
