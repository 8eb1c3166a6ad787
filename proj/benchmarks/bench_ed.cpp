#include <benchmark/benchmark.h>

#include "excivib/excivib.hpp"

using namespace excivib;

namespace {

ModelSpec bench_model(int n_sites, int n_max, int q_max) {
  ModelSpec spec;
  spec.lattice = {n_sites, 2000.0, Boundary::Open};
  spec.atom = {1.0, 2.0, deg_to_rad(90.0), 1e12};
  spec.vib = {1e-9, 1.3e-9, n_max, q_max};
  return spec;
}

CouplingSet bench_couplings() {
  CouplingSet c;
  c.j = 1e-8;
  c.f_g = -5e-10;
  c.f_e = -4e-10;
  c.m_g = 3e-10;
  c.m_e = 2e-10;
  return c;
}

}  // namespace

static void BM_EnumerateBasis(benchmark::State& state) {
  const auto spec = bench_model(static_cast<int>(state.range(0)), 2, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_basis(spec.lattice, spec.vib, 1u << 22));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateBasis)->DenseRange(2, 5)->Complexity();

static void BM_AssembleHamiltonian(benchmark::State& state) {
  const auto spec = bench_model(static_cast<int>(state.range(0)), 2, 4);
  const auto basis = enumerate_basis(spec.lattice, spec.vib, 1u << 22);
  const auto c = bench_couplings();
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble_hamiltonian(basis, spec, c));
  }
  state.counters["dim"] = static_cast<double>(basis.size());
}
BENCHMARK(BM_AssembleHamiltonian)->DenseRange(2, 5);

static void BM_DiagonalizeDense(benchmark::State& state) {
  const auto spec = bench_model(3, static_cast<int>(state.range(0)), 4);
  const auto basis = enumerate_basis(spec.lattice, spec.vib, 1u << 22);
  const auto h = assemble_hamiltonian(basis, spec, bench_couplings());
  for (auto _ : state) {
    benchmark::DoNotOptimize(diagonalize(h, 4));
  }
  state.counters["dim"] = static_cast<double>(h.dimension());
}
BENCHMARK(BM_DiagonalizeDense)->DenseRange(1, 3);

static void BM_DiagonalizeLanczos(benchmark::State& state) {
  const auto spec = bench_model(4, 2, 4);
  const auto basis = enumerate_basis(spec.lattice, spec.vib, 1u << 22);
  const auto h = assemble_hamiltonian(basis, spec, bench_couplings());
  DiagonalizeOptions opts;
  opts.dense_threshold = 1;
  opts.want_vectors = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(diagonalize(h, 2, opts));
  }
  state.counters["dim"] = static_cast<double>(h.dimension());
}
BENCHMARK(BM_DiagonalizeLanczos);
