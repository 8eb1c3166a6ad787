#include <benchmark/benchmark.h>

#include "excivib/excivib.hpp"

using namespace excivib;

static void BM_KrylovEvolve(benchmark::State& state) {
  ModelSpec spec;
  spec.lattice = {static_cast<int>(state.range(0)), 2000.0, Boundary::Periodic};
  spec.atom = {1.0, 2.0, deg_to_rad(90.0), 1e12};
  spec.vib = {1e-8, 1.4e-8, 1, 2};
  CouplingSet c;
  c.j = 1e-8;
  c.f_g = -5e-10;
  c.f_e = -4e-10;

  const auto basis = enumerate_basis(spec.lattice, spec.vib, 1u << 22);
  const auto h = assemble_hamiltonian(basis, spec, c);
  StateVector psi0 = StateVector::Zero(h.dimension());
  psi0[0] = 1.0;

  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve(h, psi0, 10.0 / c.j, 100));
  }
  state.counters["dim"] = static_cast<double>(h.dimension());
}
BENCHMARK(BM_KrylovEvolve)->DenseRange(3, 6);
