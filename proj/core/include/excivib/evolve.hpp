#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "excivib/hamiltonian.hpp"

namespace excivib {

using StateVector = Eigen::VectorXcd;

struct EvolutionOptions {
  int krylov_dim = 30;
  double local_tol = 1e-12;  // per-substep truncation target
  int max_substeps = 1 << 20;
};

struct EvolutionResult {
  std::vector<double> times;        // steps+1 entries including t = 0
  std::vector<StateVector> states;  // aligned with times
};

// exp(-i H t) psi0 sampled on a uniform grid of `steps` intervals, via a
// Lanczos (Krylov) propagator with adaptive substepping. Time is measured
// in hbar/eV. Requires a hermitian H and a normalized psi0; norm and <H>
// are conserved to roundoff per substep. Throws NumericalError when the
// substep budget cannot reach local_tol.
EvolutionResult evolve(const HamiltonianMatrix& h, const StateVector& psi0,
                       double t, int steps, const EvolutionOptions& opts = {});

// |<basis_state|psi>|^2
double transition_probability(const StateVector& psi, int target_index);
// |<target|psi>|^2 for an arbitrary normalized target vector
double transition_probability(const StateVector& psi,
                              const StateVector& target);
// same, addressing the basis state by its occupation label; throws
// DomainError when the target lies outside the basis
double transition_probability(const StateVector& psi, const BasisIndex& index,
                              const FockState& target);

// sum over basis states with the given excited site, one value per site
std::vector<double> site_populations(const StateVector& psi,
                                     const std::vector<FockState>& basis,
                                     int site_count);

double energy_expectation(const HamiltonianMatrix& h, const StateVector& psi);

}  // namespace excivib
