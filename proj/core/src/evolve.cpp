#include "excivib/evolve.hpp"

#include <cmath>
#include <complex>

#include "excivib/errors.hpp"

namespace excivib {

namespace {

using Complex = std::complex<double>;

// H is real symmetric; apply it to the real and imaginary parts separately.
StateVector apply_sparse(const Eigen::SparseMatrix<double>& h, const StateVector& v) {
  StateVector out(v.size());
  out.real() = h * v.real();
  out.imag() = h * v.imag();
  return out;
}

// exp(-i T dt) e1 on the tridiagonal Lanczos matrix. The mean energy is
// split off as an exact global phase so the roundoff floor follows the
// spectral spread instead of |H| * dt.
Eigen::VectorXcd tridiagonal_phase_evolution(const std::vector<double>& alpha,
                                             const std::vector<double>& beta,
                                             int dim, double dt) {
  Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(dim, dim);
  for (int j = 0; j < dim; ++j) {
    tri(j, j) = alpha[j];
    if (j + 1 < dim) tri(j, j + 1) = tri(j + 1, j) = beta[j];
  }
  const double shift = tri.trace() / dim;
  tri.diagonal().array() -= shift;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(tri);
  Eigen::VectorXcd phases(dim);
  for (int j = 0; j < dim; ++j) {
    phases[j] = std::exp(Complex(0.0, -solver.eigenvalues()[j] * dt));
  }
  return std::exp(Complex(0.0, -shift * dt)) *
         (solver.eigenvectors().cast<Complex>() *
          (phases.array() *
           solver.eigenvectors().row(0).transpose().cast<Complex>().array())
              .matrix());
}

// One Lanczos step of exp(-i H dt) v. The basis grows until the amplitude
// reaching its boundary drops below tol (or max_dim is hit); returns the
// propagated vector and that boundary amplitude as the error estimate.
StateVector krylov_step(const Eigen::SparseMatrix<double>& h,
                        const StateVector& v, double dt, int max_dim,
                        double tol, double* error_estimate) {
  const double v_norm = v.norm();
  if (v_norm == 0.0) throw DomainError("krylov_step: zero state");

  std::vector<StateVector> basis;
  basis.reserve(max_dim);
  basis.push_back(v / v_norm);
  std::vector<double> alpha, beta;

  Eigen::VectorXcd y;
  int dim = 0;
  double estimate = 1.0;
  for (int j = 0; j < max_dim; ++j) {
    StateVector w = apply_sparse(h, basis[j]);
    alpha.push_back(std::real(basis[j].dot(w)));
    w -= alpha[j] * basis[j];
    if (j > 0) w -= beta[j - 1] * basis[j - 1];
    // full reorthogonalization, two passes
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) w -= q.dot(w) * q;
    }
    dim = j + 1;
    y = tridiagonal_phase_evolution(alpha, beta, dim, dt);

    const double b = w.norm();
    if (b < 1e-14) {
      estimate = 0.0;  // happy breakdown: the subspace is invariant
      break;
    }
    estimate = std::abs(y[dim - 1]);
    if (dim > 1 && estimate <= tol) break;
    if (dim == max_dim) break;
    beta.push_back(b);
    basis.push_back(w / b);
  }
  *error_estimate = estimate;

  StateVector out = StateVector::Zero(v.size());
  for (int j = 0; j < dim; ++j) out += v_norm * y[j] * basis[j];
  return out;
}

}  // namespace

EvolutionResult evolve(const HamiltonianMatrix& h, const StateVector& psi0,
                       double t, int steps, const EvolutionOptions& opts) {
  if (!h.hermitian()) {
    throw DomainError("evolve requires a hermitian Hamiltonian");
  }
  if (h.dimension() != psi0.size()) {
    throw ShapeError("evolve: state dimension mismatch");
  }
  if (std::abs(psi0.norm() - 1.0) > 1e-9) {
    throw ValidationError("evolve: initial state is not normalized");
  }
  if (steps < 1) throw DomainError("evolve: steps must be >= 1");

  EvolutionResult result;
  result.times.reserve(steps + 1);
  result.states.reserve(steps + 1);
  result.times.push_back(0.0);
  result.states.push_back(psi0);

  const double dt = t / steps;
  StateVector psi = psi0;
  for (int s = 1; s <= steps; ++s) {
    // adaptive substepping until the Krylov truncation meets local_tol
    int substeps = 1;
    for (;;) {
      StateVector trial = psi;
      double worst = 0.0;
      const double sub_dt = dt / substeps;
      for (int i = 0; i < substeps; ++i) {
        double err = 0.0;
        trial = krylov_step(h.matrix, trial, sub_dt, opts.krylov_dim,
                            opts.local_tol, &err);
        worst = std::max(worst, err);
      }
      if (worst <= opts.local_tol || dt == 0.0) {
        psi = std::move(trial);
        break;
      }
      substeps *= 2;
      if (substeps > opts.max_substeps) {
        throw NumericalError("evolve: substep budget exhausted (error " +
                             std::to_string(worst) + ")");
      }
    }
    result.times.push_back(s * dt);
    result.states.push_back(psi);
  }
  return result;
}

double transition_probability(const StateVector& psi, int target_index) {
  if (target_index < 0 || target_index >= psi.size()) {
    throw DomainError("transition_probability: target outside basis");
  }
  return std::norm(psi[target_index]);
}

double transition_probability(const StateVector& psi,
                              const StateVector& target) {
  if (psi.size() != target.size()) {
    throw ShapeError("transition_probability: dimension mismatch");
  }
  return std::norm(target.dot(psi));
}

double transition_probability(const StateVector& psi, const BasisIndex& index,
                              const FockState& target) {
  const int i = index.find(target);
  if (i < 0) throw DomainError("transition_probability: target outside basis");
  return transition_probability(psi, i);
}

std::vector<double> site_populations(const StateVector& psi,
                                     const std::vector<FockState>& basis,
                                     int site_count) {
  if (static_cast<int>(basis.size()) != psi.size()) {
    throw ShapeError("site_populations: basis/state mismatch");
  }
  std::vector<double> populations(site_count, 0.0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    populations[basis[i].excited_site] += std::norm(psi[i]);
  }
  return populations;
}

double energy_expectation(const HamiltonianMatrix& h, const StateVector& psi) {
  return std::real(psi.dot(apply_sparse(h.matrix, psi)));
}

}  // namespace excivib
