#include "excivib/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "excivib/errors.hpp"

namespace excivib {

namespace {

double operator_scale(const Eigen::SparseMatrix<double>& m) {
  // infinity norm; cheap and good enough as a residual scale
  Eigen::VectorXd row_sums = Eigen::VectorXd::Zero(m.rows());
  for (int k = 0; k < m.outerSize(); ++k) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(m, k); it; ++it) {
      row_sums[it.row()] += std::abs(it.value());
    }
  }
  const double norm = row_sums.size() ? row_sums.maxCoeff() : 0.0;
  return std::max(norm, 1e-300);
}

SpectrumResult dense_spectrum(const HamiltonianMatrix& h, int count,
                              const DiagonalizeOptions& opts) {
  const Eigen::MatrixXd dense(h.matrix);
  // vectors are always computed so the residual contract can be checked
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("dense eigensolver failed");
  }

  SpectrumResult result;
  result.eigenvalues.assign(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + count);
  result.eigenvectors = solver.eigenvectors().leftCols(count);
  const double scale = operator_scale(h.matrix);
  for (int i = 0; i < count; ++i) {
    const Eigen::VectorXd residual =
        h.matrix * result.eigenvectors.col(i) -
        result.eigenvalues[i] * result.eigenvectors.col(i);
    const double rnorm = residual.norm();
    if (rnorm > opts.residual_tol * scale) {
      throw NumericalError("eigenpair residual " + std::to_string(rnorm) +
                           " above tolerance");
    }
    result.residual_norms.push_back(rnorm);
  }
  if (!opts.want_vectors) result.eigenvectors.resize(dense.rows(), 0);
  return result;
}

// Lanczos with full reorthogonalization against both the current Krylov
// basis and previously locked eigenvectors, restarted until `count`
// converged pairs (degenerate copies are picked up by deflation rounds).
SpectrumResult lanczos_spectrum(const HamiltonianMatrix& h, int count,
                                const DiagonalizeOptions& opts) {
  const auto& m = h.matrix;
  const int dim = static_cast<int>(m.rows());
  const double scale = operator_scale(m);
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  std::normal_distribution<double> gauss;

  SpectrumResult result;
  Eigen::MatrixXd locked(dim, 0);
  std::vector<double> locked_values;

  const auto orthogonalize = [&](Eigen::VectorXd& v,
                                 const std::vector<Eigen::VectorXd>& basis) {
    for (int pass = 0; pass < 2; ++pass) {
      if (locked.cols() > 0) v -= locked * (locked.transpose() * v);
      for (const auto& q : basis) v -= q.dot(v) * q;
    }
  };

  while (static_cast<int>(locked_values.size()) < count) {
    const int steps = std::min(opts.max_lanczos_steps,
                               dim - static_cast<int>(locked.cols()));
    if (steps <= 0) {
      throw NumericalError("lanczos: deflated space exhausted");
    }

    std::vector<Eigen::VectorXd> basis;
    basis.reserve(steps);
    std::vector<double> alpha, beta;

    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i) v[i] = gauss(rng);
    orthogonalize(v, basis);
    const double v0 = v.norm();
    if (v0 < 1e-14) throw NumericalError("lanczos: degenerate start vector");
    basis.push_back(v / v0);

    for (int j = 0; j < steps; ++j) {
      Eigen::VectorXd w = m * basis[j];
      alpha.push_back(basis[j].dot(w));
      w -= alpha[j] * basis[j];
      if (j > 0) w -= beta[j - 1] * basis[j - 1];
      orthogonalize(w, basis);
      const double b = w.norm();
      if (b < 1e-13 * scale || j + 1 == steps) break;
      beta.push_back(b);
      basis.push_back(w / b);
    }

    const int k = static_cast<int>(basis.size());
    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(k, k);
    for (int j = 0; j < k; ++j) {
      tri(j, j) = alpha[j];
      if (j + 1 < k) tri(j, j + 1) = tri(j + 1, j) = beta[j];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(tri);

    bool locked_any = false;
    for (int j = 0; j < k && static_cast<int>(locked_values.size()) < count;
         ++j) {
      Eigen::VectorXd ritz = Eigen::VectorXd::Zero(dim);
      for (int q = 0; q < k; ++q) ritz += small.eigenvectors()(q, j) * basis[q];
      ritz.normalize();
      const double value = small.eigenvalues()[j];
      const double residual = (m * ritz - value * ritz).norm();
      if (residual <= opts.residual_tol * scale) {
        locked.conservativeResize(dim, locked.cols() + 1);
        locked.col(locked.cols() - 1) = ritz;
        locked_values.push_back(value);
        result.residual_norms.push_back(residual);
        locked_any = true;
      } else {
        break;  // Ritz values are sorted; later ones are less converged
      }
    }
    if (!locked_any) {
      throw NumericalError("lanczos failed to converge a new eigenpair");
    }
  }

  // locking order is per-restart; sort the final set
  std::vector<int> order(locked_values.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return locked_values[a] < locked_values[b];
  });
  SpectrumResult sorted;
  sorted.eigenvectors.resize(dim, count);
  for (int i = 0; i < count; ++i) {
    sorted.eigenvalues.push_back(locked_values[order[i]]);
    sorted.residual_norms.push_back(result.residual_norms[order[i]]);
    sorted.eigenvectors.col(i) = locked.col(order[i]);
  }
  if (!opts.want_vectors) sorted.eigenvectors.resize(dim, 0);
  return sorted;
}

}  // namespace

SpectrumResult diagonalize(const HamiltonianMatrix& h, int count,
                           const DiagonalizeOptions& opts) {
  if (!h.hermitian()) {
    throw DomainError("diagonalize requires a hermitian matrix (defect " +
                      std::to_string(h.hermiticity_defect) + ")");
  }
  const int dim = h.dimension();
  if (count < 1 || count > dim) {
    throw DomainError("diagonalize: count out of range");
  }
  if (dim <= opts.dense_threshold) return dense_spectrum(h, count, opts);
  return lanczos_spectrum(h, count, opts);
}

}  // namespace excivib
