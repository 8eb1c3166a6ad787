#pragma once

#include <vector>

#include <Eigen/Dense>

#include "excivib/hamiltonian.hpp"

namespace excivib {

struct SpectrumResult {
  std::vector<double> eigenvalues;  // ascending
  Eigen::MatrixXd eigenvectors;     // columns; empty unless requested
  std::vector<double> residual_norms;  // ||H v - lambda v|| per pair
};

struct DiagonalizeOptions {
  bool want_vectors = true;
  int dense_threshold = 4096;   // dense solver up to this dimension
  int max_lanczos_steps = 600;  // per deflation round
  double residual_tol = 1e-10;  // relative to ||H||
};

// `count` lowest eigenpairs of a hermitian assembled matrix. Dense up to
// dense_threshold, Lanczos with full reorthogonalization and deflated
// restarts above it. Throws NumericalError (carrying the residual) when the
// residual contract cannot be met.
SpectrumResult diagonalize(const HamiltonianMatrix& h, int count,
                           const DiagonalizeOptions& opts = {});

}  // namespace excivib
