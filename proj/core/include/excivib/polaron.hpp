#pragma once

#include <Eigen/Dense>

#include "excivib/couplings.hpp"
#include "excivib/params.hpp"

namespace excivib {

// Canonical (shift) transformation of the on-site coupling. All matrices
// live on the two-mode truncated site space with b-major ordering:
// index = n_b * (n_max + 1) + n_c.

// s = (M^g/w_g)(b^dag - b) - (M^e/w_e)(c^dag - c); real antisymmetric.
Eigen::MatrixXd build_shift_generator(double m_g, double m_e, double omega_g,
                                      double omega_e, int n_max);

// Single-site one-exciton Hamiltonian omega_a + w_g b^dag b + w_e c^dag c
// + M^e (c + c^dag) - M^g (b + b^dag) on the same space.
Eigen::MatrixXd single_site_hamiltonian(double omega_a, double omega_g,
                                        double omega_e, double m_g, double m_e,
                                        int n_max);

// X H X^T with the dressing X = exp(-s): unitary similarity, so the
// spectrum is preserved exactly; for the single-site Hamiltonian above the
// result is diagonal up to truncation-edge residuals, with electronic
// energy omega_a - Delta. Throws ShapeError on dimension mismatch.
Eigen::MatrixXd transform_site_hamiltonian(const Eigen::MatrixXd& h_site,
                                           const Eigen::MatrixXd& shift_generator);

struct PolaronFrame {
  double displacement_g = 0.0;  // M^g / w_g
  double displacement_e = 0.0;  // M^e / w_e
  double omega_0 = 0.0;         // omega_a - Delta
  int n_max = 0;
  Eigen::MatrixXd dressing;       // X = exp(-s)
  double unitarity_residual = 0.0;  // max |X X^T - 1|
  double shift_residual = 0.0;      // |(X H X^T)_00 - omega_0|
};

PolaronFrame build_polaron_frame(const ModelSpec& spec,
                                 const CouplingSet& couplings);

// Transfer vertex amplitudes read off the polaron-transformed two-site
// Hamiltonian, compared against the bare couplings. Deviations vanish as
// M -> 0 and grow with the dressing overlap otherwise.
struct DressedVertexReport {
  double emit_ground_at_source = 0.0;
  double emit_excited_at_target = 0.0;
  double absorb_ground_at_target = 0.0;
  double absorb_excited_at_source = 0.0;
  double dev_emit_ground = 0.0;    // |amplitude - hF^g|
  double dev_emit_excited = 0.0;   // |amplitude - hF^e|
  double dev_absorb_ground = 0.0;
  double dev_absorb_excited = 0.0;
};

DressedVertexReport dressed_transfer_check(const ModelSpec& spec,
                                           const CouplingSet& couplings);

}  // namespace excivib
