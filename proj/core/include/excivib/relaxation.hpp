#pragma once

#include <Eigen/Dense>

#include "excivib/band.hpp"
#include "excivib/couplings.hpp"

namespace excivib {

// Golden-rule scattering rates between band modes, split by species and
// direction. Entries R(k',k) >= 0 are rates k -> k' in eV (per hbar).
struct RateMatrix {
  MomentumGrid grid;
  double eta = 0.0;          // Gaussian broadening, eV
  double temperature = 0.0;  // eV; 0 switches absorption off
  Eigen::MatrixXd emit_g, emit_e, absorb_g, absorb_e;

  Eigen::MatrixXd total() const;
  // total() minus the diagonal outflow; columns sum to zero.
  Eigen::MatrixXd generator() const;
};

// R[k'<-k] = 2 pi |F(vertex)|^2 delta_eta(w(k)-w(k') -+ w_v) x Bose weight.
// The vertex follows the momentum-space coupling: emission into the ground
// well carries F^g(k'), absorption F^g(k); the excited well swaps the two.
// The Bose factor is evaluated at the actual level gap so detailed balance
// holds exactly per connected pair. Throws DomainError for eta <= 0.
RateMatrix build_rate_matrix(const ExcitonBand& band, const CouplingSet& c,
                             const VibrationSpec& vib, double eta,
                             double temperature);

struct PopulationTrajectory {
  std::vector<double> times;
  Eigen::MatrixXd populations;  // (steps+1) x N, rows sum to 1
  // cumulative vibrational quanta exchanged up to each output time
  Eigen::MatrixXd emitted_g, emitted_e, absorbed_g, absorbed_e;  // (steps+1) x 1
};

// Master-equation propagation dP/dt = G P through the matrix exponential of
// an augmented generator, so populations and quanta counters are exact for
// the linear ODE. Throws ValidationError unless p0 is a probability vector.
PopulationTrajectory evolve_populations(const RateMatrix& rates,
                                        const Eigen::VectorXd& p0, double t,
                                        int steps);

struct HeatingReport {
  double initial_energy = 0.0;  // mean exciton energy, eV
  double final_energy = 0.0;
  double emitted_g = 0.0;  // quanta
  double emitted_e = 0.0;
  double absorbed_g = 0.0;
  double absorbed_e = 0.0;
  double vibration_energy = 0.0;  // net energy handed to the lattice, eV
  double closure_residual = 0.0;  // |exciton loss - vibration gain|, eV
  double transitions = 0.0;       // total quanta exchanged
};

HeatingReport heating_report(const PopulationTrajectory& traj,
                             const ExcitonBand& band, double omega_g,
                             double omega_e);

std::vector<double> mean_energy_series(const PopulationTrajectory& traj,
                                       const ExcitonBand& band);

}  // namespace excivib
