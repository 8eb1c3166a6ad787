#include "excivib/relaxation.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "excivib/errors.hpp"

namespace excivib {

namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

double bose_occupation(double gap, double temperature) {
  if (temperature <= 0.0) return 0.0;
  return 1.0 / std::expm1(gap / temperature);
}

}  // namespace

Eigen::MatrixXd RateMatrix::total() const {
  return emit_g + emit_e + absorb_g + absorb_e;
}

Eigen::MatrixXd RateMatrix::generator() const {
  Eigen::MatrixXd gen = total();
  for (int k = 0; k < gen.cols(); ++k) {
    gen(k, k) -= gen.col(k).sum();
  }
  return gen;
}

RateMatrix build_rate_matrix(const ExcitonBand& band, const CouplingSet& c,
                             const VibrationSpec& vib, double eta,
                             double temperature) {
  if (eta <= 0.0) throw DomainError("build_rate_matrix: eta must be positive");
  const int n = static_cast<int>(band.omega.size());

  RateMatrix rates;
  rates.grid = band.grid;
  rates.eta = eta;
  rates.temperature = temperature;
  rates.emit_g = Eigen::MatrixXd::Zero(n, n);
  rates.emit_e = Eigen::MatrixXd::Zero(n, n);
  rates.absorb_g = Eigen::MatrixXd::Zero(n, n);
  rates.absorb_e = Eigen::MatrixXd::Zero(n, n);

  const std::vector<double> fk_g = vertex_fk(band.grid, c.f_g);
  const std::vector<double> fk_e = vertex_fk(band.grid, c.f_e);

  // Momentum-space vertices: ground-well emission carries F^g(k'),
  // absorption F^g(k); the excited well swaps initial and final. The Bose
  // factor uses the actual level gap, making detailed balance exact per
  // connected pair.
  for (int from = 0; from < n; ++from) {
    for (int to = 0; to < n; ++to) {
      if (to == from) continue;
      const double gap = band.omega[from] - band.omega[to];
      if (gap == 0.0) continue;  // degenerate pair: no downhill direction
      const double nbar = bose_occupation(std::abs(gap), temperature);
      if (gap > 0.0) {
        rates.emit_g(to, from) = kTwoPi * fk_g[to] * fk_g[to] *
                                 gaussian_delta(gap - vib.omega_g, eta) *
                                 (nbar + 1.0);
        rates.emit_e(to, from) = kTwoPi * fk_e[from] * fk_e[from] *
                                 gaussian_delta(gap - vib.omega_e, eta) *
                                 (nbar + 1.0);
      } else {
        rates.absorb_g(to, from) = kTwoPi * fk_g[from] * fk_g[from] *
                                   gaussian_delta(gap + vib.omega_g, eta) *
                                   nbar;
        rates.absorb_e(to, from) = kTwoPi * fk_e[to] * fk_e[to] *
                                   gaussian_delta(gap + vib.omega_e, eta) *
                                   nbar;
      }
    }
  }
  return rates;
}

PopulationTrajectory evolve_populations(const RateMatrix& rates,
                                        const Eigen::VectorXd& p0, double t,
                                        int steps) {
  const int n = static_cast<int>(rates.grid.modes.size());
  if (p0.size() != n) throw ShapeError("evolve_populations: p0 size mismatch");
  if (steps < 1) throw DomainError("evolve_populations: steps must be >= 1");
  if (p0.minCoeff() < 0.0 || std::abs(p0.sum() - 1.0) > 1e-9) {
    throw ValidationError("evolve_populations: p0 is not a probability vector");
  }

  // Augmented generator: populations plus cumulative per-species counters.
  // The counters integrate the emission/absorption fluxes exactly.
  Eigen::MatrixXd aug = Eigen::MatrixXd::Zero(n + 4, n + 4);
  aug.topLeftCorner(n, n) = rates.generator();
  aug.row(n).head(n) = rates.emit_g.colwise().sum();
  aug.row(n + 1).head(n) = rates.emit_e.colwise().sum();
  aug.row(n + 2).head(n) = rates.absorb_g.colwise().sum();
  aug.row(n + 3).head(n) = rates.absorb_e.colwise().sum();

  const double dt = t / steps;
  const Eigen::MatrixXd phi = (aug * dt).exp();

  PopulationTrajectory traj;
  traj.times.resize(steps + 1);
  traj.populations.resize(steps + 1, n);
  traj.emitted_g.resize(steps + 1, 1);
  traj.emitted_e.resize(steps + 1, 1);
  traj.absorbed_g.resize(steps + 1, 1);
  traj.absorbed_e.resize(steps + 1, 1);

  Eigen::VectorXd state = Eigen::VectorXd::Zero(n + 4);
  state.head(n) = p0;
  for (int s = 0; s <= steps; ++s) {
    traj.times[s] = s * dt;
    traj.populations.row(s) = state.head(n).transpose();
    traj.emitted_g(s, 0) = state[n];
    traj.emitted_e(s, 0) = state[n + 1];
    traj.absorbed_g(s, 0) = state[n + 2];
    traj.absorbed_e(s, 0) = state[n + 3];
    if (s < steps) state = phi * state;
  }
  return traj;
}

std::vector<double> mean_energy_series(const PopulationTrajectory& traj,
                                       const ExcitonBand& band) {
  const int n = static_cast<int>(band.omega.size());
  if (traj.populations.cols() != n) {
    throw ShapeError("mean_energy_series: band/trajectory mismatch");
  }
  std::vector<double> energy(traj.times.size());
  for (std::size_t s = 0; s < traj.times.size(); ++s) {
    double e = 0.0;
    for (int k = 0; k < n; ++k) e += traj.populations(s, k) * band.omega[k];
    energy[s] = e;
  }
  return energy;
}

HeatingReport heating_report(const PopulationTrajectory& traj,
                             const ExcitonBand& band, double omega_g,
                             double omega_e) {
  const auto energy = mean_energy_series(traj, band);
  const int last = static_cast<int>(traj.times.size()) - 1;

  HeatingReport report;
  report.initial_energy = energy.front();
  report.final_energy = energy.back();
  report.emitted_g = traj.emitted_g(last, 0);
  report.emitted_e = traj.emitted_e(last, 0);
  report.absorbed_g = traj.absorbed_g(last, 0);
  report.absorbed_e = traj.absorbed_e(last, 0);
  report.vibration_energy =
      omega_g * (report.emitted_g - report.absorbed_g) +
      omega_e * (report.emitted_e - report.absorbed_e);
  report.closure_residual = std::abs(
      (report.initial_energy - report.final_energy) - report.vibration_energy);
  report.transitions = report.emitted_g + report.emitted_e +
                       report.absorbed_g + report.absorbed_e;
  return report;
}

}  // namespace excivib
