#pragma once

#include <string>
#include <vector>

#include "excivib/params.hpp"

namespace excivib {

struct MomentumMode {
  int n;     // integer label
  double k;  // 2 pi n / (N a), 1/Angstrom
};

// First-Brillouin-zone grid with exactly N modes in (-pi/a, pi/a]:
// n in {-N/2+1, ..., N/2} for even N, {-(N-1)/2, ..., (N-1)/2} for odd N.
struct MomentumGrid {
  int site_count = 0;
  double lattice_constant = 0.0;
  std::vector<MomentumMode> modes;  // ascending in k
};

// Requires periodic boundary; open chains have no quasi-momentum basis.
MomentumGrid build_grid(const LatticeSpec& lattice);

struct ExcitonBand {
  MomentumGrid grid;
  std::vector<double> omega;  // h*omega(k), eV, aligned with grid.modes
  double omega_a = 0.0;
  double j = 0.0;

  double bandwidth() const;  // max - min = 4|J|
  int argmin_mode() const;   // index of the lowest level (first on ties)
  // The "band wide enough to supply a vibration quantum" gate.
  bool wider_than(double omega_v) const { return bandwidth() > omega_v; }
};

// h*omega(k) = h*omega_a + 2 hJ cos(ka) per mode.
ExcitonBand exciton_dispersion(const MomentumGrid& grid, double omega_a,
                               double j);

// hF(k) = (2/sqrt(N)) hF cos(ka) per mode.
std::vector<double> vertex_fk(const MomentumGrid& grid, double f);

// Golden-rule expression 2 pi |hF(k)|^2 exactly as written; carries eV^2
// (no final-state density), see golden_rule_rate_dos for the usable rate.
double golden_rule_rate(double fk);

// Normalized Gaussian regularization of the energy delta, 1/eV.
double gaussian_delta(double x, double eta);

// 10% of the level spacing at band center, 4 pi |J| / (10 N).
double default_eta(const ExcitonBand& band);

// Discrete density of final states sum_k' delta_eta(w(k)-w(k') -+ w_v), 1/eV.
double discrete_dos(const ExcitonBand& band, int k_index, double omega_v,
                    bool emission, double eta);

// Labeled variant: verbatim golden rule times the discrete density of final
// states; an actual rate in eV (per hbar).
double golden_rule_rate_dos(const ExcitonBand& band,
                            const std::vector<double>& fk, int k_index,
                            double omega_v, bool emission, double eta);

enum class Species { Ground, Excited };

struct ScatteringChannel {
  int from = 0;  // grid mode index of k
  int to = 0;    // grid mode index of k'
  Species species = Species::Ground;
  bool emission = true;
  double mismatch = 0.0;  // w(k) - w(k') -+ w_v, eV
};

// Energy-conserving channels within the hard window |mismatch| <= eta.
// Emission requires w(k) > w(k'), absorption w(k) < w(k').
std::vector<ScatteringChannel> scattering_channels(const ExcitonBand& band,
                                                   double omega_g,
                                                   double omega_e, double eta);

const char* to_string(Species s);

}  // namespace excivib
