#pragma once

#include <utility>

#include "excivib/params.hpp"

namespace excivib {

// Closed-form coupling constants of the nearest-neighbor exciton-vibration
// model. All energies in eV (hbar included), lengths in Angstrom.
struct CouplingSet {
  double j = 0.0;        // hJ, dipole-dipole transfer
  double f_g = 0.0;      // hF^g, transfer-vibration coupling, ground well
  double f_e = 0.0;      // hF^e, excited well
  double m_g = 0.0;      // hM^g, on-site coupling, ground well
  double m_e = 0.0;      // hM^e
  double delta = 0.0;    // hDelta = M_g^2/w_g + M_e^2/w_e, polaron shift
  double omega_0 = 0.0;  // h*omega_0 = h*omega_a - hDelta
  double abar_g = 0.0;   // oscillator length, ground well, Angstrom
  double abar_e = 0.0;
};

enum class Regime { StrongOnSite, TransferDominated, Intermediate };

struct RegimeReport {
  Regime regime = Regime::Intermediate;
  double ratio = 0.0;  // min(M^g, M^e) / max(|F^g|, |F^e|)
  double lower = 0.0;  // thresholds used
  double upper = 0.0;
};

// hJ = mu^2 (1 - 3 cos^2 theta) / (4 pi eps0 a^3)
double dipole_transfer_j(const AtomSpec& atom, const LatticeSpec& lattice,
                         const UnitSystem& units = {});

// hF^lambda = abar^lambda * 3 mu^2 (3 cos^2 theta - 1) / (4 pi eps0 a^4);
// the sign of (3 cos^2 theta - 1) is kept, so F and J are always opposed.
double transfer_vibration_f(const AtomSpec& atom, const LatticeSpec& lattice,
                            double omega_v, const UnitSystem& units = {});

// Direct mode returns the stored values; polynomial mode returns
// abar^lambda times the linear coefficient of D^lambda (slope at u = 0).
// Throws DomainError in polynomial mode when the degree is < 1.
std::pair<double, double> onsite_coupling_m(const OnSiteSlopeModel& model,
                                            const VibrationSpec& vib,
                                            const AtomSpec& atom,
                                            const UnitSystem& units = {});

// (hDelta, h*omega_0); Delta >= 0 for all real M.
std::pair<double, double> polaron_shift(double m_g, double m_e, double omega_g,
                                        double omega_e, double omega_a);

CouplingSet compute_couplings(const ModelSpec& spec);

// Recomputes Delta and omega_0 from the stored M and the given frequencies;
// returns the largest relative deviation against the stored fields.
double coupling_consistency(const CouplingSet& c, const VibrationSpec& vib,
                            const AtomSpec& atom);

// Throws DomainError when every one of M^g, M^e, F^g, F^e is zero.
RegimeReport classify_regime(const CouplingSet& c, double lower = 0.1,
                             double upper = 10.0);

const char* to_string(Regime r);

}  // namespace excivib
