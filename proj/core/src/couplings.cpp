#include "excivib/couplings.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "excivib/errors.hpp"

namespace excivib {

double dipole_transfer_j(const AtomSpec& atom, const LatticeSpec& lattice,
                         const UnitSystem& units) {
  const double a = lattice.lattice_constant;
  const double cos_t = std::cos(atom.theta);
  return atom.dipole * atom.dipole * (1.0 - 3.0 * cos_t * cos_t) *
         units.coulomb_factor() / (a * a * a);
}

double transfer_vibration_f(const AtomSpec& atom, const LatticeSpec& lattice,
                            double omega_v, const UnitSystem& units) {
  const double a = lattice.lattice_constant;
  const double abar = oscillator_length(atom.rest_mass_energy, omega_v, units);
  const double cos_t = std::cos(atom.theta);
  return abar * 3.0 * atom.dipole * atom.dipole * (3.0 * cos_t * cos_t - 1.0) *
         units.coulomb_factor() / (a * a * a * a);
}

std::pair<double, double> onsite_coupling_m(const OnSiteSlopeModel& model,
                                            const VibrationSpec& vib,
                                            const AtomSpec& atom,
                                            const UnitSystem& units) {
  if (model.mode == OnSiteMode::Direct) {
    return {model.m_g, model.m_e};
  }
  if (model.d_g_coeffs.size() < 2 || model.d_e_coeffs.size() < 2) {
    throw DomainError("polynomial onsite model needs degree >= 1");
  }
  const double slope_g = model.d_g_coeffs[1];
  const double slope_e = model.d_e_coeffs[1];
  if (!std::isfinite(slope_g) || !std::isfinite(slope_e)) {
    throw DomainError("polynomial onsite model has a non-finite slope");
  }
  const double abar_g =
      oscillator_length(atom.rest_mass_energy, vib.omega_g, units);
  const double abar_e =
      oscillator_length(atom.rest_mass_energy, vib.omega_e, units);
  return {abar_g * slope_g, abar_e * slope_e};
}

std::pair<double, double> polaron_shift(double m_g, double m_e, double omega_g,
                                        double omega_e, double omega_a) {
  if (omega_g <= 0.0 || omega_e <= 0.0) {
    throw DomainError("polaron_shift: vibration frequencies must be positive");
  }
  const double delta = m_g * m_g / omega_g + m_e * m_e / omega_e;
  return {delta, omega_a - delta};
}

CouplingSet compute_couplings(const ModelSpec& spec) {
  CouplingSet c;
  c.j = dipole_transfer_j(spec.atom, spec.lattice, spec.units);
  c.f_g = transfer_vibration_f(spec.atom, spec.lattice, spec.vib.omega_g,
                               spec.units);
  c.f_e = transfer_vibration_f(spec.atom, spec.lattice, spec.vib.omega_e,
                               spec.units);
  std::tie(c.m_g, c.m_e) =
      onsite_coupling_m(spec.onsite, spec.vib, spec.atom, spec.units);
  std::tie(c.delta, c.omega_0) = polaron_shift(
      c.m_g, c.m_e, spec.vib.omega_g, spec.vib.omega_e, spec.atom.omega_a);
  c.abar_g =
      oscillator_length(spec.atom.rest_mass_energy, spec.vib.omega_g, spec.units);
  c.abar_e =
      oscillator_length(spec.atom.rest_mass_energy, spec.vib.omega_e, spec.units);
  return c;
}

double coupling_consistency(const CouplingSet& c, const VibrationSpec& vib,
                            const AtomSpec& atom) {
  const auto [delta, omega_0] =
      polaron_shift(c.m_g, c.m_e, vib.omega_g, vib.omega_e, atom.omega_a);
  const auto rel = [](double expected, double stored) {
    const double scale = std::max(std::abs(expected), 1e-300);
    return std::abs(expected - stored) / scale;
  };
  return std::max(rel(delta, c.delta), rel(omega_0, c.omega_0));
}

RegimeReport classify_regime(const CouplingSet& c, double lower, double upper) {
  const double min_m = std::min(std::abs(c.m_g), std::abs(c.m_e));
  const double max_f = std::max(std::abs(c.f_g), std::abs(c.f_e));
  if (min_m == 0.0 && std::max(std::abs(c.m_g), std::abs(c.m_e)) == 0.0 &&
      max_f == 0.0) {
    throw DomainError("classify_regime: all couplings are zero");
  }

  RegimeReport report;
  report.lower = lower;
  report.upper = upper;
  report.ratio =
      max_f > 0.0 ? min_m / max_f : std::numeric_limits<double>::infinity();
  if (report.ratio > upper) {
    report.regime = Regime::StrongOnSite;
  } else if (report.ratio < lower) {
    report.regime = Regime::TransferDominated;
  } else {
    report.regime = Regime::Intermediate;
  }
  return report;
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::StrongOnSite:
      return "strong-onsite";
    case Regime::TransferDominated:
      return "transfer-dominated";
    default:
      return "intermediate";
  }
}

}  // namespace excivib
