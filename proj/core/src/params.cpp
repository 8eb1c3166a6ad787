#include "excivib/params.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "excivib/errors.hpp"

namespace excivib {

UnitSystem::UnitSystem(double coulomb_ev_angstrom, double hbar_c_ev_angstrom)
    : coulomb_(coulomb_ev_angstrom), hbar_c_(hbar_c_ev_angstrom) {
  if (coulomb_ <= 0.0 || hbar_c_ <= 0.0) {
    throw DomainError("unit constants must be strictly positive");
  }
}

double oscillator_length(double rest_mass_energy, double omega_v,
                         const UnitSystem& units) {
  if (rest_mass_energy <= 0.0 || omega_v <= 0.0) {
    throw DomainError("oscillator_length: inputs must be positive");
  }
  return units.hbar_c() / std::sqrt(2.0 * rest_mass_energy * omega_v);
}

ModelSpec validate_spec(const ModelSpec& spec) {
  std::vector<std::string> bad;

  if (spec.lattice.site_count < 2) bad.push_back("site-count");
  if (!(spec.lattice.lattice_constant > 0.0)) bad.push_back("lattice-constant");

  if (!(spec.atom.omega_a > 0.0)) bad.push_back("transition-frequency");
  if (!(spec.atom.dipole > 0.0)) bad.push_back("dipole");
  if (!(spec.atom.theta >= 0.0 && spec.atom.theta <= 3.14159265358979323846 + 1e-12))
    bad.push_back("dipole-angle");
  if (!(spec.atom.rest_mass_energy > 0.0)) bad.push_back("rest-mass-energy");

  if (!(spec.vib.omega_g > 0.0)) bad.push_back("ground-frequency");
  if (!(spec.vib.omega_e > 0.0)) bad.push_back("excited-frequency");
  if (spec.vib.n_max < 0) bad.push_back("mode-truncation");
  if (spec.vib.q_max < 0 ||
      spec.vib.q_max > spec.vib.n_max * std::max(spec.lattice.site_count, 0))
    bad.push_back("quanta-cap");

  if (spec.onsite.mode == OnSiteMode::Polynomial) {
    if (spec.onsite.d_g_coeffs.size() < 2) bad.push_back("onsite-ground-coefficients");
    if (spec.onsite.d_e_coeffs.size() < 2) bad.push_back("onsite-excited-coefficients");
  }

  if (!bad.empty()) {
    std::ostringstream msg;
    msg << "invalid spec:";
    for (const auto& field : bad) msg << " " << field << ";";
    throw ValidationError(msg.str());
  }
  return spec;
}

const char* to_string(Boundary b) {
  return b == Boundary::Open ? "open" : "periodic";
}

const char* to_string(OnSiteMode m) {
  return m == OnSiteMode::Direct ? "direct" : "polynomial";
}

Boundary boundary_from_string(const std::string& s) {
  if (s == "open") return Boundary::Open;
  if (s == "periodic") return Boundary::Periodic;
  throw ValidationError("unknown boundary '" + s + "' (open|periodic)");
}

OnSiteMode onsite_mode_from_string(const std::string& s) {
  if (s == "direct") return OnSiteMode::Direct;
  if (s == "polynomial") return OnSiteMode::Polynomial;
  throw ValidationError("unknown onsite mode '" + s + "' (direct|polynomial)");
}

}  // namespace excivib
