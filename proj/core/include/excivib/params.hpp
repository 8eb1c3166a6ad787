#pragma once

#include <string>
#include <vector>

#include "excivib/units.hpp"

namespace excivib {

enum class Boundary { Open, Periodic };

struct LatticeSpec {
  int site_count = 0;             // N
  double lattice_constant = 0.0;  // a, Angstrom
  Boundary boundary = Boundary::Open;
};

struct AtomSpec {
  double omega_a = 0.0;           // hbar*omega_a, eV
  double dipole = 0.0;            // mu, e*Angstrom
  double theta = 0.0;             // angle between dipole and lattice axis, rad
  double rest_mass_energy = 0.0;  // m c^2, eV
};

struct VibrationSpec {
  double omega_g = 0.0;  // hbar*omega_v^g, eV
  double omega_e = 0.0;  // hbar*omega_v^e, eV
  int n_max = 0;         // per-mode Fock truncation
  int q_max = 0;         // cap on total vibrational quanta
};

enum class OnSiteMode { Direct, Polynomial };

// On-site transition-energy shift D^lambda(u). Direct mode carries the
// coupling energies themselves; polynomial mode carries coefficients of
// D^lambda as a power series in the displacement u (c_i in eV/Angstrom^i),
// from which the coupling follows via the slope at u = 0.
struct OnSiteSlopeModel {
  OnSiteMode mode = OnSiteMode::Direct;
  double m_g = 0.0;  // eV
  double m_e = 0.0;  // eV
  std::vector<double> d_g_coeffs;  // c0, c1, c2, ...
  std::vector<double> d_e_coeffs;
};

struct ModelSpec {
  LatticeSpec lattice;
  AtomSpec atom;
  VibrationSpec vib;
  OnSiteSlopeModel onsite;
  UnitSystem units;
};

// Vibration ground-state length abar = hbar*c / sqrt(2 mc^2 hbar*omega_v),
// Angstrom. Throws DomainError on non-positive input.
double oscillator_length(double rest_mass_energy, double omega_v,
                         const UnitSystem& units = {});

// Returns the bundle iff every type invariant holds; otherwise throws
// ValidationError whose message lists each violated field by name.
ModelSpec validate_spec(const ModelSpec& spec);

const char* to_string(Boundary b);
const char* to_string(OnSiteMode m);
Boundary boundary_from_string(const std::string& s);
OnSiteMode onsite_mode_from_string(const std::string& s);

inline double deg_to_rad(double deg) { return deg * 3.14159265358979323846 / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / 3.14159265358979323846; }

}  // namespace excivib
