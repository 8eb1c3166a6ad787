#pragma once

namespace excivib {

// Fixed eV / Angstrom / e*Angstrom unit system. Frequencies are stored as
// energies (hbar*omega, eV) and rates are reported as energy over hbar, so
// no loose hbar factors appear in any formula.
class UnitSystem {
 public:
  UnitSystem() = default;
  UnitSystem(double coulomb_ev_angstrom, double hbar_c_ev_angstrom);

  // e^2/(4 pi eps0), eV*Angstrom
  double coulomb_factor() const { return coulomb_; }
  // eV*Angstrom
  double hbar_c() const { return hbar_c_; }

 private:
  double coulomb_ = 14.39964;
  double hbar_c_ = 1973.2698;
};

}  // namespace excivib
