#include <doctest.h>

#include <cmath>
#include <random>

#include "excivib/couplings.hpp"
#include "excivib/errors.hpp"

using namespace excivib;

namespace {

constexpr double kMagicTheta = 0.9553166181245093;  // arccos(1/sqrt(3))

ModelSpec typical_spec() {
  ModelSpec spec;
  spec.lattice = {6, 2000.0, Boundary::Periodic};
  spec.atom = {1.0, 2.0, deg_to_rad(90.0), 1e12};
  spec.vib = {1e-9, 1e-9, 1, 2};
  return spec;
}

}  // namespace

TEST_CASE("dipole transfer J reproduces the hand-evaluated values") {
  ModelSpec spec = typical_spec();
  CHECK(dipole_transfer_j(spec.atom, spec.lattice) ==
        doctest::Approx(7.19982e-9).epsilon(1e-12));

  spec.atom.theta = 0.0;
  CHECK(dipole_transfer_j(spec.atom, spec.lattice) ==
        doctest::Approx(-1.439964e-8).epsilon(1e-12));

  // theta = 0 has twice the magnitude of theta = 90 with the opposite sign
  spec.atom.theta = deg_to_rad(90.0);
  const double j90 = dipole_transfer_j(spec.atom, spec.lattice);
  spec.atom.theta = 0.0;
  CHECK(dipole_transfer_j(spec.atom, spec.lattice) ==
        doctest::Approx(-2.0 * j90).epsilon(1e-13));
}

TEST_CASE("J vanishes at the magic angle") {
  ModelSpec spec = typical_spec();
  spec.atom.theta = kMagicTheta;
  CHECK(std::abs(dipole_transfer_j(spec.atom, spec.lattice)) < 1e-22);
}

TEST_CASE("transfer-vibration F reproduces the hand-evaluated value") {
  const ModelSpec spec = typical_spec();
  const double f = transfer_vibration_f(spec.atom, spec.lattice, 1e-9);
  CHECK(f == doctest::Approx(-4.765235509741118e-10).epsilon(1e-13));
}

TEST_CASE("F shares the angular zero of J") {
  ModelSpec spec = typical_spec();
  spec.atom.theta = kMagicTheta;
  CHECK(std::abs(transfer_vibration_f(spec.atom, spec.lattice, 1e-9)) < 1e-23);
}

TEST_CASE("F/J equals -3 abar/a for randomized inputs") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> mu(0.1, 10.0);
  std::uniform_real_distribution<double> a(100.0, 1e5);
  std::uniform_real_distribution<double> theta(0.0, 3.14159);
  std::uniform_real_distribution<double> mc2(1e10, 1e13);
  std::uniform_real_distribution<double> wv_exp(-10.0, -7.0);

  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    ModelSpec spec = typical_spec();
    spec.atom.dipole = mu(rng);
    spec.lattice.lattice_constant = a(rng);
    spec.atom.theta = theta(rng);
    spec.atom.rest_mass_energy = mc2(rng);
    const double wv = std::pow(10.0, wv_exp(rng));

    const double j = dipole_transfer_j(spec.atom, spec.lattice);
    const double f = transfer_vibration_f(spec.atom, spec.lattice, wv);
    if (std::abs(j) < 1e-30) continue;  // magic-angle neighborhood
    ++checked;

    const double abar = oscillator_length(spec.atom.rest_mass_energy, wv);
    const double expected = -3.0 * abar / spec.lattice.lattice_constant;
    CHECK(f / j == doctest::Approx(expected).epsilon(1e-12));
    // opposite signs whenever both are nonzero
    CHECK(std::signbit(f) != std::signbit(j));
  }
  CHECK(checked > 400);
}

TEST_CASE("scaling laws: J ~ a^-3 and F ~ a^-4") {
  ModelSpec spec = typical_spec();
  const double j1 = dipole_transfer_j(spec.atom, spec.lattice);
  const double f1 = transfer_vibration_f(spec.atom, spec.lattice, 1e-9);
  spec.lattice.lattice_constant *= 2.0;
  CHECK(dipole_transfer_j(spec.atom, spec.lattice) ==
        doctest::Approx(j1 / 8.0).epsilon(1e-13));
  CHECK(transfer_vibration_f(spec.atom, spec.lattice, 1e-9) ==
        doctest::Approx(f1 / 16.0).epsilon(1e-13));
}

TEST_CASE("onsite coupling in direct mode returns the stored values") {
  const ModelSpec spec = typical_spec();
  OnSiteSlopeModel model;
  model.mode = OnSiteMode::Direct;
  const auto [mg0, me0] = onsite_coupling_m(model, spec.vib, spec.atom);
  CHECK(mg0 == 0.0);
  CHECK(me0 == 0.0);

  model.m_g = 3e-11;
  model.m_e = 5e-11;
  const auto [mg, me] = onsite_coupling_m(model, spec.vib, spec.atom);
  CHECK(mg == 3e-11);
  CHECK(me == 5e-11);
}

TEST_CASE("onsite coupling in polynomial mode follows the slope") {
  const ModelSpec spec = typical_spec();
  OnSiteSlopeModel model;
  model.mode = OnSiteMode::Polynomial;
  model.d_g_coeffs = {0.0, 0.0};
  model.d_e_coeffs = {0.0, 1e-11};  // c1 = 1e-11 eV/Angstrom
  const auto [mg, me] = onsite_coupling_m(model, spec.vib, spec.atom);
  CHECK(mg == 0.0);
  // abar * c1 = 44.1236541... * 1e-11
  CHECK(me == doctest::Approx(4.412365410747414e-10).epsilon(1e-13));
}

TEST_CASE("polynomial and direct modes agree when cross-checked") {
  const ModelSpec spec = typical_spec();
  OnSiteSlopeModel poly;
  poly.mode = OnSiteMode::Polynomial;
  poly.d_g_coeffs = {0.0, 7e-12};
  poly.d_e_coeffs = {0.0, 2e-12};
  const auto [mg, me] = onsite_coupling_m(poly, spec.vib, spec.atom);

  OnSiteSlopeModel direct;
  direct.m_g = mg;
  direct.m_e = me;
  const auto [mg2, me2] = onsite_coupling_m(direct, spec.vib, spec.atom);
  CHECK(mg2 == mg);
  CHECK(me2 == me);
}

TEST_CASE("doubling the frequency scales polynomial M by 1/sqrt(2)") {
  ModelSpec spec = typical_spec();
  OnSiteSlopeModel model;
  model.mode = OnSiteMode::Polynomial;
  model.d_g_coeffs = {0.0, 1e-11};
  model.d_e_coeffs = {0.0, 1e-11};
  const auto [mg1, me1] = onsite_coupling_m(model, spec.vib, spec.atom);
  spec.vib.omega_g *= 2.0;
  spec.vib.omega_e *= 2.0;
  const auto [mg2, me2] = onsite_coupling_m(model, spec.vib, spec.atom);
  CHECK(mg2 == doctest::Approx(mg1 / std::sqrt(2.0)).epsilon(1e-13));
  CHECK(me2 == doctest::Approx(me1 / std::sqrt(2.0)).epsilon(1e-13));
}

TEST_CASE("polynomial mode needs degree >= 1") {
  const ModelSpec spec = typical_spec();
  OnSiteSlopeModel model;
  model.mode = OnSiteMode::Polynomial;
  model.d_g_coeffs = {1e-9};
  model.d_e_coeffs = {1e-9};
  CHECK_THROWS_AS(onsite_coupling_m(model, spec.vib, spec.atom), DomainError);
}

TEST_CASE("polaron shift hand values and limits") {
  // uncoupled limit
  auto [d0, w0] = polaron_shift(0.0, 0.0, 1e-9, 1e-9, 1.0);
  CHECK(d0 == 0.0);
  CHECK(w0 == 1.0);
  // (5e-11)^2 / 1e-9 = 2.5e-12
  auto [d1, w1] = polaron_shift(5e-11, 0.0, 1e-9, 1e-9, 1.0);
  CHECK(d1 == doctest::Approx(2.5e-12).epsilon(1e-13));
  CHECK(w1 == doctest::Approx(1.0 - 2.5e-12).epsilon(1e-15));
  // additivity of the two species
  auto [dg, _wg] = polaron_shift(5e-11, 0.0, 1e-9, 2e-9, 1.0);
  auto [de, _we] = polaron_shift(0.0, 7e-11, 1e-9, 2e-9, 1.0);
  auto [dboth, _wb] = polaron_shift(5e-11, 7e-11, 1e-9, 2e-9, 1.0);
  CHECK(dboth == doctest::Approx(dg + de).epsilon(1e-14));
}

TEST_CASE("polaron shift is symmetric under species exchange and nonnegative") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> m(-1e-10, 1e-10);
  std::uniform_real_distribution<double> w(1e-10, 1e-8);
  for (int i = 0; i < 300; ++i) {
    const double mg = m(rng), me = m(rng), wg = w(rng), we = w(rng);
    const auto [d1, u1] = polaron_shift(mg, me, wg, we, 1.0);
    const auto [d2, u2] = polaron_shift(me, mg, we, wg, 1.0);
    CHECK(d1 == doctest::Approx(d2).epsilon(1e-14));
    CHECK(d1 >= 0.0);
    CHECK(u1 == doctest::Approx(u2).epsilon(1e-14));
  }
}

TEST_CASE("compute_couplings stays self-consistent") {
  ModelSpec spec = typical_spec();
  spec.onsite.m_g = 4e-11;
  spec.onsite.m_e = 2e-11;
  const auto c = compute_couplings(spec);
  CHECK(coupling_consistency(c, spec.vib, spec.atom) < 1e-12);
  CHECK(c.abar_g == doctest::Approx(44.123654107474145).epsilon(1e-13));
}

TEST_CASE("regime classification follows the thresholds") {
  CouplingSet c;
  c.f_g = c.f_e = 1e-10;

  c.m_g = c.m_e = 1e-8;  // ratio 100
  CHECK(classify_regime(c).regime == Regime::StrongOnSite);

  c.m_g = c.m_e = 1e-13;  // ratio 0.001
  CHECK(classify_regime(c).regime == Regime::TransferDominated);

  c.m_g = c.m_e = 1e-10;  // ratio 1
  const auto report = classify_regime(c);
  CHECK(report.regime == Regime::Intermediate);
  CHECK(report.ratio == doctest::Approx(1.0));
  CHECK(report.lower == 0.1);
  CHECK(report.upper == 10.0);
}

TEST_CASE("regime classification handles missing transfer coupling") {
  CouplingSet c;
  c.m_g = c.m_e = 1e-10;
  c.f_g = c.f_e = 0.0;
  CHECK(classify_regime(c).regime == Regime::StrongOnSite);
}

TEST_CASE("all-zero couplings are a degenerate input") {
  CouplingSet c;
  CHECK_THROWS_AS(classify_regime(c), DomainError);
}
