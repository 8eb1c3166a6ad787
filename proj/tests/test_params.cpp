#include <doctest.h>

#include <random>

#include "excivib/errors.hpp"
#include "excivib/params.hpp"

using namespace excivib;

namespace {

ModelSpec valid_spec() {
  ModelSpec spec;
  spec.lattice = {6, 2000.0, Boundary::Periodic};
  spec.atom = {1.0, 2.0, deg_to_rad(90.0), 1e12};
  spec.vib = {1e-9, 1e-9, 1, 2};
  return spec;
}

}  // namespace

TEST_CASE("oscillator length matches the hand-evaluated typical numbers") {
  // 1973.2698 / sqrt(2e3) for mc^2 = 1e12 eV, hw_v = 1e-9 eV
  CHECK(oscillator_length(1e12, 1e-9) ==
        doctest::Approx(44.123654107474145).epsilon(1e-13));
  // quadrupling the frequency exactly halves abar
  CHECK(oscillator_length(1e12, 4e-9) ==
        doctest::Approx(44.123654107474145 / 2.0).epsilon(1e-13));
  CHECK(oscillator_length(1e12, 4e-9) ==
        doctest::Approx(22.061827053737073).epsilon(1e-13));
}

TEST_CASE("oscillator length rejects non-positive input") {
  CHECK_THROWS_AS(oscillator_length(0.0, 1e-9), DomainError);
  CHECK_THROWS_AS(oscillator_length(1e12, 0.0), DomainError);
  CHECK_THROWS_AS(oscillator_length(-1e12, 1e-9), DomainError);
}

TEST_CASE("oscillator length decreases monotonically in both arguments") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> mass(1e9, 1e13);
  std::uniform_real_distribution<double> freq(1e-10, 1e-6);
  for (int i = 0; i < 200; ++i) {
    const double mc2 = mass(rng);
    const double wv = freq(rng);
    const double base = oscillator_length(mc2, wv);
    CHECK(oscillator_length(mc2 * 1.5, wv) < base);
    CHECK(oscillator_length(mc2, wv * 1.5) < base);
  }
}

TEST_CASE("unit system constants are positive and fixed") {
  const UnitSystem units;
  CHECK(units.coulomb_factor() == doctest::Approx(14.39964));
  CHECK(units.hbar_c() == doctest::Approx(1973.2698));
  CHECK_THROWS_AS(UnitSystem(0.0, 1973.0), DomainError);
  CHECK_THROWS_AS(UnitSystem(14.4, -1.0), DomainError);
}

TEST_CASE("validate_spec accepts a minimal valid bundle") {
  ModelSpec spec = valid_spec();
  spec.lattice.site_count = 2;
  spec.lattice.boundary = Boundary::Open;
  CHECK_NOTHROW(validate_spec(spec));
}

TEST_CASE("validate_spec names the violated field") {
  ModelSpec spec = valid_spec();
  spec.lattice.site_count = 1;
  CHECK_THROWS_WITH_AS(validate_spec(spec),
                       doctest::Contains("site-count"), ValidationError);

  spec = valid_spec();
  spec.vib.omega_g = 0.0;
  CHECK_THROWS_WITH_AS(validate_spec(spec),
                       doctest::Contains("ground-frequency"), ValidationError);
}

TEST_CASE("validate_spec reports every violation at once") {
  ModelSpec spec = valid_spec();
  spec.lattice.site_count = 0;
  spec.atom.dipole = -1.0;
  spec.vib.omega_e = 0.0;
  try {
    validate_spec(spec);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("site-count") != std::string::npos);
    CHECK(msg.find("dipole") != std::string::npos);
    CHECK(msg.find("excited-frequency") != std::string::npos);
  }
}

TEST_CASE("validate_spec enforces the quanta cap bound") {
  ModelSpec spec = valid_spec();
  spec.vib.q_max = spec.lattice.site_count * spec.vib.n_max + 1;
  CHECK_THROWS_WITH_AS(validate_spec(spec),
                       doctest::Contains("quanta-cap"), ValidationError);
}

TEST_CASE("validate_spec checks the dipole angle range") {
  ModelSpec spec = valid_spec();
  spec.atom.theta = -0.1;
  CHECK_THROWS_AS(validate_spec(spec), ValidationError);
  spec.atom.theta = 3.3;
  CHECK_THROWS_AS(validate_spec(spec), ValidationError);
  // the boundary angles are legal
  spec.atom.theta = 0.0;
  CHECK_NOTHROW(validate_spec(spec));
  spec.atom.theta = deg_to_rad(180.0);
  CHECK_NOTHROW(validate_spec(spec));
}
