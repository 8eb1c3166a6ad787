#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "excivib/band.hpp"
#include "excivib/errors.hpp"

using namespace excivib;

namespace {

constexpr double kPi = 3.14159265358979323846;

LatticeSpec ring(int n, double a = 1.0) { return {n, a, Boundary::Periodic}; }

}  // namespace

TEST_CASE("momentum grid enumerations match the half-open BZ convention") {
  SUBCASE("N=4") {
    const auto grid = build_grid(ring(4));
    REQUIRE(grid.modes.size() == 4);
    CHECK(grid.modes[0].k == doctest::Approx(-kPi / 2));
    CHECK(grid.modes[1].k == doctest::Approx(0.0));
    CHECK(grid.modes[2].k == doctest::Approx(kPi / 2));
    CHECK(grid.modes[3].k == doctest::Approx(kPi));
  }
  SUBCASE("N=2") {
    const auto grid = build_grid(ring(2));
    REQUIRE(grid.modes.size() == 2);
    CHECK(grid.modes[0].k == doctest::Approx(0.0));
    CHECK(grid.modes[1].k == doctest::Approx(kPi));
  }
  SUBCASE("N=5") {
    const auto grid = build_grid(ring(5));
    REQUIRE(grid.modes.size() == 5);
    CHECK(grid.modes[0].k == doctest::Approx(-4 * kPi / 5));
    CHECK(grid.modes[2].k == doctest::Approx(0.0));
    CHECK(grid.modes[4].k == doctest::Approx(4 * kPi / 5));
  }
}

TEST_CASE("grid modes stay inside (-pi/a, pi/a] and are distinct") {
  for (int n = 2; n <= 17; ++n) {
    const double a = 2.5;
    const auto grid = build_grid(ring(n, a));
    REQUIRE(static_cast<int>(grid.modes.size()) == n);
    for (std::size_t i = 0; i < grid.modes.size(); ++i) {
      CHECK(grid.modes[i].k > -kPi / a - 1e-12);
      CHECK(grid.modes[i].k <= kPi / a + 1e-12);
      if (i > 0) CHECK(grid.modes[i].k > grid.modes[i - 1].k);
    }
  }
}

TEST_CASE("open boundaries have no momentum grid") {
  CHECK_THROWS_AS(build_grid({4, 1.0, Boundary::Open}), DomainError);
}

TEST_CASE("dispersion hits the cosine special points") {
  const auto grid = build_grid(ring(4));
  const double wa = 1.0, j = 1e-8;
  const auto band = exciton_dispersion(grid, wa, j);
  // k = 0 -> wa + 2J ; k = pi -> wa - 2J ; k = pi/2 -> wa
  CHECK(band.omega[1] == doctest::Approx(wa + 2 * j).epsilon(1e-15));
  CHECK(band.omega[3] == doctest::Approx(wa - 2 * j).epsilon(1e-15));
  CHECK(band.omega[2] == doctest::Approx(wa).epsilon(1e-15));
  CHECK(band.bandwidth() == doctest::Approx(4 * std::abs(j)).epsilon(1e-12));
}

TEST_CASE("dispersion and vertex are even in k") {
  const auto grid = build_grid(ring(9, 1.7));
  const auto band = exciton_dispersion(grid, 2.0, -3e-8);
  const auto fk = vertex_fk(grid, 5e-9);
  for (std::size_t i = 0; i < grid.modes.size(); ++i) {
    for (std::size_t l = 0; l < grid.modes.size(); ++l) {
      if (grid.modes[l].n == -grid.modes[i].n) {
        CHECK(band.omega[i] == doctest::Approx(band.omega[l]).epsilon(1e-15));
        CHECK(fk[i] == doctest::Approx(fk[l]).epsilon(1e-15));
      }
    }
  }
}

TEST_CASE("band edge ordering follows the sign of J") {
  const auto grid = build_grid(ring(8));
  const auto attract = exciton_dispersion(grid, 1.0, -2e-8);
  CHECK(attract.grid.modes[attract.argmin_mode()].k == doctest::Approx(0.0));
  const auto repulse = exciton_dispersion(grid, 1.0, +2e-8);
  CHECK(repulse.grid.modes[repulse.argmin_mode()].k == doctest::Approx(kPi));
}

TEST_CASE("vertex values and the N=4 sum rule") {
  const auto grid = build_grid(ring(4));
  const double f = -4.765e-10;
  const auto fk = vertex_fk(grid, f);
  // k = 0 -> 2F/sqrt(N); k = +-pi/2 -> 0
  CHECK(fk[1] == doctest::Approx(2.0 * f / 2.0).epsilon(1e-15));
  CHECK(fk[0] == doctest::Approx(0.0).epsilon(1e-24));
  CHECK(fk[2] == doctest::Approx(0.0).epsilon(1e-24));
  double sum = 0.0;
  for (const double v : fk) sum += v * v;
  CHECK(sum == doctest::Approx(2.0 * f * f).epsilon(1e-13));
}

TEST_CASE("verbatim golden rule expression") {
  CHECK(golden_rule_rate(0.0) == 0.0);
  const double w1 = golden_rule_rate(4.77e-10);
  CHECK(w1 == doctest::Approx(2.0 * kPi * 4.77e-10 * 4.77e-10).epsilon(1e-14));
  CHECK(golden_rule_rate(2.0 * 4.77e-10) == doctest::Approx(4.0 * w1));
}

TEST_CASE("gaussian delta is normalized") {
  const double eta = 3e-10;
  double sum = 0.0;
  const double dx = eta / 200.0;
  for (double x = -10 * eta; x <= 10 * eta; x += dx) {
    sum += gaussian_delta(x, eta) * dx;
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-6));
  CHECK_THROWS_AS(gaussian_delta(0.0, 0.0), DomainError);
}

TEST_CASE("dos-weighted rate carries the density of final states") {
  const auto grid = build_grid(ring(24));
  const double j = 1e-8;
  const auto band = exciton_dispersion(grid, 1.0, j);
  const auto fk = vertex_fk(grid, 5e-10);
  const double eta = default_eta(band);
  const double wv = 1.5 * j;

  const int top = band.argmin_mode() == 0 ? 1 : 0;  // any mode works
  const double dos = discrete_dos(band, top, wv, true, eta);
  CHECK(golden_rule_rate_dos(band, fk, top, wv, true, eta) ==
        doctest::Approx(golden_rule_rate(fk[top]) * dos).epsilon(1e-13));
}

TEST_CASE("flat band has no channels") {
  const auto grid = build_grid(ring(10));
  const auto band = exciton_dispersion(grid, 1.0, 0.0);
  const auto channels = scattering_channels(band, 1e-9, 1e-9, 1e-12);
  CHECK(channels.empty());
}

TEST_CASE("constructed resonance appears as a channel") {
  // N=6: cos(ka) in {1, 1/2, -1/2, -1}; emission gap from k=0 to k=2pi/6 is J
  const auto grid = build_grid(ring(6));
  const double j = 1e-8;
  const auto band = exciton_dispersion(grid, 1.0, j);
  const double wv = j;
  const auto channels = scattering_channels(band, wv, 1e-3, 1e-14);

  int k0 = -1, k1 = -1;
  for (std::size_t i = 0; i < grid.modes.size(); ++i) {
    if (grid.modes[i].n == 0) k0 = static_cast<int>(i);
    if (grid.modes[i].n == 1) k1 = static_cast<int>(i);
  }
  bool found_emission = false, found_absorption = false;
  for (const auto& ch : channels) {
    CHECK(std::abs(ch.mismatch) <= 1e-14);
    if (ch.from == k0 && ch.to == k1 && ch.emission &&
        ch.species == Species::Ground)
      found_emission = true;
    if (ch.from == k1 && ch.to == k0 && !ch.emission &&
        ch.species == Species::Ground)
      found_absorption = true;
  }
  CHECK(found_emission);
  CHECK(found_absorption);
}

TEST_CASE("channel list is antisymmetric under emission/absorption swap") {
  const auto grid = build_grid(ring(12));
  const auto band = exciton_dispersion(grid, 1.0, 2e-8);
  const double eta = 2.0 * default_eta(band);
  const auto channels = scattering_channels(band, 1.3e-8, 2.2e-8, eta);
  CHECK(!channels.empty());
  for (const auto& ch : channels) {
    bool partner = false;
    for (const auto& other : channels) {
      if (other.from == ch.to && other.to == ch.from &&
          other.species == ch.species && other.emission != ch.emission) {
        partner = true;
        break;
      }
    }
    CHECK(partner);
  }
}

TEST_CASE("dense band: every mode above the floor has an emission partner") {
  const int n = 128;
  const auto grid = build_grid(ring(n));
  const double j = 1e-8;
  const auto band = exciton_dispersion(grid, 1.0, j);
  const double wv = 0.5 * j;
  // window welcoming half the widest level spacing (band center, 4piJ/N)
  const double eta = 0.6 * 4.0 * kPi * j / n;
  const auto channels = scattering_channels(band, wv, wv * 1e6, eta);

  const double floor = *std::min_element(band.omega.begin(), band.omega.end());
  for (int k = 0; k < n; ++k) {
    int emissions = 0;
    for (const auto& ch : channels) {
      if (ch.from == k && ch.emission) ++emissions;
    }
    if (band.omega[k] >= floor + wv + eta) {
      CHECK(emissions > 0);
    } else if (band.omega[k] < floor + wv - eta) {
      CHECK(emissions == 0);
    }
  }
}

TEST_CASE("bandwidth gate") {
  const auto grid = build_grid(ring(8));
  const auto band = exciton_dispersion(grid, 1.0, 1e-8);
  CHECK(band.wider_than(3.9e-8));
  CHECK(!band.wider_than(4.1e-8));
}

TEST_CASE("default broadening is a tenth of the band-center spacing") {
  const double j = -3e-8;
  const auto band = exciton_dispersion(build_grid(ring(10)), 1.0, j);
  CHECK(default_eta(band) ==
        doctest::Approx(0.1 * 4.0 * kPi * std::abs(j) / 10.0).epsilon(1e-14));
}

TEST_CASE("emission dos from the top equals absorption dos from the bottom") {
  // cosine band symmetry: looking down from the maximum mirrors looking up
  // from the minimum. omega_a = 0 keeps the level gaps free of the ulp noise
  // of a large constant offset, which the Gaussian tails would amplify.
  const auto grid = build_grid(ring(12));
  const double j = 2e-8;
  const auto band = exciton_dispersion(grid, 0.0, j);
  const double wv = 1.3e-8, eta = default_eta(band);
  int top = 0, bottom = 0;
  for (int k = 1; k < 12; ++k) {
    if (band.omega[k] > band.omega[top]) top = k;
    if (band.omega[k] < band.omega[bottom]) bottom = k;
  }
  CHECK(discrete_dos(band, top, wv, true, eta) ==
        doctest::Approx(discrete_dos(band, bottom, wv, false, eta))
            .epsilon(1e-12));
}
