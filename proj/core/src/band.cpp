#include "excivib/band.hpp"

#include <algorithm>
#include <cmath>

#include "excivib/errors.hpp"

namespace excivib {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
}  // namespace

MomentumGrid build_grid(const LatticeSpec& lattice) {
  if (lattice.boundary != Boundary::Periodic) {
    throw DomainError("momentum grid requires a periodic boundary");
  }
  const int n_sites = lattice.site_count;
  const double a = lattice.lattice_constant;

  MomentumGrid grid;
  grid.site_count = n_sites;
  grid.lattice_constant = a;
  grid.modes.reserve(n_sites);

  const int lo = (n_sites % 2 == 0) ? -n_sites / 2 + 1 : -(n_sites - 1) / 2;
  const int hi = (n_sites % 2 == 0) ? n_sites / 2 : (n_sites - 1) / 2;
  for (int n = lo; n <= hi; ++n) {
    grid.modes.push_back({n, kTwoPi * n / (n_sites * a)});
  }
  return grid;
}

double ExcitonBand::bandwidth() const {
  const auto [lo, hi] = std::minmax_element(omega.begin(), omega.end());
  return *hi - *lo;
}

int ExcitonBand::argmin_mode() const {
  return static_cast<int>(
      std::min_element(omega.begin(), omega.end()) - omega.begin());
}

ExcitonBand exciton_dispersion(const MomentumGrid& grid, double omega_a,
                               double j) {
  ExcitonBand band;
  band.grid = grid;
  band.omega_a = omega_a;
  band.j = j;
  band.omega.reserve(grid.modes.size());
  for (const auto& mode : grid.modes) {
    band.omega.push_back(omega_a +
                         2.0 * j * std::cos(mode.k * grid.lattice_constant));
  }
  return band;
}

std::vector<double> vertex_fk(const MomentumGrid& grid, double f) {
  std::vector<double> fk;
  fk.reserve(grid.modes.size());
  const double norm = 2.0 / std::sqrt(static_cast<double>(grid.site_count));
  for (const auto& mode : grid.modes) {
    fk.push_back(norm * f * std::cos(mode.k * grid.lattice_constant));
  }
  return fk;
}

double golden_rule_rate(double fk) { return kTwoPi * fk * fk; }

double gaussian_delta(double x, double eta) {
  if (eta <= 0.0) throw DomainError("gaussian_delta: eta must be positive");
  const double z = x / eta;
  return std::exp(-0.5 * z * z) / (eta * std::sqrt(kTwoPi));
}

double default_eta(const ExcitonBand& band) {
  // level spacing at band center: d(omega)/dn = 4 pi |J| / N
  return 0.1 * 4.0 * kPi * std::abs(band.j) / band.grid.site_count;
}

double discrete_dos(const ExcitonBand& band, int k_index, double omega_v,
                    bool emission, double eta) {
  const double sign = emission ? -1.0 : 1.0;
  double dos = 0.0;
  for (std::size_t to = 0; to < band.omega.size(); ++to) {
    if (static_cast<int>(to) == k_index) continue;
    dos += gaussian_delta(band.omega[k_index] - band.omega[to] + sign * omega_v,
                          eta);
  }
  return dos;
}

double golden_rule_rate_dos(const ExcitonBand& band,
                            const std::vector<double>& fk, int k_index,
                            double omega_v, bool emission, double eta) {
  return golden_rule_rate(fk[k_index]) *
         discrete_dos(band, k_index, omega_v, emission, eta);
}

std::vector<ScatteringChannel> scattering_channels(const ExcitonBand& band,
                                                   double omega_g,
                                                   double omega_e,
                                                   double eta) {
  std::vector<ScatteringChannel> channels;
  const int n = static_cast<int>(band.omega.size());

  const auto scan = [&](double omega_v, Species species) {
    if (band.bandwidth() + eta < omega_v) return;  // band too narrow
    for (int from = 0; from < n; ++from) {
      for (int to = 0; to < n; ++to) {
        if (to == from) continue;
        const double gap = band.omega[from] - band.omega[to];
        if (gap > 0.0 && std::abs(gap - omega_v) <= eta) {
          channels.push_back({from, to, species, true, gap - omega_v});
        } else if (gap < 0.0 && std::abs(gap + omega_v) <= eta) {
          channels.push_back({from, to, species, false, gap + omega_v});
        }
      }
    }
  };
  scan(omega_g, Species::Ground);
  scan(omega_e, Species::Excited);
  return channels;
}

const char* to_string(Species s) {
  return s == Species::Ground ? "g" : "e";
}

}  // namespace excivib
