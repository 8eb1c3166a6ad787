#include "excivib/polaron.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "excivib/errors.hpp"
#include "excivib/fock.hpp"
#include "excivib/hamiltonian.hpp"

namespace excivib {

namespace {

// (a^dag - a) on a single (n_max+1)-dimensional Fock ladder; real
// antisymmetric.
Eigen::MatrixXd ladder_difference(int n_max) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n_max + 1, n_max + 1);
  for (int n = 0; n < n_max; ++n) {
    const double amp = std::sqrt(n + 1.0);
    m(n + 1, n) = amp;   // a^dag
    m(n, n + 1) = -amp;  // -a
  }
  return m;
}

Eigen::MatrixXd ladder_sum(int n_max) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n_max + 1, n_max + 1);
  for (int n = 0; n < n_max; ++n) {
    const double amp = std::sqrt(n + 1.0);
    m(n + 1, n) = amp;
    m(n, n + 1) = amp;
  }
  return m;
}

Eigen::MatrixXd number_op(int n_max) {
  Eigen::VectorXd diag(n_max + 1);
  for (int n = 0; n <= n_max; ++n) diag[n] = n;
  return diag.asDiagonal();
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace

Eigen::MatrixXd build_shift_generator(double m_g, double m_e, double omega_g,
                                      double omega_e, int n_max) {
  if (n_max < 1) throw DomainError("build_shift_generator: n_max must be >= 1");
  if (omega_g <= 0.0 || omega_e <= 0.0) {
    throw DomainError("build_shift_generator: frequencies must be positive");
  }
  const int d = n_max + 1;
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(d, d);
  // s = (M^g/w_g)(b^dag - b) - (M^e/w_e)(c^dag - c), b-major ordering
  return (m_g / omega_g) * kron(ladder_difference(n_max), eye) -
         (m_e / omega_e) * kron(eye, ladder_difference(n_max));
}

Eigen::MatrixXd single_site_hamiltonian(double omega_a, double omega_g,
                                        double omega_e, double m_g, double m_e,
                                        int n_max) {
  const int d = n_max + 1;
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(d, d);
  Eigen::MatrixXd h =
      omega_a * Eigen::MatrixXd::Identity(d * d, d * d) +
      omega_g * kron(number_op(n_max), eye) +
      omega_e * kron(eye, number_op(n_max)) +
      m_e * kron(eye, ladder_sum(n_max)) - m_g * kron(ladder_sum(n_max), eye);
  return h;
}

Eigen::MatrixXd transform_site_hamiltonian(
    const Eigen::MatrixXd& h_site, const Eigen::MatrixXd& shift_generator) {
  if (h_site.rows() != h_site.cols() ||
      shift_generator.rows() != shift_generator.cols() ||
      h_site.rows() != shift_generator.rows()) {
    throw ShapeError("transform_site_hamiltonian: dimension mismatch");
  }
  // X = exp(-s) is exactly orthogonal for antisymmetric s
  const Eigen::MatrixXd dressing = (-shift_generator).exp();
  return dressing * h_site * dressing.transpose();
}

PolaronFrame build_polaron_frame(const ModelSpec& spec,
                                 const CouplingSet& couplings) {
  PolaronFrame frame;
  frame.n_max = spec.vib.n_max;
  frame.displacement_g = couplings.m_g / spec.vib.omega_g;
  frame.displacement_e = couplings.m_e / spec.vib.omega_e;
  frame.omega_0 = couplings.omega_0;

  const Eigen::MatrixXd shift =
      build_shift_generator(couplings.m_g, couplings.m_e, spec.vib.omega_g,
                            spec.vib.omega_e, frame.n_max);
  frame.dressing = (-shift).exp();

  const int dim = static_cast<int>(frame.dressing.rows());
  frame.unitarity_residual =
      (frame.dressing * frame.dressing.transpose() -
       Eigen::MatrixXd::Identity(dim, dim))
          .cwiseAbs()
          .maxCoeff();

  const Eigen::MatrixXd h_site = single_site_hamiltonian(
      spec.atom.omega_a, spec.vib.omega_g, spec.vib.omega_e, couplings.m_g,
      couplings.m_e, frame.n_max);
  const Eigen::MatrixXd transformed =
      frame.dressing * h_site * frame.dressing.transpose();
  frame.shift_residual = std::abs(transformed(0, 0) - frame.omega_0);
  return frame;
}

DressedVertexReport dressed_transfer_check(const ModelSpec& spec,
                                           const CouplingSet& couplings) {
  // Two-site open chain with the full pattern space (no quanta cap) so the
  // dressing stays a tensor-product rotation.
  ModelSpec two_site = spec;
  two_site.lattice.site_count = 2;
  two_site.lattice.boundary = Boundary::Open;
  two_site.vib.q_max = 4 * two_site.vib.n_max;

  const auto basis = enumerate_basis(two_site.lattice, two_site.vib, 2000000);
  const auto h = assemble_hamiltonian(basis, two_site, couplings, TermAll);

  // sigma = sum_i s_i B_i^dag B_i acts with s on the excited site's modes
  const int n_max = two_site.vib.n_max;
  const int dim = static_cast<int>(basis.size());
  const BasisIndex index(basis);
  Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(dim, dim);
  const double disp_g = couplings.m_g / two_site.vib.omega_g;
  const double disp_e = couplings.m_e / two_site.vib.omega_e;
  for (int col = 0; col < dim; ++col) {
    const FockState& state = basis[col];
    const int site = state.excited_site;
    // (b^dag - b) at the excited site
    if (state.n_b[site] < n_max) {
      FockState up = state;
      up.n_b[site]++;
      const int row = index.find(up);
      if (row >= 0)
        sigma(row, col) += disp_g * std::sqrt(state.n_b[site] + 1.0);
    }
    if (state.n_b[site] > 0) {
      FockState down = state;
      down.n_b[site]--;
      const int row = index.find(down);
      if (row >= 0)
        sigma(row, col) -= disp_g * std::sqrt(static_cast<double>(state.n_b[site]));
    }
    // -(c^dag - c) at the excited site
    if (state.n_c[site] < n_max) {
      FockState up = state;
      up.n_c[site]++;
      const int row = index.find(up);
      if (row >= 0)
        sigma(row, col) -= disp_e * std::sqrt(state.n_c[site] + 1.0);
    }
    if (state.n_c[site] > 0) {
      FockState down = state;
      down.n_c[site]--;
      const int row = index.find(down);
      if (row >= 0)
        sigma(row, col) += disp_e * std::sqrt(static_cast<double>(state.n_c[site]));
    }
  }

  const Eigen::MatrixXd dressing = (-sigma).exp();
  const Eigen::MatrixXd transformed =
      dressing * Eigen::MatrixXd(h.matrix) * dressing.transpose();

  const auto state_index = [&](int excited, int b0, int b1, int c0, int c1) {
    FockState s;
    s.excited_site = excited;
    s.n_b = {static_cast<std::uint8_t>(b0), static_cast<std::uint8_t>(b1)};
    s.n_c = {static_cast<std::uint8_t>(c0), static_cast<std::uint8_t>(c1)};
    const int idx = index.find(s);
    if (idx < 0) throw ShapeError("dressed_transfer_check: state not in basis");
    return idx;
  };

  // hop 1 -> 0: source j = 1, target i = 0
  const int vac_src = state_index(1, 0, 0, 0, 0);
  DressedVertexReport report;
  report.emit_ground_at_source =
      transformed(state_index(0, 0, 1, 0, 0), vac_src);
  report.emit_excited_at_target =
      transformed(state_index(0, 0, 0, 1, 0), vac_src);
  report.absorb_ground_at_target =
      transformed(state_index(0, 0, 0, 0, 0), state_index(1, 1, 0, 0, 0));
  report.absorb_excited_at_source =
      transformed(state_index(0, 0, 0, 0, 0), state_index(1, 0, 0, 0, 1));

  report.dev_emit_ground = std::abs(report.emit_ground_at_source - couplings.f_g);
  report.dev_emit_excited =
      std::abs(report.emit_excited_at_target - couplings.f_e);
  report.dev_absorb_ground =
      std::abs(report.absorb_ground_at_target - couplings.f_g);
  report.dev_absorb_excited =
      std::abs(report.absorb_excited_at_source - couplings.f_e);
  return report;
}

}  // namespace excivib
