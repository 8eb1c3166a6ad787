#include "excivib/hamiltonian.hpp"

#include <cmath>
#include <sstream>

#include "excivib/errors.hpp"

namespace excivib {

namespace {

using Triplet = Eigen::Triplet<double>;

// Applies one ladder move (delta = +1/-1) to mode `site` of `occ`, returning
// the matrix-element factor sqrt(n+1) / sqrt(n), or 0 when the move leaves
// the truncated space.
double ladder(std::vector<std::uint8_t>& occ, int site, int delta, int n_max,
              int total, int q_max) {
  const int n = occ[site];
  if (delta > 0) {
    if (n + 1 > n_max || total + 1 > q_max) return 0.0;
    occ[site] = static_cast<std::uint8_t>(n + 1);
    return std::sqrt(n + 1.0);
  }
  if (n == 0) return 0.0;
  occ[site] = static_cast<std::uint8_t>(n - 1);
  return std::sqrt(static_cast<double>(n));
}

struct VertexAction {
  bool ground;  // acts on the b (true) or c (false) family
  bool at_source;
  int delta;  // +1 creation, -1 annihilation
};

VertexAction vertex_action(TransferVertex v) {
  switch (v) {
    case TransferVertex::EmitGroundAtSource:
      return {true, true, +1};
    case TransferVertex::EmitExcitedAtTarget:
      return {false, false, +1};
    case TransferVertex::AbsorbGroundAtTarget:
      return {true, false, -1};
    default:  // AbsorbExcitedAtSource
      return {false, true, -1};
  }
}

void add_vertex_triplets(std::vector<Triplet>& triplets,
                         const std::vector<FockState>& basis,
                         const BasisIndex& index, const LatticeSpec& lattice,
                         const VibrationSpec& vib, TransferVertex vertex,
                         double coupling) {
  if (coupling == 0.0) return;
  const auto action = vertex_action(vertex);
  const auto pairs = neighbor_pairs(lattice);

  for (std::size_t col = 0; col < basis.size(); ++col) {
    const FockState& from = basis[col];
    const int total = from.total_quanta();
    for (const auto& [target, source] : pairs) {
      if (from.excited_site != source) continue;
      FockState to = from;
      to.excited_site = target;
      auto& occ = action.ground ? to.n_b : to.n_c;
      const int site = action.at_source ? source : target;
      const double factor =
          ladder(occ, site, action.delta, vib.n_max, total, vib.q_max);
      if (factor == 0.0) continue;
      const int row = index.find(to);
      if (row < 0) continue;
      triplets.emplace_back(row, static_cast<int>(col), coupling * factor);
    }
  }
}

}  // namespace

std::vector<std::pair<int, int>> neighbor_pairs(const LatticeSpec& lattice) {
  const int n = lattice.site_count;
  std::vector<std::pair<int, int>> pairs;
  if (lattice.boundary == Boundary::Periodic) {
    if (n < 3) {
      throw DomainError(
          "periodic assembly needs N >= 3 (the N=2 ring double-counts its "
          "bond); use an open chain");
    }
    for (int i = 0; i < n; ++i) {
      pairs.emplace_back(i, (i + 1) % n);
      pairs.emplace_back((i + 1) % n, i);
    }
  } else {
    for (int i = 0; i + 1 < n; ++i) {
      pairs.emplace_back(i, i + 1);
      pairs.emplace_back(i + 1, i);
    }
  }
  return pairs;
}

unsigned term_mask_from_string(const std::string& csv) {
  unsigned mask = 0;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "ex") {
      mask |= TermExciton;
    } else if (item == "vib") {
      mask |= TermVibration;
    } else if (item == "onsite") {
      mask |= TermOnSite;
    } else if (item == "transfer") {
      mask |= TermTransfer;
    } else if (!item.empty()) {
      throw ValidationError("unknown Hamiltonian term '" + item +
                            "' (ex|vib|onsite|transfer)");
    }
  }
  return mask;
}

std::string term_mask_to_string(unsigned mask) {
  std::string out;
  const auto append = [&out](const char* name) {
    if (!out.empty()) out += ",";
    out += name;
  };
  if (mask & TermExciton) append("ex");
  if (mask & TermVibration) append("vib");
  if (mask & TermOnSite) append("onsite");
  if (mask & TermTransfer) append("transfer");
  return out;
}

HamiltonianMatrix assemble_hamiltonian(const std::vector<FockState>& basis,
                                       const ModelSpec& spec,
                                       const CouplingSet& couplings,
                                       unsigned terms) {
  if ((terms & TermAll) == 0) {
    throw DomainError("assemble_hamiltonian: empty term mask");
  }
  neighbor_pairs(spec.lattice);  // reject the periodic two-site ring up front
  const int dim = static_cast<int>(basis.size());
  const BasisIndex index(basis);
  const auto& vib = spec.vib;

  std::vector<Triplet> triplets;
  triplets.reserve(basis.size() * 8);

  for (int col = 0; col < dim; ++col) {
    const FockState& state = basis[col];
    double diag = 0.0;
    if (terms & TermExciton) diag += spec.atom.omega_a;
    if (terms & TermVibration) {
      for (int i = 0; i < spec.lattice.site_count; ++i) {
        diag += vib.omega_g * state.n_b[i] + vib.omega_e * state.n_c[i];
      }
    }
    if (diag != 0.0) triplets.emplace_back(col, col, diag);

    if (terms & TermOnSite) {
      const int site = state.excited_site;
      const int total = state.total_quanta();
      // +M^e (c + c^dag) - M^g (b + b^dag), both at the excited site
      for (const int delta : {+1, -1}) {
        if (couplings.m_e != 0.0) {
          FockState to = state;
          const double f =
              ladder(to.n_c, site, delta, vib.n_max, total, vib.q_max);
          const int row = f != 0.0 ? index.find(to) : -1;
          if (row >= 0) triplets.emplace_back(row, col, couplings.m_e * f);
        }
        if (couplings.m_g != 0.0) {
          FockState to = state;
          const double f =
              ladder(to.n_b, site, delta, vib.n_max, total, vib.q_max);
          const int row = f != 0.0 ? index.find(to) : -1;
          if (row >= 0) triplets.emplace_back(row, col, -couplings.m_g * f);
        }
      }
    }
  }

  if ((terms & TermExciton) && couplings.j != 0.0) {
    const auto pairs = neighbor_pairs(spec.lattice);
    for (int col = 0; col < dim; ++col) {
      const FockState& from = basis[col];
      for (const auto& [target, source] : pairs) {
        if (from.excited_site != source) continue;
        FockState to = from;
        to.excited_site = target;
        const int row = index.find(to);
        if (row >= 0) triplets.emplace_back(row, col, couplings.j);
      }
    }
  }

  if (terms & TermTransfer) {
    add_vertex_triplets(triplets, basis, index, spec.lattice, vib,
                        TransferVertex::EmitGroundAtSource, couplings.f_g);
    add_vertex_triplets(triplets, basis, index, spec.lattice, vib,
                        TransferVertex::AbsorbGroundAtTarget, couplings.f_g);
    add_vertex_triplets(triplets, basis, index, spec.lattice, vib,
                        TransferVertex::EmitExcitedAtTarget, couplings.f_e);
    add_vertex_triplets(triplets, basis, index, spec.lattice, vib,
                        TransferVertex::AbsorbExcitedAtSource, couplings.f_e);
  }

  HamiltonianMatrix h;
  h.terms = terms & TermAll;
  h.matrix.resize(dim, dim);
  h.matrix.setFromTriplets(triplets.begin(), triplets.end());
  h.matrix.makeCompressed();

  Eigen::SparseMatrix<double> defect = h.matrix - Eigen::SparseMatrix<double>(h.matrix.transpose());
  double max_defect = 0.0;
  for (int k = 0; k < defect.outerSize(); ++k) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(defect, k); it; ++it) {
      max_defect = std::max(max_defect, std::abs(it.value()));
    }
  }
  h.hermiticity_defect = max_defect;
  return h;
}

Eigen::SparseMatrix<double> transfer_vertex_matrix(
    const std::vector<FockState>& basis, const LatticeSpec& lattice,
    TransferVertex vertex) {
  if (basis.empty()) throw ShapeError("transfer_vertex_matrix: empty basis");
  const int n_sites = lattice.site_count;
  VibrationSpec vib;
  vib.n_max = 0;
  for (const auto& s : basis) {
    for (int i = 0; i < n_sites; ++i) {
      vib.n_max = std::max<int>(vib.n_max, std::max(s.n_b[i], s.n_c[i]));
    }
    vib.q_max = std::max(vib.q_max, s.total_quanta());
  }

  const BasisIndex index(basis);
  std::vector<Triplet> triplets;
  add_vertex_triplets(triplets, basis, index, lattice, vib, vertex, 1.0);

  Eigen::SparseMatrix<double> m(static_cast<int>(basis.size()),
                                static_cast<int>(basis.size()));
  m.setFromTriplets(triplets.begin(), triplets.end());
  m.makeCompressed();
  return m;
}

const char* to_string(TransferVertex v) {
  switch (v) {
    case TransferVertex::EmitGroundAtSource:
      return "emit-ground-at-source";
    case TransferVertex::EmitExcitedAtTarget:
      return "emit-excited-at-target";
    case TransferVertex::AbsorbGroundAtTarget:
      return "absorb-ground-at-target";
    default:
      return "absorb-excited-at-source";
  }
}

}  // namespace excivib
