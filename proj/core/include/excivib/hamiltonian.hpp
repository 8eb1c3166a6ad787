#pragma once

#include <string>
#include <vector>

#include <Eigen/SparseCore>

#include "excivib/couplings.hpp"
#include "excivib/fock.hpp"

namespace excivib {

enum TermMask : unsigned {
  TermExciton = 1u << 0,    // site energy + J hopping
  TermVibration = 1u << 1,  // harmonic b / c wells
  TermOnSite = 1u << 2,     // M^lambda coupling at the excited site
  TermTransfer = 1u << 3,   // F^lambda vibration-assisted hopping
  TermAll = TermExciton | TermVibration | TermOnSite | TermTransfer,
};

// Parses "ex,vib,onsite,transfer" (any subset, any order).
unsigned term_mask_from_string(const std::string& csv);
std::string term_mask_to_string(unsigned mask);

struct HamiltonianMatrix {
  Eigen::SparseMatrix<double> matrix;
  unsigned terms = 0;
  double hermiticity_defect = 0.0;  // max |H - H^T|, eV

  int dimension() const { return static_cast<int>(matrix.rows()); }
  bool hermitian() const { return hermiticity_defect <= 1e-14; }
};

// Assembles the requested terms on the enumerated basis with bosonic ladder
// rules and nearest-neighbor hopping. Ordered site pairs plus mutually
// adjoint transfer vertices make every assembled matrix hermitian. Throws
// DomainError on an empty term mask or on a periodic N=2 request (the
// two-site ring double-counts its bond).
HamiltonianMatrix assemble_hamiltonian(const std::vector<FockState>& basis,
                                       const ModelSpec& spec,
                                       const CouplingSet& couplings,
                                       unsigned terms = TermAll);

// The four transfer vertices, named by the process they drive when the
// excitation hops from a source site j to a target site i.
enum class TransferVertex {
  EmitGroundAtSource,     // b_j^dag : leaves a ground-well quantum behind
  EmitExcitedAtTarget,    // c_i^dag : creates an excited-well quantum ahead
  AbsorbGroundAtTarget,   // b_i     : consumes a ground-well quantum ahead
  AbsorbExcitedAtSource,  // c_j     : consumes an excited-well quantum behind
};

// Bare single-vertex operator sum_{<i,j>} (vertex) B_i^dag B_j with unit
// coupling. Not hermitian on its own: the ground vertices are mutual
// adjoints, as are the excited ones.
Eigen::SparseMatrix<double> transfer_vertex_matrix(
    const std::vector<FockState>& basis, const LatticeSpec& lattice,
    TransferVertex vertex);

// Ordered nearest-neighbor pairs (target i, source j). Periodic chains
// require N >= 3 so no bond is double counted.
std::vector<std::pair<int, int>> neighbor_pairs(const LatticeSpec& lattice);

const char* to_string(TransferVertex v);

}  // namespace excivib
