#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "excivib/params.hpp"

namespace excivib {

// One-exciton sector basis label: the excited site plus per-site vibration
// occupations of the ground-well (b) and excited-well (c) modes. Both mode
// families are kept on every site so the transfer assembly stays uniform.
struct FockState {
  int excited_site = 0;
  std::vector<std::uint8_t> n_b;
  std::vector<std::uint8_t> n_c;

  int total_quanta() const;
  bool operator==(const FockState&) const = default;
};

// Basis size without enumerating (excited site x occupation patterns with
// per-mode cap n_max and total cap q_max over 2N modes).
std::uint64_t count_basis(const LatticeSpec& lattice, const VibrationSpec& vib);

// Deterministic, duplicate-free, lexicographic enumeration: excited site
// major, then the (b_0..b_{N-1}, c_0..c_{N-1}) occupation vector. Throws
// ResourceError carrying the computed size when it exceeds size_cap.
std::vector<FockState> enumerate_basis(const LatticeSpec& lattice,
                                       const VibrationSpec& vib,
                                       std::uint64_t size_cap = 200000);

// Index lookup for assembled operators; keys the packed state bytes.
class BasisIndex {
 public:
  explicit BasisIndex(const std::vector<FockState>& basis);

  // -1 when the state is outside the (truncated) basis.
  int find(const FockState& state) const;
  int size() const { return static_cast<int>(map_.size()); }

  static std::string pack(const FockState& state);

 private:
  std::unordered_map<std::string, int> map_;
};

}  // namespace excivib
