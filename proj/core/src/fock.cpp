#include "excivib/fock.hpp"

#include <algorithm>
#include <numeric>

#include "excivib/errors.hpp"

namespace excivib {

int FockState::total_quanta() const {
  const auto sum = [](const std::vector<std::uint8_t>& v) {
    return std::accumulate(v.begin(), v.end(), 0,
                           [](int acc, std::uint8_t n) { return acc + n; });
  };
  return sum(n_b) + sum(n_c);
}

std::uint64_t count_basis(const LatticeSpec& lattice,
                          const VibrationSpec& vib) {
  const int modes = 2 * lattice.site_count;
  const int q_cap = vib.q_max;
  // patterns[q] = number of occupation patterns with total q after m modes
  std::vector<std::uint64_t> patterns(q_cap + 1, 0);
  patterns[0] = 1;
  for (int m = 0; m < modes; ++m) {
    std::vector<std::uint64_t> next(q_cap + 1, 0);
    for (int q = 0; q <= q_cap; ++q) {
      if (patterns[q] == 0) continue;
      for (int occ = 0; occ <= vib.n_max && q + occ <= q_cap; ++occ) {
        next[q + occ] += patterns[q];
      }
    }
    patterns.swap(next);
  }
  const std::uint64_t vib_patterns =
      std::accumulate(patterns.begin(), patterns.end(), std::uint64_t{0});
  return static_cast<std::uint64_t>(lattice.site_count) * vib_patterns;
}

std::vector<FockState> enumerate_basis(const LatticeSpec& lattice,
                                       const VibrationSpec& vib,
                                       std::uint64_t size_cap) {
  if (vib.n_max > 255) {
    throw ResourceError("per-mode truncation above 255 is not supported");
  }
  const std::uint64_t size = count_basis(lattice, vib);
  if (size > size_cap) {
    throw ResourceError("basis size " + std::to_string(size) +
                        " exceeds cap " + std::to_string(size_cap));
  }

  const int n_sites = lattice.site_count;
  const int modes = 2 * n_sites;

  std::vector<FockState> basis;
  basis.reserve(size);

  // lexicographic walk over the flattened (b..., c...) occupation vector
  std::vector<std::uint8_t> occ(modes, 0);
  for (int site = 0; site < n_sites; ++site) {
    std::fill(occ.begin(), occ.end(), 0);
    int total = 0;
    while (true) {
      FockState state;
      state.excited_site = site;
      state.n_b.assign(occ.begin(), occ.begin() + n_sites);
      state.n_c.assign(occ.begin() + n_sites, occ.end());
      basis.push_back(std::move(state));

      // next occupation vector under per-mode and total caps, rightmost fast
      int pos = modes - 1;
      while (pos >= 0) {
        if (occ[pos] < vib.n_max && total < vib.q_max) {
          ++occ[pos];
          ++total;
          break;
        }
        total -= occ[pos];
        occ[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return basis;
}

BasisIndex::BasisIndex(const std::vector<FockState>& basis) {
  map_.reserve(basis.size() * 2);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    map_.emplace(pack(basis[i]), static_cast<int>(i));
  }
}

int BasisIndex::find(const FockState& state) const {
  const auto it = map_.find(pack(state));
  return it == map_.end() ? -1 : it->second;
}

std::string BasisIndex::pack(const FockState& state) {
  std::string key;
  key.reserve(1 + state.n_b.size() + state.n_c.size());
  key.push_back(static_cast<char>(state.excited_site));
  key.append(state.n_b.begin(), state.n_b.end());
  key.append(state.n_c.begin(), state.n_c.end());
  return key;
}

}  // namespace excivib
