#pragma once

#include <string>
#include <vector>

#include "eqdc/exactlin/matrix.hpp"

namespace eqdc {

/// Z^free_rank + Z/torsion[0] + ... with torsion[i] >= 2 and torsion[i] | torsion[i+1].
struct FGAbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  /// "0", "Z", "Z^2 + Z/2", "Z/2 + Z/4", ...
  std::string to_string() const;

  friend bool operator==(const FGAbelianGroup& a, const FGAbelianGroup& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
};

/// Canonical form from an arbitrary list of cyclic orders (0 = free, 1 dropped).
FGAbelianGroup make_group(std::size_t free_rank, const std::vector<Integer>& orders);

enum class Ring { Q, Z };

/// ker(d_next) / im(d_prev) at the middle term of C^{k-1} -> C^k -> C^{k+1}.
/// d_prev is dim C^k x dim C^{k-1}; d_next is dim C^{k+1} x dim C^k.
/// Throws CompositionNonzero if d_next * d_prev != 0, NotIntegral over Z with
/// fractional entries.
FGAbelianGroup cohomology_of_complex(const RationalMatrix& d_prev, const RationalMatrix& d_next,
                                     Ring ring);

}  // namespace eqdc
