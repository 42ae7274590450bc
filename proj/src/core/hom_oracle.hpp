// Brute-force reference for Hom(I0, S/I0) in a single torus degree.

#ifndef TROPMIRROR_CORE_HOM_ORACLE_HPP
#define TROPMIRROR_CORE_HOM_ORACLE_HPP

#include "core/monomial.hpp"
#include "core/toric.hpp"

#include <vector>

namespace tropmirror {

struct HomOracleSolution {
  /// Generators whose shifted monomial is a nonzero element of S/I0.
  std::vector<std::size_t> live;
  /// Dimension of the space of homomorphisms of degree alpha.
  std::size_t dimension = 0;
  /// Whether sending every live generator to its shift is a homomorphism.
  bool all_ones_solves = false;
};

/// Decides well-definedness on every monomial of I0 in a box large enough to
/// contain all pairwise lcms, without using the syzygy structure.
HomOracleSolution brute_force_hom(const LatticeVector& alpha, const MonomialIdeal& i0, const ToricData& t);

}  // namespace tropmirror

#endif  // TROPMIRROR_CORE_HOM_ORACLE_HPP
