// Torus-invariant first-order deformations of monomial ideals.

#ifndef TROPMIRROR_CORE_DEFORMATION_HPP
#define TROPMIRROR_CORE_DEFORMATION_HPP

#include "core/monomial.hpp"
#include "core/toric.hpp"

#include <map>
#include <optional>
#include <vector>

namespace tropmirror {

/// The character alpha acting on I0: generator j goes to
/// x^(m_j + A alpha) or to zero.
struct DeformationDirection {
  LatticeVector alpha;
  std::vector<std::optional<Monomial>> images;

  /// Generators with a nonzero image.
  std::vector<std::size_t> moved() const;
  friend bool operator==(const DeformationDirection&, const DeformationDirection&) = default;
};

struct PT1Basis {
  std::vector<DeformationDirection> directions;  // sorted by alpha
  /// Directions indexed by the set of generators they move.
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> groups;

  std::vector<LatticeVector> alphas() const;
};

/// Union over generators of the lattice points alpha with A alpha + m_j >= 0,
/// sorted. Throws UnboundedCandidatePolytope.
std::vector<LatticeVector> candidate_points(const MonomialIdeal& i0, const ToricData& t);

/// The direction of alpha, when it is a nonzero map compatible with every
/// pairwise syzygy modulo I0.
std::optional<DeformationDirection> hom_from_point(const LatticeVector& alpha, const MonomialIdeal& i0,
                                                   const ToricData& t);

PT1Basis pt1_basis(const MonomialIdeal& i0, const ToricData& t);

}  // namespace tropmirror

#endif  // TROPMIRROR_CORE_DEFORMATION_HPP
