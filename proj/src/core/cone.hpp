// Double description method for pointed polyhedral cones.

#ifndef TROPMIRROR_CORE_CONE_HPP
#define TROPMIRROR_CORE_CONE_HPP

#include "core/lattice.hpp"

#include <optional>
#include <span>
#include <vector>

namespace tropmirror {

struct ConeRays {
  std::vector<LatticeVector> rays;                   // primitive generators
  std::vector<std::vector<std::size_t>> tight_rows;  // rows vanishing on each ray
};

/// Extreme rays of {x in R^dim : <row, x> >= 0 for every row}.
///
/// Returns nothing when the cone is not pointed (the rows do not span
/// R^dim). Rays are found by incremental insertion of the rows with the
/// combinatorial adjacency test, in exact integer arithmetic. The result
/// depends only on the row sequence, so it is deterministic.
std::optional<ConeRays> extreme_rays(std::span<const LatticeVector> rows, std::size_t dim);

}  // namespace tropmirror

#endif  // TROPMIRROR_CORE_CONE_HPP
