// Structural identities of a computed mirror, checked from the data alone.

#ifndef TROPMIRROR_CORE_CHECKS_HPP
#define TROPMIRROR_CORE_CHECKS_HPP

#include "core/mirror.hpp"

#include <set>
#include <string>
#include <vector>

namespace tropmirror {

/// Faces as sets of vertex coordinates, so complexes on equal polytopes
/// with different vertex orders compare.
std::set<std::set<RationalVector>> face_point_sets(const FaceComplex& c);
bool same_faces(const FaceComplex& a, const FaceComplex& b);

/// Delta, the polar dual of the Fano polytope, against the sum of the
/// section polytopes of the blocks.
bool delta_is_block_sum(const MirrorResult& r);
/// nabla against the sum of conv({0} and the rays of each block).
bool nabla_is_block_sum(const MirrorResult& r);
/// Polar dual of the deformation hull against the slice of the Groebner cone.
bool nabla_forms_agree(const MirrorResult& r);

struct MirrorMapReport {
  bool injective = false;
  bool onto = false;
  bool reverses_inclusion = false;
  bool passed() const { return injective && onto && reverses_inclusion; }
};

/// F -> sum_i (F* meet Delta_i) from the nonempty faces of the tropical
/// complex to the nonempty faces of the strata complex.
MirrorMapReport check_mirror_map(const MirrorResult& r);

/// The strata complex of the mirror ideal on nabla against the tropical
/// complex.
bool mirror_strata_match(const MirrorResult& r);

}  // namespace tropmirror

#endif  // TROPMIRROR_CORE_CHECKS_HPP
