// The tropical mirror construction for complete intersections given by a
// nef partition.

#ifndef TROPMIRROR_CORE_MIRROR_HPP
#define TROPMIRROR_CORE_MIRROR_HPP

#include "core/deformation.hpp"
#include "core/monomial.hpp"
#include "core/polytope.hpp"
#include "core/srcomplex.hpp"
#include "core/toric.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tropmirror {

/// Generators m_j = prod_{r in J_j} x_r with the supports of the general
/// sections g_j: lattice points of Delta_j whose monomial avoids I0.
struct Degeneration {
  NefPartition partition;
  MonomialIdeal i0;
  std::vector<Monomial> block_generators;
  std::vector<Polytope> section_polytopes;
  std::vector<std::vector<LatticeVector>> supports;

  std::vector<LatticeVector> all_support() const;
};

/// Throws InvalidNefPartition, EmptySupport.
Degeneration canonical_degeneration(const NefPartition& partition, const ToricData& t);

/// The blocks read off a squarefree ideal whose generators have disjoint
/// supports covering every ray; nothing otherwise.
std::optional<NefPartition> partition_from_ideal(const MonomialIdeal& i0);

/// Inequalities <alpha, w> + w_t >= 0, irredundant.
struct GroebnerCone {
  std::size_t dim = 0;
  std::vector<LatticeVector> inequalities;
};

GroebnerCone groebner_cone(const Degeneration& d, const ToricData& t);
/// The slice w_t = 1. Throws UnboundedSlice.
Polytope nabla_from_cone(const GroebnerCone& c);
Polytope nabla_dual_from_hull(const std::vector<LatticeVector>& support, std::size_t dim);

struct CombinatorialFaces {
  FaceComplex cocomplex;  // on nabla dual
  /// Face id in nabla dual -> face id of the sum of intersections in the
  /// strata complex, for every accepted proper face.
  std::map<std::size_t, std::size_t> image;
};

/// Proper faces G of nabla dual meeting every Delta_i whose sum of
/// intersections is a face of Delta lying in the strata complex, closed
/// upwards. Throws NotFaceOfDelta if the accepted proper faces are not
/// closed under superfaces.
CombinatorialFaces tropical_faces_combinatorial(const Degeneration& d, const Polytope& nabla_dual,
                                                const FaceComplex& strata);

/// Duals of the proper faces of nabla at whose vertex barycenter every
/// tropicalized generator attains its minimum twice, together with nabla
/// dual itself.
FaceComplex tropical_faces_prevariety(const Degeneration& d, const Polytope& nabla, const ToricData& t);

/// Dualizes the co-complex onto nabla. Throws SphereCheckFailed unless the
/// result is an equidimensional sphere-like complex.
FaceComplex special_fiber_tropical_complex(const FaceComplex& cocomplex);

/// The Cox ring ideal of the mirror whose strata complex is tc, computed as
/// minimal covering sets of facets and as an intersection of primes.
/// Throws FormsDisagree.
MonomialIdeal mirror_ideal(const FaceComplex& tc, const ToricData& mirror);

/// Lattice points on the duals of the nonempty proper faces of the strata
/// complex, sorted.
std::vector<LatticeVector> deformation_support_xi(const MonomialIdeal& i0, const ToricData& t);

struct Perturbation {
  LatticeVector alpha;
  std::string symbol;
  Monomial image;
};

struct MirrorGenerator {
  Monomial base;
  /// The monomial of least degree (then lexicographically least product)
  /// making base times it Cartier.
  Monomial multiplier;
  Monomial promoted;
  /// "cartier", "power" or "mixed".
  std::string promotion;
  std::vector<Perturbation> perturbations;
};

/// The minimal promotions of the generators of the mirror ideal, each with
/// the nonzero images m + A alpha modulo the mirror ideal for alpha in xi.
/// Throws NoCartierMultiple.
std::vector<MirrorGenerator> mirror_family(const MonomialIdeal& i0_mirror, const std::vector<LatticeVector>& xi,
                                           const ToricData& mirror);

struct MirrorResult {
  ToricData toric;
  Degeneration degeneration;
  FaceComplex strata;
  SphereReport strata_sphere;
  PT1Basis pt1;
  Polytope nabla_dual;
  Polytope nabla;
  bool nabla_reflexive = false;
  GroebnerCone cone;
  CombinatorialFaces combinatorial;
  FaceComplex tropical_dual;  // co-complex on nabla dual
  FaceComplex tropical;       // complex on nabla
  SphereReport tropical_sphere;
  ToricData mirror_toric;
  MonomialIdeal mirror_ideal;
  NefPartition mirror_partition;
  std::vector<LatticeVector> xi;
  std::vector<MirrorGenerator> family;
};

/// The whole construction. Errors carry the failing step in their message.
MirrorResult run_pipeline(const MonomialIdeal& i0, const ToricData& t,
                          const std::optional<NefPartition>& partition = std::nullopt);

}  // namespace tropmirror

#endif  // TROPMIRROR_CORE_MIRROR_HPP
