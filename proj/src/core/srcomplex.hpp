// Complexes of polytope faces attached to reduced monomial ideals.

#ifndef TROPMIRROR_CORE_SRCOMPLEX_HPP
#define TROPMIRROR_CORE_SRCOMPLEX_HPP

#include "core/monomial.hpp"
#include "core/polytope.hpp"
#include "core/toric.hpp"

#include <memory>
#include <string>
#include <vector>

namespace tropmirror {

/// A set of faces of a reference polytope. A complex is closed under
/// subfaces (the empty face included whenever the set is non-void); a
/// co-complex is closed under superfaces (the polytope itself included).
class FaceComplex {
public:
  enum class Kind { Complex, CoComplex };

  FaceComplex() = default;
  FaceComplex(Kind kind, Polytope polytope, std::shared_ptr<const FaceLattice> lattice,
              std::vector<std::size_t> face_ids);
  /// Face set given by vertex sets; throws if one is not a face.
  static FaceComplex from_vertex_sets(Kind kind, const Polytope& polytope,
                                      const std::vector<std::vector<std::size_t>>& vertex_sets);
  /// Smallest complex (or co-complex) containing the given faces.
  static FaceComplex generated_by(Kind kind, const Polytope& polytope,
                                  const std::vector<std::vector<std::size_t>>& vertex_sets);

  Kind kind() const { return kind_; }
  const Polytope& polytope() const { return polytope_; }
  const FaceLattice& lattice() const { return *lattice_; }
  std::shared_ptr<const FaceLattice> lattice_ptr() const { return lattice_; }
  /// Sorted ids into lattice().
  const std::vector<std::size_t>& face_ids() const { return ids_; }
  std::vector<Face> faces() const;
  bool contains_id(std::size_t id) const;
  FVector fvector() const;
  /// Faces not contained in any other face of the set.
  std::vector<std::size_t> maximal_ids() const;
  /// Closure under subfaces or superfaces according to kind().
  bool is_closed() const;

  friend bool operator==(const FaceComplex& a, const FaceComplex& b) {
    return a.kind_ == b.kind_ && a.polytope_ == b.polytope_ && a.ids_ == b.ids_;
  }

private:
  Kind kind_ = Kind::Complex;
  Polytope polytope_;
  std::shared_ptr<const FaceLattice> lattice_;
  std::vector<std::size_t> ids_;
};

/// Faces F of the Fano polytope whose monomial prod_{r in F} x_r lies
/// outside I0.
FaceComplex ideal_to_complex(const MonomialIdeal& i0, const ToricData& t);

/// Minimal non-faces of the simplicial closure of c, as squarefree monomials
/// in the vertices of its polytope.
MonomialIdeal complex_to_ideal(const FaceComplex& c);

/// Faces G of the polar dual of the Fano polytope whose torus stratum lies in
/// V(I0): every generator involves a ray whose facet contains G.
FaceComplex strata_subcomplex(const MonomialIdeal& i0, const ToricData& t);

/// Face-wise duality onto the polar dual polytope, swapping the kind.
/// Throws OriginNotInterior.
FaceComplex dualize(const FaceComplex& c);

struct SphereReport {
  int dim = -1;
  long euler = 0;
  bool euler_ok = false;
  bool pseudomanifold = false;
  bool connected = false;
  bool links_connected = false;
  bool passed = false;
  /// Names of the failed proxies.
  std::vector<std::string> failures;
};

/// Euler characteristic, pseudomanifold, connectivity and vertex-link checks
/// for an equidimensional complex. Throws NotEquidimensional.
SphereReport sphere_proxy_check(const FaceComplex& c);

}  // namespace tropmirror

#endif  // TROPMIRROR_CORE_SRCOMPLEX_HPP
