// Exact rational polytopes with both representations and their face lattice.

#ifndef TROPMIRROR_CORE_POLYTOPE_HPP
#define TROPMIRROR_CORE_POLYTOPE_HPP

#include "core/lattice.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace tropmirror {

/// The half-space <normal, x> + offset >= 0 (or the hyperplane, for
/// equations). The normal is primitive.
struct Facet {
  LatticeVector normal;
  Rational offset;

  Rational evaluate(const RationalVector& x) const;
  friend bool operator==(const Facet&, const Facet&) = default;
};

/// A bounded polytope. Vertices are kept in the order in which they were
/// first met in the input; facets are sorted by their vertex-index sets.
/// Lower-dimensional polytopes carry their affine span as `equations`.
class Polytope {
public:
  Polytope() = default;

  std::size_t ambient_dim() const { return ambient_dim_; }
  /// -1 for the empty polytope.
  int dim() const { return dim_; }
  bool empty() const { return vertices_.empty(); }
  bool full_dimensional() const { return dim_ == static_cast<int>(ambient_dim_); }

  const std::vector<RationalVector>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<Facet>& equations() const { return equations_; }
  const std::vector<std::vector<std::size_t>>& facet_vertices() const { return facet_vertices_; }
  const std::vector<std::vector<std::size_t>>& vertex_facets() const { return vertex_facets_; }

  bool contains(const RationalVector& x) const;
  bool contains(const LatticeVector& x) const;
  /// Strictly inside every facet and on every equation.
  bool relative_interior_contains(const RationalVector& x) const;
  bool integral() const;
  /// Requires integral().
  std::vector<LatticeVector> lattice_vertices() const;
  std::optional<std::size_t> vertex_index(const RationalVector& x) const;

  /// Vertex sets agree irrespective of order.
  bool same_vertex_set(const Polytope& other) const;

  friend bool operator==(const Polytope&, const Polytope&) = default;

private:
  friend Polytope hull_of_points(std::span<const RationalVector>, std::size_t);
  friend Polytope polar_dual(const Polytope&);
  friend Polytope empty_polytope(std::size_t);

  std::size_t ambient_dim_ = 0;
  int dim_ = -1;
  std::vector<RationalVector> vertices_;
  std::vector<Facet> facets_;
  std::vector<Facet> equations_;
  std::vector<std::vector<std::size_t>> facet_vertices_;
  std::vector<std::vector<std::size_t>> vertex_facets_;
};

Polytope empty_polytope(std::size_t ambient_dim);

/// Convex hull of a nonempty point set.
Polytope convex_hull(std::span<const LatticeVector> points, std::size_t ambient_dim);
Polytope hull_of_points(std::span<const RationalVector> points, std::size_t ambient_dim);

/// {x : <normal_i, x> + offset_i >= 0}. Throws Unbounded when the region
/// is unbounded; returns the empty polytope when it is empty. Vertices are
/// sorted lexicographically.
Polytope polytope_from_inequalities(std::span<const Facet> inequalities, std::size_t ambient_dim);

/// {y : <y, x> >= -1 for all x in p}. Vertex i of the dual is facet i of p
/// and facet j of the dual is vertex j of p.
Polytope polar_dual(const Polytope& p);

std::vector<LatticeVector> lattice_points(const Polytope& p);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);

bool is_reflexive(const Polytope& p);

/// A face, identified by the facets it is tight on. The empty face is tight
/// on every facet and the polytope itself on none.
struct Face {
  int dim = -1;
  std::vector<std::size_t> vertices;  // sorted
  std::vector<std::size_t> facets;    // sorted

  friend bool operator==(const Face&, const Face&) = default;
};

class FaceLattice {
public:
  FaceLattice() = default;
  FaceLattice(std::size_t ambient_dim, int polytope_dim, std::vector<Face> faces);

  std::size_t ambient_dim() const { return ambient_dim_; }
  int polytope_dim() const { return polytope_dim_; }
  std::size_t size() const { return faces_.size(); }
  const Face& operator[](std::size_t id) const { return faces_[id]; }
  const std::vector<Face>& faces() const { return faces_; }

  std::optional<std::size_t> find_by_vertices(const std::vector<std::size_t>& vertices) const;
  std::optional<std::size_t> find_by_facets(const std::vector<std::size_t>& facets) const;
  std::vector<std::size_t> of_dim(int d) const;
  std::size_t empty_face() const;
  std::size_t full_face() const;

  /// Face `small` is a face of `big`.
  bool is_subface(std::size_t small, std::size_t big) const;
  /// Faces covered by `id` (one dimension lower and contained in it).
  const std::vector<std::size_t>& covered_by(std::size_t id) const { return covers_[id]; }

private:
  std::size_t ambient_dim_ = 0;
  int polytope_dim_ = -1;
  std::vector<Face> faces_;  // sorted by (dim, vertices)
  std::map<std::vector<std::size_t>, std::size_t> by_vertices_;
  std::vector<std::vector<std::size_t>> covers_;
};

FaceLattice face_lattice(const Polytope& p);

/// The face of polar_dual(p) dual to f. Inclusion-reversing; dim(f) +
/// dim(f*) = n - 1 for proper faces.
Face dual_face(const Polytope& p, const Face& f);

/// Face counts of dimension -1..n, length n + 2.
using FVector = std::vector<std::size_t>;
FVector fvector(std::span<const Face> faces, std::size_t ambient_dim);

}  // namespace tropmirror

#endif  // TROPMIRROR_CORE_POLYTOPE_HPP
