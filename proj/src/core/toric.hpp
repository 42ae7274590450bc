// Toric varieties of Fano polytopes: fan, Cox grading, divisors.

#ifndef TROPMIRROR_CORE_TORIC_HPP
#define TROPMIRROR_CORE_TORIC_HPP

#include "core/lattice.hpp"
#include "core/monomial.hpp"
#include "core/polytope.hpp"

#include <optional>
#include <vector>

namespace tropmirror {

/// Coefficients a_r of sum a_r D_r, one per ray.
using TorusDivisor = LatticeVector;

/// An element of the class group: free coordinates followed by torsion
/// residues (reduced into [0, order)).
struct DivisorClass {
  std::vector<Integer> free;
  std::vector<Integer> torsion;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;
};

class ToricData {
public:
  ToricData() = default;

  std::size_t dim() const { return fano_.ambient_dim(); }
  std::size_t num_rays() const { return rays_.size(); }
  const Polytope& fano() const { return fano_; }
  const std::vector<LatticeVector>& rays() const { return rays_; }
  /// Rows are the rays.
  const IntegerMatrix& ray_matrix() const { return ray_matrix_; }
  /// Sorted ray indices of each maximal cone; cone i is facet i of fano().
  const std::vector<std::vector<std::size_t>>& max_cones() const { return max_cones_; }

  std::size_t class_group_rank() const { return num_rays() - dim(); }
  /// Orders of the nontrivial torsion factors.
  const std::vector<Integer>& torsion_orders() const { return torsion_orders_; }

  DivisorClass degree(const LatticeVector& exponents) const;
  /// A torus divisor with the given class.
  TorusDivisor representative(const DivisorClass& c) const;

private:
  friend ToricData toric_from_fano(const Polytope& p);

  Polytope fano_;
  std::vector<LatticeVector> rays_;
  IntegerMatrix ray_matrix_;
  std::vector<std::vector<std::size_t>> max_cones_;
  SmithDecomposition smith_;
  std::vector<std::size_t> torsion_rows_;
  std::vector<Integer> torsion_orders_;
};

/// Fan over the faces of a Fano polytope. Throws NotFano unless p is a
/// full-dimensional lattice polytope whose only interior lattice point is 0.
ToricData toric_from_fano(const Polytope& p);

/// Same, from explicit rays and maximal cones, which must be the vertices and
/// facets of conv(rays). Throws Schema otherwise.
ToricData toric_from_fan(const std::vector<LatticeVector>& rays,
                         const std::vector<std::vector<std::size_t>>& max_cones);

/// {m : <m, r> >= -a_r for all rays r}.
Polytope divisor_polytope(const ToricData& t, const TorusDivisor& d);

/// Monomials x^(A alpha + a) for alpha in the lattice points of the divisor
/// polytope of the representative.
std::vector<Monomial> sections_basis(const ToricData& t, const DivisorClass& c,
                                     const TorusDivisor& representative);

struct CartierData {
  bool cartier = false;
  /// One m_sigma per maximal cone, present when that cone admits one.
  std::vector<std::optional<LatticeVector>> local;
};

CartierData is_cartier(const ToricData& t, const TorusDivisor& d);
/// Throws NotCartier.
bool is_nef(const ToricData& t, const TorusDivisor& d);

struct PicardSublattice {
  std::vector<DivisorClass> generators;
  std::size_t rank = 0;
  /// Index in the class group, 0 when infinite.
  Integer index;
  /// Exponent of the torsion of the quotient: a class has a Cartier
  /// multiple iff this multiple of it is Cartier.
  Integer torsion_exponent;

  /// Whether the divisor is Cartier, by membership in the lattice of
  /// Cartier divisors.
  bool contains(const TorusDivisor& d) const;

  IntegerMatrix cartier_left;  // Smith form of a basis of Cartier divisors
  std::vector<Integer> cartier_diagonal;
};

PicardSublattice picard_sublattice(const ToricData& t);
bool is_picard_class(const ToricData& t, const DivisorClass& c);

MonomialIdeal irrelevant_ideal(const ToricData& t);

/// (<r, w>)_r, that is A w.
RationalVector weight_lift(const ToricData& t, const RationalVector& w);
/// Left inverse of weight_lift: (A^T A)^-1 A^T u.
RationalVector weight_project(const ToricData& t, const RationalVector& u);
/// A weight u with A^T u = w, namely A (A^T A)^-1 w.
RationalVector weight_section(const ToricData& t, const RationalVector& w);

using NefPartition = std::vector<std::vector<std::size_t>>;

/// Throws InvalidNefPartition unless the blocks are disjoint, cover all rays
/// and each E_j = sum_{r in J_j} D_r is Cartier and nef.
void validate_nef_partition(const ToricData& t, const NefPartition& blocks);
TorusDivisor block_divisor(const ToricData& t, const std::vector<std::size_t>& block);

}  // namespace tropmirror

#endif  // TROPMIRROR_CORE_TORIC_HPP
