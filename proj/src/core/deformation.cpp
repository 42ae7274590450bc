#include "core/deformation.hpp"

#include "core/errors.hpp"

#include <set>

namespace tropmirror {

std::vector<std::size_t> DeformationDirection::moved() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < images.size(); ++j)
    if (images[j]) out.push_back(j);
  return out;
}

std::vector<LatticeVector> PT1Basis::alphas() const {
  std::vector<LatticeVector> out;
  for (const auto& d : directions) out.push_back(d.alpha);
  return out;
}

std::vector<LatticeVector> candidate_points(const MonomialIdeal& i0, const ToricData& t) {
  if (i0.nvars() != t.num_rays()) throw Error(ErrorCode::DimensionMismatch, "ideal and fan have different rays");
  std::set<LatticeVector> points;
  for (const auto& g : i0.generators()) {
    Polytope p;
    try {
      p = divisor_polytope(t, g);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Unbounded) throw;
      throw Error(ErrorCode::UnboundedCandidatePolytope, "generator " + format_monomial(g, "x"));
    }
    if (p.empty()) continue;
    for (auto& x : lattice_points(p)) points.insert(std::move(x));
  }
  return {points.begin(), points.end()};
}

std::optional<DeformationDirection> hom_from_point(const LatticeVector& alpha, const MonomialIdeal& i0,
                                                   const ToricData& t) {
  if (alpha.size() != t.dim()) throw Error(ErrorCode::DimensionMismatch, "character has wrong length");
  const auto& gens = i0.generators();
  LatticeVector shift = t.ray_matrix().apply(alpha);

  DeformationDirection d{alpha, {}};
  bool any = false;
  for (const auto& g : gens) {
    Monomial image = add(g, shift);
    if (is_nonnegative(image) && !i0.contains(image)) {
      d.images.emplace_back(std::move(image));
      any = true;
    } else {
      d.images.emplace_back(std::nullopt);
    }
  }
  if (!any) return std::nullopt;

  // Both sides of the syzygy between g_i and g_j equal x^(lcm + A alpha) when
  // nonzero, so they can only differ when exactly one image vanishes.
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (d.images[i].has_value() == d.images[j].has_value()) continue;
      Monomial value = add(lcm(gens[i], gens[j]), shift);
      if (is_nonnegative(value) && !i0.contains(value)) return std::nullopt;
    }
  return d;
}

PT1Basis pt1_basis(const MonomialIdeal& i0, const ToricData& t) {
  PT1Basis basis;
  for (const auto& alpha : candidate_points(i0, t)) {
    auto d = hom_from_point(alpha, i0, t);
    if (!d) continue;
    basis.groups[d->moved()].push_back(basis.directions.size());
    basis.directions.push_back(std::move(*d));
  }
  return basis;
}

}  // namespace tropmirror
