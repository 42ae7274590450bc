#include "core/checks.hpp"

#include <map>

namespace tropmirror {

std::set<std::set<RationalVector>> face_point_sets(const FaceComplex& c) {
  std::set<std::set<RationalVector>> out;
  for (const Face& f : c.faces()) {
    std::set<RationalVector> pts;
    for (std::size_t v : f.vertices) pts.insert(c.polytope().vertices()[v]);
    out.insert(std::move(pts));
  }
  return out;
}

bool same_faces(const FaceComplex& a, const FaceComplex& b) {
  return a.kind() == b.kind() && a.polytope().same_vertex_set(b.polytope()) &&
         face_point_sets(a) == face_point_sets(b);
}

bool delta_is_block_sum(const MirrorResult& r) {
  const auto& pieces = r.degeneration.section_polytopes;
  if (pieces.empty()) return false;
  Polytope sum = pieces.front();
  for (std::size_t j = 1; j < pieces.size(); ++j) sum = minkowski_sum(sum, pieces[j]);
  return sum.same_vertex_set(polar_dual(r.toric.fano()));
}

bool nabla_is_block_sum(const MirrorResult& r) {
  const std::size_t n = r.toric.dim();
  std::optional<Polytope> sum;
  for (const auto& block : r.degeneration.partition) {
    std::vector<LatticeVector> pts{LatticeVector(n, Integer(0))};
    for (std::size_t ray : block) pts.push_back(r.toric.rays()[ray]);
    Polytope piece = convex_hull(pts, n);
    sum = sum ? minkowski_sum(*sum, piece) : piece;
  }
  return sum && sum->same_vertex_set(r.nabla);
}

bool nabla_forms_agree(const MirrorResult& r) {
  return nabla_from_cone(r.cone).same_vertex_set(polar_dual(r.nabla_dual));
}

MirrorMapReport check_mirror_map(const MirrorResult& r) {
  MirrorMapReport out;
  const FaceLattice& dual = r.tropical_dual.lattice();
  const FaceLattice& strata = r.strata.lattice();

  std::vector<std::size_t> domain;
  for (std::size_t id : r.tropical_dual.face_ids())
    if (id != dual.full_face()) domain.push_back(id);
  std::set<std::size_t> targets;
  for (std::size_t id : r.strata.face_ids())
    if (id != strata.empty_face()) targets.insert(id);

  std::map<std::size_t, std::size_t> image;
  for (std::size_t id : domain) {
    auto it = r.combinatorial.image.find(id);
    if (it == r.combinatorial.image.end()) return out;
    image[id] = it->second;
  }
  std::set<std::size_t> hit;
  for (const auto& [g, s] : image) hit.insert(s);
  out.injective = hit.size() == image.size();
  out.onto = hit == targets;

  // F is contained in F' exactly when the dual G' is contained in G.
  out.reverses_inclusion = true;
  for (std::size_t a : domain)
    for (std::size_t b : domain)
      if (dual.is_subface(a, b) != strata.is_subface(image[a], image[b])) out.reverses_inclusion = false;
  return out;
}

bool mirror_strata_match(const MirrorResult& r) {
  return same_faces(strata_subcomplex(r.mirror_ideal, r.mirror_toric), r.tropical);
}

}  // namespace tropmirror
