#include "core/srcomplex.hpp"

#include "core/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace tropmirror {

FaceComplex::FaceComplex(Kind kind, Polytope polytope, std::shared_ptr<const FaceLattice> lattice,
                         std::vector<std::size_t> face_ids)
    : kind_(kind), polytope_(std::move(polytope)), lattice_(std::move(lattice)), ids_(std::move(face_ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

FaceComplex FaceComplex::from_vertex_sets(Kind kind, const Polytope& polytope,
                                          const std::vector<std::vector<std::size_t>>& vertex_sets) {
  auto lattice = std::make_shared<const FaceLattice>(face_lattice(polytope));
  std::vector<std::size_t> ids;
  for (auto verts : vertex_sets) {
    std::sort(verts.begin(), verts.end());
    auto id = lattice->find_by_vertices(verts);
    if (!id) throw Error(ErrorCode::Schema, "vertex set is not a face of the reference polytope");
    ids.push_back(*id);
  }
  return FaceComplex(kind, polytope, std::move(lattice), std::move(ids));
}

FaceComplex FaceComplex::generated_by(Kind kind, const Polytope& polytope,
                                      const std::vector<std::vector<std::size_t>>& vertex_sets) {
  FaceComplex given = from_vertex_sets(kind, polytope, vertex_sets);
  std::vector<std::size_t> ids;
  for (std::size_t x = 0; x < given.lattice().size(); ++x)
    for (std::size_t g : given.face_ids())
      if (kind == Kind::Complex ? given.lattice().is_subface(x, g) : given.lattice().is_subface(g, x)) {
        ids.push_back(x);
        break;
      }
  return FaceComplex(kind, polytope, given.lattice_ptr(), std::move(ids));
}

std::vector<Face> FaceComplex::faces() const {
  std::vector<Face> out;
  for (std::size_t id : ids_) out.push_back((*lattice_)[id]);
  return out;
}

bool FaceComplex::contains_id(std::size_t id) const { return std::binary_search(ids_.begin(), ids_.end(), id); }

FVector FaceComplex::fvector() const {
  std::vector<Face> f = faces();
  return tropmirror::fvector(f, polytope_.ambient_dim());
}

std::vector<std::size_t> FaceComplex::maximal_ids() const {
  std::vector<std::size_t> out;
  for (std::size_t a : ids_) {
    bool maximal = true;
    for (std::size_t b : ids_)
      if (b != a && lattice_->is_subface(a, b)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(a);
  }
  return out;
}

bool FaceComplex::is_closed() const {
  for (std::size_t x = 0; x < lattice_->size(); ++x)
    for (std::size_t y : lattice_->covered_by(x)) {
      if (kind_ == Kind::Complex && contains_id(x) && !contains_id(y)) return false;
      if (kind_ == Kind::CoComplex && contains_id(y) && !contains_id(x)) return false;
    }
  return true;
}

FaceComplex ideal_to_complex(const MonomialIdeal& i0, const ToricData& t) {
  if (i0.nvars() != t.num_rays()) throw Error(ErrorCode::DimensionMismatch, "ideal and fan have different rays");
  auto lattice = std::make_shared<const FaceLattice>(face_lattice(t.fano()));
  std::vector<std::size_t> ids;
  for (std::size_t id = 0; id < lattice->size(); ++id)
    if (!i0.contains(squarefree_product(t.num_rays(), (*lattice)[id].vertices))) ids.push_back(id);
  return FaceComplex(FaceComplex::Kind::Complex, t.fano(), std::move(lattice), std::move(ids));
}

MonomialIdeal complex_to_ideal(const FaceComplex& c) {
  const std::size_t nv = c.polytope().vertices().size();
  std::set<std::vector<std::size_t>> closure;
  for (const Face& f : c.faces()) {
    const std::size_t k = f.vertices.size();
    for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1UL << i)) s.push_back(f.vertices[i]);
      closure.insert(std::move(s));
    }
  }
  if (closure.empty()) return MonomialIdeal::unit(nv);

  std::vector<Monomial> gens;
  std::vector<std::vector<std::size_t>> level{{}};
  while (!level.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& s : level) {
      for (std::size_t v = s.empty() ? 0 : s.back() + 1; v < nv; ++v) {
        std::vector<std::size_t> cand = s;
        cand.push_back(v);
        if (closure.count(cand)) {
          next.push_back(std::move(cand));
          continue;
        }
        bool minimal = true;
        for (std::size_t drop = 0; drop + 1 < cand.size() && minimal; ++drop) {
          std::vector<std::size_t> sub = cand;
          sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
          minimal = closure.count(sub) > 0;
        }
        if (minimal) gens.push_back(squarefree_product(nv, cand));
      }
    }
    level = std::move(next);
  }
  return MonomialIdeal(nv, std::move(gens));
}

FaceComplex strata_subcomplex(const MonomialIdeal& i0, const ToricData& t) {
  if (i0.nvars() != t.num_rays()) throw Error(ErrorCode::DimensionMismatch, "ideal and fan have different rays");
  Polytope delta = polar_dual(t.fano());
  auto lattice = std::make_shared<const FaceLattice>(face_lattice(delta));
  std::vector<std::size_t> ids;
  for (std::size_t id = 0; id < lattice->size(); ++id) {
    const auto& tight = (*lattice)[id].facets;
    bool in_zero_set = std::all_of(i0.generators().begin(), i0.generators().end(), [&](const Monomial& g) {
      return std::any_of(tight.begin(), tight.end(), [&](std::size_t r) { return g[r] > 0; });
    });
    if (in_zero_set) ids.push_back(id);
  }
  return FaceComplex(FaceComplex::Kind::Complex, std::move(delta), std::move(lattice), std::move(ids));
}

FaceComplex dualize(const FaceComplex& c) {
  Polytope dual = polar_dual(c.polytope());
  auto lattice = std::make_shared<const FaceLattice>(face_lattice(dual));
  std::vector<std::size_t> ids;
  for (const Face& f : c.faces()) {
    Face d = dual_face(c.polytope(), f);
    auto id = lattice->find_by_vertices(d.vertices);
    if (!id) throw Error(ErrorCode::DualityMismatch, "dual face missing from the dual face lattice");
    ids.push_back(*id);
  }
  auto kind = c.kind() == FaceComplex::Kind::Complex ? FaceComplex::Kind::CoComplex : FaceComplex::Kind::Complex;
  return FaceComplex(kind, std::move(dual), std::move(lattice), std::move(ids));
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Whether the items are connected when two items sharing a key are joined.
bool connected_by_keys(const std::vector<std::size_t>& items,
                       const std::map<std::size_t, std::vector<std::size_t>>& items_of_key) {
  if (items.size() <= 1) return true;
  std::map<std::size_t, std::size_t> index;
  for (std::size_t i = 0; i < items.size(); ++i) index[items[i]] = i;
  UnionFind uf(items.size());
  for (const auto& [key, members] : items_of_key) {
    std::vector<std::size_t> present;
    for (std::size_t m : members)
      if (index.count(m)) present.push_back(index[m]);
    for (std::size_t i = 1; i < present.size(); ++i) uf.unite(present[0], present[i]);
  }
  std::size_t root = uf.find(0);
  for (std::size_t i = 1; i < items.size(); ++i)
    if (uf.find(i) != root) return false;
  return true;
}

}  // namespace

SphereReport sphere_proxy_check(const FaceComplex& c) {
  if (c.kind() != FaceComplex::Kind::Complex)
    throw Error(ErrorCode::Schema, "sphere check applies to complexes, not co-complexes");
  const FaceLattice& lat = c.lattice();
  SphereReport rep;

  std::vector<std::size_t> maximal;
  for (std::size_t id : c.maximal_ids())
    if (lat[id].dim >= 0) maximal.push_back(id);
  if (maximal.empty()) {
    bool has_empty = c.contains_id(lat.empty_face());
    rep.dim = -1;
    rep.euler = 0;
    rep.euler_ok = rep.pseudomanifold = rep.connected = rep.links_connected = has_empty;
    rep.passed = has_empty;
    if (!has_empty) rep.failures.push_back("void complex");
    return rep;
  }
  rep.dim = lat[maximal.front()].dim;
  for (std::size_t id : maximal)
    if (lat[id].dim != rep.dim) throw Error(ErrorCode::NotEquidimensional, "maximal faces have different dimensions");
  const int d = rep.dim;

  FVector f = c.fvector();
  for (int i = 0; i <= d; ++i) rep.euler += (i % 2 == 0 ? 1 : -1) * static_cast<long>(f[static_cast<std::size_t>(i + 1)]);
  rep.euler_ok = rep.euler == 1 + (d % 2 == 0 ? 1 : -1);

  // ridge -> top faces containing it
  std::map<std::size_t, std::vector<std::size_t>> tops_of_ridge;
  std::vector<std::size_t> tops;
  for (std::size_t id : c.face_ids())
    if (lat[id].dim == d) {
      tops.push_back(id);
      for (std::size_t r : lat.covered_by(id))
        if (c.contains_id(r)) tops_of_ridge[r].push_back(id);
    }
  rep.pseudomanifold = true;
  if (d >= 1)
    for (std::size_t id : c.face_ids())
      if (lat[id].dim == d - 1 && tops_of_ridge[id].size() != 2) rep.pseudomanifold = false;

  rep.connected = true;
  if (d >= 1) {
    std::vector<std::size_t> verts;
    std::map<std::size_t, std::vector<std::size_t>> verts_of_edge;
    for (std::size_t id : c.face_ids()) {
      if (lat[id].dim == 0) verts.push_back(lat[id].vertices.front());
      if (lat[id].dim == 1) verts_of_edge[id] = lat[id].vertices;
    }
    rep.connected = connected_by_keys(verts, verts_of_edge);
  }

  rep.links_connected = true;
  if (d >= 2) {
    for (std::size_t id : c.face_ids()) {
      if (lat[id].dim != 0) continue;
      std::size_t v = lat[id].vertices.front();
      std::vector<std::size_t> star;
      for (std::size_t t : tops)
        if (std::binary_search(lat[t].vertices.begin(), lat[t].vertices.end(), v)) star.push_back(t);
      std::map<std::size_t, std::vector<std::size_t>> local;
      for (const auto& [ridge, members] : tops_of_ridge)
        if (std::binary_search(lat[ridge].vertices.begin(), lat[ridge].vertices.end(), v)) local[ridge] = members;
      if (!connected_by_keys(star, local)) rep.links_connected = false;
    }
  }

  if (!rep.euler_ok) rep.failures.push_back("euler characteristic");
  if (!rep.pseudomanifold) rep.failures.push_back("pseudomanifold");
  if (!rep.connected) rep.failures.push_back("connectivity");
  if (!rep.links_connected) rep.failures.push_back("vertex links");
  rep.passed = rep.failures.empty();
  return rep;
}

}  // namespace tropmirror
