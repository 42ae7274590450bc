#include "core/mirror.hpp"

#include "core/cone.hpp"
#include "core/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace tropmirror {

std::vector<LatticeVector> Degeneration::all_support() const {
  std::set<LatticeVector> all;
  for (const auto& s : supports) all.insert(s.begin(), s.end());
  return {all.begin(), all.end()};
}

Degeneration canonical_degeneration(const NefPartition& partition, const ToricData& t) {
  validate_nef_partition(t, partition);
  Degeneration d;
  d.partition = partition;
  for (const auto& block : partition) d.block_generators.push_back(squarefree_product(t.num_rays(), block));
  d.i0 = MonomialIdeal(t.num_rays(), d.block_generators);
  for (std::size_t j = 0; j < partition.size(); ++j) {
    d.section_polytopes.push_back(divisor_polytope(t, block_divisor(t, partition[j])));
    std::vector<LatticeVector> support;
    for (auto& alpha : lattice_points(d.section_polytopes.back()))
      if (!d.i0.contains(add(t.ray_matrix().apply(alpha), d.block_generators[j]))) support.push_back(std::move(alpha));
    if (support.empty())
      throw Error(ErrorCode::EmptySupport, "block " + std::to_string(j) + " has no section outside the special fiber");
    d.supports.push_back(std::move(support));
  }
  return d;
}

std::optional<NefPartition> partition_from_ideal(const MonomialIdeal& i0) {
  if (!i0.is_squarefree() || i0.is_zero() || i0.is_unit()) return std::nullopt;
  NefPartition blocks;
  std::vector<int> used(i0.nvars(), 0);
  for (const auto& g : i0.generators()) {
    blocks.push_back(support(g));
    for (std::size_t r : blocks.back()) ++used[r];
  }
  if (std::any_of(used.begin(), used.end(), [](int u) { return u != 1; })) return std::nullopt;
  return blocks;
}

GroebnerCone groebner_cone(const Degeneration& d, const ToricData& t) {
  const std::size_t n = t.dim();
  std::vector<LatticeVector> alphas = d.all_support();
  std::vector<LatticeVector> rows;
  for (const auto& a : alphas) {
    LatticeVector row{Integer(1)};
    row.insert(row.end(), a.begin(), a.end());
    rows.push_back(std::move(row));
  }
  GroebnerCone c;
  c.dim = n;
  auto rays = extreme_rays(rows, n + 1);
  if (!rays) {
    c.inequalities = alphas;
    return c;
  }
  std::vector<std::vector<RationalVector>> tight(rows.size());
  for (std::size_t k = 0; k < rays->rays.size(); ++k)
    for (std::size_t i : rays->tight_rows[k]) tight[i].push_back(to_rational(rays->rays[k]));
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rank(tight[i]) == n) c.inequalities.push_back(alphas[i]);
  return c;
}

Polytope nabla_from_cone(const GroebnerCone& c) {
  std::vector<Facet> ineqs;
  for (const auto& a : c.inequalities) {
    Integer g = content(a);
    if (g == 0) continue;
    ineqs.push_back({primitive(a), Rational(1) / Rational(g)});
  }
  try {
    return polytope_from_inequalities(ineqs, c.dim);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Unbounded) throw;
    throw Error(ErrorCode::UnboundedSlice, "the slice w_t = 1 of the Groebner cone is unbounded");
  }
}

Polytope nabla_dual_from_hull(const std::vector<LatticeVector>& support, std::size_t dim) {
  if (support.empty()) throw Error(ErrorCode::EmptySupport, "no deformation directions");
  return convex_hull(support, dim);
}

namespace {

bool on_face(const Polytope& p, const Face& f, const RationalVector& x) {
  return std::all_of(f.facets.begin(), f.facets.end(),
                     [&](std::size_t j) { return p.facets()[j].evaluate(x) == 0; });
}

// The face of delta whose vertex set is exactly that of s, if any.
std::optional<std::vector<std::size_t>> face_with_vertices(const Polytope& delta, const Polytope& s) {
  std::vector<std::size_t> tight;
  for (std::size_t j = 0; j < delta.facets().size(); ++j)
    if (std::all_of(s.vertices().begin(), s.vertices().end(),
                    [&](const RationalVector& v) { return delta.facets()[j].evaluate(v) == 0; }))
      tight.push_back(j);
  std::vector<std::size_t> verts;
  for (std::size_t v = 0; v < delta.vertices().size(); ++v)
    if (std::all_of(tight.begin(), tight.end(),
                    [&](std::size_t j) { return delta.facets()[j].evaluate(delta.vertices()[v]) == 0; }))
      verts.push_back(v);
  if (verts.size() != s.vertices().size()) return std::nullopt;
  for (std::size_t v : verts)
    if (!s.vertex_index(delta.vertices()[v])) return std::nullopt;
  return verts;
}

}  // namespace

CombinatorialFaces tropical_faces_combinatorial(const Degeneration& d, const Polytope& nabla_dual,
                                                const FaceComplex& strata) {
  auto lattice = std::make_shared<const FaceLattice>(face_lattice(nabla_dual));
  const Polytope& delta = strata.polytope();
  const int top = nabla_dual.dim();

  CombinatorialFaces out;
  std::set<std::size_t> accepted;
  for (std::size_t id = 0; id < lattice->size(); ++id) {
    const Face& g = (*lattice)[id];
    if (g.dim < 0 || g.dim == top) continue;
    std::optional<Polytope> sum;
    bool meets_all = true;
    for (const Polytope& piece : d.section_polytopes) {
      std::vector<RationalVector> verts;
      for (const auto& v : piece.vertices())
        if (on_face(nabla_dual, g, v)) verts.push_back(v);
      if (verts.empty()) {
        meets_all = false;
        break;
      }
      Polytope part = hull_of_points(verts, nabla_dual.ambient_dim());
      sum = sum ? minkowski_sum(*sum, part) : part;
    }
    if (!meets_all) continue;
    auto verts = face_with_vertices(delta, *sum);
    if (!verts) continue;
    auto sid = strata.lattice().find_by_vertices(*verts);
    if (!sid || !strata.contains_id(*sid)) continue;
    accepted.insert(id);
    out.image[id] = *sid;
  }

  for (std::size_t id : accepted)
    for (std::size_t up = 0; up < lattice->size(); ++up) {
      if (up == id || (*lattice)[up].dim == top || !lattice->is_subface(id, up)) continue;
      if (!accepted.count(up))
        throw Error(ErrorCode::NotFaceOfDelta, "accepted faces of the deformation hull are not closed upwards");
    }

  std::vector<std::size_t> ids(accepted.begin(), accepted.end());
  if (!ids.empty()) ids.push_back(lattice->full_face());
  out.cocomplex = FaceComplex(FaceComplex::Kind::CoComplex, nabla_dual, std::move(lattice), std::move(ids));
  return out;
}

FaceComplex tropical_faces_prevariety(const Degeneration& d, const Polytope& nabla, const ToricData& t) {
  FaceLattice lat = face_lattice(nabla);
  Polytope nabla_dual = polar_dual(nabla);
  auto dual_lattice = std::make_shared<const FaceLattice>(face_lattice(nabla_dual));
  const int top = nabla.dim();

  std::vector<std::size_t> ids;
  for (const Face& f : lat.faces()) {
    if (f.dim < 0 || f.dim == top) continue;
    RationalVector w(nabla.ambient_dim());
    for (std::size_t v : f.vertices) w = add(w, nabla.vertices()[v]);
    for (auto& x : w) x /= Rational(static_cast<long>(f.vertices.size()));
    RationalVector u = weight_section(t, w);

    bool tropical = true;
    for (std::size_t j = 0; j < d.supports.size() && tropical; ++j) {
      const Monomial& m = d.block_generators[j];
      std::vector<Rational> values{dot(u, m)};
      for (const auto& alpha : d.supports[j]) values.push_back(1 + dot(u, add(m, t.ray_matrix().apply(alpha))));
      Rational low = *std::min_element(values.begin(), values.end());
      tropical = std::count(values.begin(), values.end(), low) >= 2;
    }
    if (!tropical) continue;
    auto id = dual_lattice->find_by_vertices(dual_face(nabla, f).vertices);
    if (!id) throw Error(ErrorCode::DualityMismatch, "dual face missing from the dual face lattice");
    ids.push_back(*id);
  }
  if (!ids.empty()) ids.push_back(dual_lattice->full_face());
  return FaceComplex(FaceComplex::Kind::CoComplex, std::move(nabla_dual), std::move(dual_lattice), std::move(ids));
}

FaceComplex special_fiber_tropical_complex(const FaceComplex& cocomplex) {
  FaceComplex tc = dualize(cocomplex);
  SphereReport rep;
  try {
    rep = sphere_proxy_check(tc);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotEquidimensional) throw;
    throw Error(ErrorCode::SphereCheckFailed, "tropical complex is not equidimensional");
  }
  if (!rep.passed) {
    std::string what;
    for (const auto& f : rep.failures) what += (what.empty() ? "" : ", ") + f;
    throw Error(ErrorCode::SphereCheckFailed, "tropical complex fails: " + what);
  }
  return tc;
}

MonomialIdeal mirror_ideal(const FaceComplex& tc, const ToricData& mirror) {
  const Polytope& nabla = tc.polytope();
  if (!(nabla == polar_dual(mirror.fano())))
    throw Error(ErrorCode::DualityMismatch, "complex does not live on the polar dual of the mirror polytope");
  const std::size_t m = mirror.num_rays();
  const FaceLattice& lat = tc.lattice();

  std::vector<std::size_t> cells;
  for (std::size_t id : tc.maximal_ids())
    if (lat[id].dim >= 0) cells.push_back(id);

  // Intersection of the primes of the cells.
  MonomialIdeal by_primes = MonomialIdeal::unit(m);
  for (std::size_t id : cells) by_primes = intersect(by_primes, MonomialIdeal::prime(m, lat[id].facets));

  // Minimal ray sets whose facets cover every cell, tested on coordinates.
  std::vector<std::vector<bool>> covers(cells.size(), std::vector<bool>(m, false));
  for (std::size_t c = 0; c < cells.size(); ++c)
    for (std::size_t r = 0; r < m; ++r)
      covers[c][r] = std::all_of(lat[cells[c]].vertices.begin(), lat[cells[c]].vertices.end(),
                                 [&](std::size_t v) { return nabla.facets()[r].evaluate(nabla.vertices()[v]) == 0; });
  std::vector<std::vector<std::size_t>> found;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, std::size_t)> search = [&](std::size_t start, std::size_t size) {
    if (chosen.size() == size) {
      for (const auto& f : found)
        if (std::includes(chosen.begin(), chosen.end(), f.begin(), f.end())) return;
      for (std::size_t c = 0; c < cells.size(); ++c)
        if (std::none_of(chosen.begin(), chosen.end(), [&](std::size_t r) { return covers[c][r]; })) return;
      found.push_back(chosen);
      return;
    }
    for (std::size_t r = start; r < m; ++r) {
      chosen.push_back(r);
      search(r + 1, size);
      chosen.pop_back();
    }
  };
  for (std::size_t size = 0; size <= std::min(m, cells.size()); ++size) search(0, size);
  std::vector<Monomial> gens;
  for (const auto& f : found) gens.push_back(squarefree_product(m, f));
  MonomialIdeal by_covers(m, std::move(gens));

  if (!(by_covers == by_primes))
    throw Error(ErrorCode::FormsDisagree,
                "covering form " + by_covers.to_string("y") + " differs from " + by_primes.to_string("y"));
  return by_covers;
}

std::vector<LatticeVector> deformation_support_xi(const MonomialIdeal& i0, const ToricData& t) {
  FaceComplex strata = strata_subcomplex(i0, t);
  const Polytope& p = t.fano();
  std::set<LatticeVector> points;
  for (const Face& g : strata.faces()) {
    if (g.dim < 0 || g.facets.empty()) continue;
    std::vector<RationalVector> verts;
    for (std::size_t r : g.facets) verts.push_back(p.vertices()[r]);
    for (auto& x : lattice_points(hull_of_points(verts, p.ambient_dim()))) points.insert(std::move(x));
  }
  return {points.begin(), points.end()};
}

namespace {

Integer total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), Integer(0)); }

// Calls visit on the monomials of the given degree in lexicographically
// increasing order until it returns true.
bool for_each_monomial(std::size_t nvars, long degree, const std::function<bool(const Monomial&)>& visit) {
  Monomial u(nvars);
  std::function<bool(std::size_t, long)> rec = [&](std::size_t i, long rest) {
    if (i + 1 == nvars) {
      u[i] = rest;
      return visit(u);
    }
    for (long e = 0; e <= rest; ++e) {
      u[i] = e;
      if (rec(i + 1, rest - e)) return true;
    }
    u[i] = 0;
    return false;
  };
  return nvars > 0 && rec(0, degree);
}

}  // namespace

std::vector<MirrorGenerator> mirror_family(const MonomialIdeal& i0_mirror, const std::vector<LatticeVector>& xi,
                                           const ToricData& mirror) {
  PicardSublattice pic = picard_sublattice(mirror);
  const std::size_t m = mirror.num_rays();


  std::vector<MirrorGenerator> out;
  const auto& gens = i0_mirror.generators();
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const Monomial& g = gens[j];
    // The complement of the support and the torsion power both bound the
    // degree of a minimal multiplier.
    long bound = static_cast<long>(m - support(g).size());
    long power_bound = static_cast<long>((pic.torsion_exponent - 1) * total_degree(g));
    bound = std::max(bound, power_bound);
    std::optional<Monomial> found;
    for (long d = 0; d <= bound && !found; ++d)
      for_each_monomial(m, d, [&](const Monomial& u) {
        if (!pic.contains(add(g, u))) return false;
        found = u;
        return true;
      });
    if (!found)
      throw Error(ErrorCode::NoCartierMultiple,
                  "no monomial multiple of " + format_monomial(g, "y") + " has a Cartier class");

    MirrorGenerator mg;
    mg.base = g;
    mg.multiplier = *found;
    mg.promoted = add(g, *found);
    if (total_degree(*found) == 0) {
      mg.promotion = "cartier";
    } else {
      bool power = false;
      for (Integer k = 2; k * total_degree(g) <= total_degree(mg.promoted) && !power; ++k) {
        Monomial gk = g;
        for (auto& e : gk) e *= k;
        power = gk == mg.promoted;
      }
      mg.promotion = power ? "power" : "mixed";
    }
    out.push_back(std::move(mg));
  }

  std::vector<bool> redundant(out.size(), false);
  for (std::size_t j = 0; j < out.size(); ++j)
    for (std::size_t k = 0; k < out.size() && !redundant[j]; ++k)
      if (k != j && divides(out[k].promoted, out[j].promoted))
        redundant[j] = out[k].promoted != out[j].promoted || k < j;
  std::vector<MirrorGenerator> kept;
  for (std::size_t j = 0; j < out.size(); ++j)
    if (!redundant[j]) kept.push_back(std::move(out[j]));

  for (std::size_t j = 0; j < kept.size(); ++j)
    for (std::size_t a = 0; a < xi.size(); ++a) {
      Monomial image = add(kept[j].promoted, mirror.ray_matrix().apply(xi[a]));
      if (!is_nonnegative(image) || i0_mirror.contains(image)) continue;
      kept[j].perturbations.push_back({xi[a], "c" + std::to_string(j) + "_" + std::to_string(a), std::move(image)});
    }
  return kept;
}

namespace {

template <typename F>
auto step(const std::string& label, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const Error& e) {
    throw Error(e.code(), label + ": " + e.detail());
  }
}

}  // namespace

MirrorResult run_pipeline(const MonomialIdeal& i0, const ToricData& t, const std::optional<NefPartition>& partition) {
  MirrorResult r;
  r.toric = t;

  NefPartition blocks = step("input", [&] {
    if (i0.nvars() != t.num_rays()) throw Error(ErrorCode::DimensionMismatch, "ideal and fan have different rays");
    if (partition) {
      validate_nef_partition(t, *partition);
      std::vector<Monomial> gens;
      for (const auto& b : *partition) gens.push_back(squarefree_product(t.num_rays(), b));
      if (!(MonomialIdeal(t.num_rays(), gens) == i0))
        throw Error(ErrorCode::InvalidNefPartition, "ideal is not generated by the block monomials");
      return *partition;
    }
    auto inferred = partition_from_ideal(i0);
    if (!inferred)
      throw Error(ErrorCode::InvalidNefPartition,
                  "ideal is not generated by products over the blocks of a partition of the rays");
    return *inferred;
  });

  step("strata complex", [&] {
    r.strata = strata_subcomplex(i0, t);
    try {
      r.strata_sphere = sphere_proxy_check(r.strata);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotEquidimensional) throw;
      throw Error(ErrorCode::SphereCheckFailed, "strata complex is not equidimensional");
    }
    if (!r.strata_sphere.passed) throw Error(ErrorCode::SphereCheckFailed, "strata complex is not sphere-like");
  });

  step("deformations", [&] {
    r.degeneration = canonical_degeneration(blocks, t);
    r.pt1 = pt1_basis(i0, t);
  });

  step("deformation hull", [&] {
    r.nabla_dual = nabla_dual_from_hull(r.pt1.alphas(), t.dim());
    if (!r.nabla_dual.full_dimensional())
      throw Error(ErrorCode::NotFullDimensional, "deformation hull is not full-dimensional");
    r.nabla = polar_dual(r.nabla_dual);
    r.nabla_reflexive = is_reflexive(r.nabla);
    r.cone = groebner_cone(r.degeneration, t);
    Polytope sliced = nabla_from_cone(r.cone);
    if (!sliced.same_vertex_set(r.nabla))
      throw Error(ErrorCode::DualityMismatch, "Groebner cone slice differs from the dual of the deformation hull");
  });

  step("tropical faces", [&] {
    r.combinatorial = tropical_faces_combinatorial(r.degeneration, r.nabla_dual, r.strata);
    FaceComplex prevariety = tropical_faces_prevariety(r.degeneration, r.nabla, t);
    if (!(prevariety == r.combinatorial.cocomplex))
      throw Error(ErrorCode::TropicalTestsDisagree, "combinatorial and prevariety tests select different faces");
    r.tropical_dual = r.combinatorial.cocomplex;
  });

  step("dualize", [&] {
    r.tropical = special_fiber_tropical_complex(r.tropical_dual);
    r.tropical_sphere = sphere_proxy_check(r.tropical);
  });

  step("mirror ideal", [&] {
    r.mirror_toric = toric_from_fano(r.nabla_dual);
    r.mirror_ideal = mirror_ideal(r.tropical, r.mirror_toric);
    r.mirror_partition = partition_from_ideal(r.mirror_ideal).value_or(NefPartition{});
  });

  step("mirror family", [&] {
    r.xi = deformation_support_xi(i0, t);
    r.family = mirror_family(r.mirror_ideal, r.xi, r.mirror_toric);
    if (r.mirror_partition.empty()) {
      std::vector<Monomial> promoted;
      for (const auto& g : r.family) promoted.push_back(g.promoted);
      if (auto p = partition_from_ideal(MonomialIdeal(r.mirror_toric.num_rays(), promoted))) r.mirror_partition = *p;
    }
  });
  return r;
}

}  // namespace tropmirror
