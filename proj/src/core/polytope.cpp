#include "core/polytope.hpp"

#include "core/cone.hpp"
#include "core/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace tropmirror {

Rational Facet::evaluate(const RationalVector& x) const { return dot(x, normal) + offset; }

bool Polytope::contains(const RationalVector& x) const {
  if (empty() || x.size() != ambient_dim_) return false;
  for (const auto& e : equations_)
    if (e.evaluate(x) != 0) return false;
  for (const auto& f : facets_)
    if (f.evaluate(x) < 0) return false;
  return true;
}

bool Polytope::contains(const LatticeVector& x) const { return contains(to_rational(x)); }

bool Polytope::relative_interior_contains(const RationalVector& x) const {
  if (!contains(x)) return false;
  if (dim_ == 0) return true;
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return f.evaluate(x) > 0; });
}

bool Polytope::integral() const {
  return std::all_of(vertices_.begin(), vertices_.end(),
                     [](const RationalVector& v) { return is_integral(v); });
}

std::vector<LatticeVector> Polytope::lattice_vertices() const {
  std::vector<LatticeVector> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(to_integer(v));
  return out;
}

std::optional<std::size_t> Polytope::vertex_index(const RationalVector& x) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), x);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool Polytope::same_vertex_set(const Polytope& other) const {
  if (ambient_dim_ != other.ambient_dim_) return false;
  std::set<RationalVector> a(vertices_.begin(), vertices_.end());
  std::set<RationalVector> b(other.vertices_.begin(), other.vertices_.end());
  return a == b;
}

Polytope empty_polytope(std::size_t ambient_dim) {
  Polytope p;
  p.ambient_dim_ = ambient_dim;
  p.dim_ = -1;
  return p;
}

namespace {

// Pivot columns of the row space spanned by `vectors`.
std::vector<std::size_t> pivot_columns(std::vector<RationalVector> a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < a.size(); ++j) {
    std::size_t p = r;
    while (p < a.size() && a[p][j] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][j] == 0) continue;
      Rational f = a[i][j] / a[r][j];
      for (std::size_t k = j; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    pivots.push_back(j);
    ++r;
  }
  return pivots;
}

LatticeVector clear_denominators(const RationalVector& v) {
  Integer d = common_denominator(v);
  LatticeVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Integer(numerator(v[i] * Rational(d)));
  return out;
}

int affine_dimension(const std::vector<RationalVector>& pts) {
  if (pts.empty()) return -1;
  std::vector<RationalVector> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RationalVector d(pts[i].size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = pts[i][k] - pts[0][k];
    diffs.push_back(std::move(d));
  }
  return static_cast<int>(rank(diffs));
}

}  // namespace

Polytope hull_of_points(std::span<const RationalVector> input, std::size_t n) {
  if (input.empty()) throw Error(ErrorCode::Schema, "convex hull of an empty point set");
  std::vector<RationalVector> pts;
  {
    std::set<RationalVector> seen;
    for (const auto& p : input) {
      if (p.size() != n) throw Error(ErrorCode::DimensionMismatch, "point has wrong dimension");
      if (seen.insert(p).second) pts.push_back(p);
    }
  }

  Polytope out;
  out.ambient_dim_ = n;

  std::vector<RationalVector> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RationalVector d(n);
    for (std::size_t k = 0; k < n; ++k) d[k] = pts[i][k] - pts[0][k];
    diffs.push_back(std::move(d));
  }
  const std::vector<std::size_t> pivots = pivot_columns(diffs, n);
  const std::size_t k = pivots.size();
  out.dim_ = static_cast<int>(k);

  if (k < n) {
    std::vector<LatticeVector> rows;
    for (const auto& d : diffs) rows.push_back(clear_denominators(d));
    IntegerMatrix kernel = kernel_basis(IntegerMatrix::from_rows(rows, n));
    for (std::size_t c = 0; c < kernel.cols(); ++c) {
      LatticeVector normal = primitive(kernel.col(c));
      out.equations_.push_back(Facet{normal, -dot(pts[0], normal)});
    }
  }

  if (k == 0) {
    out.vertices_ = {pts[0]};
    out.vertex_facets_ = {{}};
    return out;
  }

  std::vector<LatticeVector> rows;
  rows.reserve(pts.size());
  for (const auto& p : pts) {
    RationalVector h(k + 1);
    h[0] = 1;
    for (std::size_t i = 0; i < k; ++i) h[i + 1] = p[pivots[i]];
    rows.push_back(clear_denominators(h));
  }
  auto cone = extreme_rays(rows, k + 1);
  if (!cone) throw Error(ErrorCode::DualityMismatch, "inequality cone of a hull is not pointed");

  struct RawFacet {
    Facet facet;
    std::vector<std::size_t> points;
  };
  std::vector<RawFacet> raw;
  for (std::size_t r = 0; r < cone->rays.size(); ++r) {
    const LatticeVector& ray = cone->rays[r];
    LatticeVector normal(n);
    for (std::size_t i = 0; i < k; ++i) normal[pivots[i]] = ray[i + 1];
    Integer g = content(normal);
    Facet f;
    f.offset = Rational(ray[0], g);
    for (auto& x : normal) x /= g;
    f.normal = std::move(normal);
    raw.push_back(RawFacet{std::move(f), cone->tight_rows[r]});
  }

  // A point is a vertex iff no other point is tight on a superset of its facets.
  std::vector<std::vector<std::size_t>> point_facets(pts.size());
  for (std::size_t f = 0; f < raw.size(); ++f)
    for (std::size_t p : raw[f].points) point_facets[p].push_back(f);
  std::vector<long> new_index(pts.size(), -1);
  for (std::size_t p = 0; p < pts.size(); ++p) {
    bool vertex = true;
    for (std::size_t q = 0; q < pts.size() && vertex; ++q) {
      if (q == p) continue;
      if (std::includes(point_facets[q].begin(), point_facets[q].end(),
                        point_facets[p].begin(), point_facets[p].end()))
        vertex = false;
    }
    if (vertex) {
      new_index[p] = static_cast<long>(out.vertices_.size());
      out.vertices_.push_back(pts[p]);
    }
  }

  for (auto& f : raw) {
    std::vector<std::size_t> verts;
    for (std::size_t p : f.points)
      if (new_index[p] >= 0) verts.push_back(static_cast<std::size_t>(new_index[p]));
    std::sort(verts.begin(), verts.end());
    f.points = std::move(verts);
  }
  std::sort(raw.begin(), raw.end(),
            [](const RawFacet& a, const RawFacet& b) { return a.points < b.points; });
  out.vertex_facets_.assign(out.vertices_.size(), {});
  for (std::size_t f = 0; f < raw.size(); ++f) {
    out.facets_.push_back(raw[f].facet);
    for (std::size_t v : raw[f].points) out.vertex_facets_[v].push_back(f);
    out.facet_vertices_.push_back(std::move(raw[f].points));
  }
  return out;
}

Polytope convex_hull(std::span<const LatticeVector> points, std::size_t ambient_dim) {
  std::vector<RationalVector> pts;
  pts.reserve(points.size());
  for (const auto& p : points) pts.push_back(to_rational(p));
  return hull_of_points(pts, ambient_dim);
}

Polytope polytope_from_inequalities(std::span<const Facet> inequalities, std::size_t n) {
  std::vector<LatticeVector> rows;
  for (const auto& f : inequalities) {
    if (f.normal.size() != n)
      throw Error(ErrorCode::DimensionMismatch, "inequality has wrong dimension");
    RationalVector h(n + 1);
    h[0] = f.offset;
    for (std::size_t i = 0; i < n; ++i) h[i + 1] = Rational(f.normal[i]);
    rows.push_back(clear_denominators(h));
  }
  LatticeVector t_nonneg(n + 1);
  t_nonneg[0] = 1;
  rows.push_back(t_nonneg);

  auto cone = extreme_rays(rows, n + 1);
  if (!cone) throw Error(ErrorCode::Unbounded, "inequality system has a lineality space");

  std::vector<RationalVector> verts;
  bool recession = false;
  for (const auto& ray : cone->rays) {
    if (ray[0] == 0) {
      recession = true;
      continue;
    }
    RationalVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Rational(ray[i + 1], ray[0]);
    verts.push_back(std::move(v));
  }
  if (verts.empty()) return empty_polytope(n);
  if (recession) throw Error(ErrorCode::Unbounded, "inequality system is unbounded");
  std::sort(verts.begin(), verts.end());
  return hull_of_points(verts, n);
}

Polytope polar_dual(const Polytope& p) {
  if (!p.full_dimensional())
    throw Error(ErrorCode::NotFullDimensional, "polar dual of a lower-dimensional polytope");
  for (const auto& f : p.facets_)
    if (f.offset <= 0) throw Error(ErrorCode::OriginNotInterior, "origin is not an interior point");

  Polytope d;
  d.ambient_dim_ = p.ambient_dim_;
  d.dim_ = p.dim_;
  for (const auto& f : p.facets_) {
    RationalVector v(p.ambient_dim_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rational(f.normal[i]) / f.offset;
    d.vertices_.push_back(std::move(v));
  }
  for (const auto& v : p.vertices_) {
    Integer den = common_denominator(v);
    LatticeVector a(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) a[i] = Integer(numerator(v[i] * Rational(den)));
    Integer g = content(a);
    for (auto& x : a) x /= g;
    d.facets_.push_back(Facet{std::move(a), Rational(den, g)});
  }
  d.facet_vertices_ = p.vertex_facets_;
  d.vertex_facets_ = p.facet_vertices_;
  return d;
}

std::vector<LatticeVector> lattice_points(const Polytope& p) {
  if (p.empty()) return {};
  const std::size_t n = p.ambient_dim();
  LatticeVector lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational mn = p.vertices()[0][i], mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = ceil_of(mn);
    hi[i] = floor_of(mx);
    if (lo[i] > hi[i]) return {};
  }
  std::vector<LatticeVector> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  LatticeVector x = lo;
  for (;;) {
    if (p.contains(x)) out.push_back(x);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (x[i] < hi[i]) {
        x[i] += 1;
        for (std::size_t j = i + 1; j < n; ++j) x[j] = lo[j];
        break;
      }
      if (i == 0) return out;
    }
  }
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "Minkowski sum of polytopes in different spaces");
  if (p.empty() || q.empty()) return empty_polytope(p.ambient_dim());
  std::vector<RationalVector> sums;
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) sums.push_back(add(a, b));
  return hull_of_points(sums, p.ambient_dim());
}

bool is_reflexive(const Polytope& p) {
  if (!p.full_dimensional() || !p.integral()) return false;
  for (const auto& f : p.facets())
    if (f.offset <= 0) return false;
  Polytope d = polar_dual(p);
  return d.integral();
}

// ---------------------------------------------------------------------------
// Face lattice

FaceLattice::FaceLattice(std::size_t ambient_dim, int polytope_dim, std::vector<Face> faces)
    : ambient_dim_(ambient_dim), polytope_dim_(polytope_dim), faces_(std::move(faces)) {
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    return std::tie(a.dim, a.vertices) < std::tie(b.dim, b.vertices);
  });
  for (std::size_t i = 0; i < faces_.size(); ++i) by_vertices_[faces_[i].vertices] = i;
  covers_.assign(faces_.size(), {});
  for (std::size_t big = 0; big < faces_.size(); ++big)
    for (std::size_t small = 0; small < faces_.size(); ++small)
      if (faces_[small].dim + 1 == faces_[big].dim && is_subface(small, big))
        covers_[big].push_back(small);
}

std::optional<std::size_t> FaceLattice::find_by_vertices(const std::vector<std::size_t>& vertices) const {
  auto it = by_vertices_.find(vertices);
  if (it == by_vertices_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FaceLattice::find_by_facets(const std::vector<std::size_t>& facets) const {
  // Scan from the top so that, for a point polytope, the point itself wins
  // over the empty face (both are tight on no facet).
  for (std::size_t i = faces_.size(); i-- > 0;)
    if (faces_[i].facets == facets) return i;
  return std::nullopt;
}

std::vector<std::size_t> FaceLattice::of_dim(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].dim == d) out.push_back(i);
  return out;
}

std::size_t FaceLattice::empty_face() const { return 0; }
std::size_t FaceLattice::full_face() const { return faces_.size() - 1; }

bool FaceLattice::is_subface(std::size_t small, std::size_t big) const {
  const auto& a = faces_[small].vertices;
  const auto& b = faces_[big].vertices;
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

FaceLattice face_lattice(const Polytope& p) {
  std::vector<Face> faces;
  faces.push_back(Face{-1, {}, {}});
  if (p.empty()) return FaceLattice(p.ambient_dim(), -1, std::move(faces));

  const std::size_t nv = p.vertices().size();
  const std::size_t nf = p.facets().size();
  std::vector<std::size_t> all_facets(nf);
  std::iota(all_facets.begin(), all_facets.end(), 0);
  faces.front().facets = all_facets;

  auto closure = [&](const std::vector<std::size_t>& verts) {
    Face f;
    for (std::size_t j = 0; j < nf; ++j) {
      const auto& fv = p.facet_vertices()[j];
      if (std::includes(fv.begin(), fv.end(), verts.begin(), verts.end())) f.facets.push_back(j);
    }
    if (f.facets.empty()) {
      f.vertices.resize(nv);
      std::iota(f.vertices.begin(), f.vertices.end(), 0);
    } else {
      f.vertices = p.facet_vertices()[f.facets.front()];
      for (std::size_t j : f.facets) {
        std::vector<std::size_t> tmp;
        const auto& fv = p.facet_vertices()[j];
        std::set_intersection(f.vertices.begin(), f.vertices.end(), fv.begin(), fv.end(),
                              std::back_inserter(tmp));
        f.vertices = std::move(tmp);
      }
    }
    std::vector<RationalVector> pts;
    for (std::size_t v : f.vertices) pts.push_back(p.vertices()[v]);
    f.dim = affine_dimension(pts);
    return f;
  };

  std::vector<std::size_t> all_vertices(nv);
  std::iota(all_vertices.begin(), all_vertices.end(), 0);
  Face top{p.dim(), all_vertices, {}};

  std::set<std::vector<std::size_t>> seen{top.vertices};
  std::deque<Face> work{top};
  while (!work.empty()) {
    Face f = std::move(work.front());
    work.pop_front();
    for (std::size_t j = 0; j < nf; ++j) {
      if (std::binary_search(f.facets.begin(), f.facets.end(), j)) continue;
      std::vector<std::size_t> meet;
      const auto& fv = p.facet_vertices()[j];
      std::set_intersection(f.vertices.begin(), f.vertices.end(), fv.begin(), fv.end(),
                            std::back_inserter(meet));
      if (meet.empty()) continue;
      Face g = closure(meet);
      if (seen.insert(g.vertices).second) work.push_back(g);
    }
    faces.push_back(std::move(f));
  }
  return FaceLattice(p.ambient_dim(), p.dim(), std::move(faces));
}

Face dual_face(const Polytope& p, const Face& f) {
  if (!p.full_dimensional())
    throw Error(ErrorCode::NotFullDimensional, "face duality needs a full-dimensional polytope");
  for (const auto& facet : p.facets())
    if (facet.offset <= 0) throw Error(ErrorCode::OriginNotInterior, "origin is not an interior point");
  return Face{p.dim() - 1 - f.dim, f.facets, f.vertices};
}

FVector fvector(std::span<const Face> faces, std::size_t ambient_dim) {
  FVector counts(ambient_dim + 2, 0);
  for (const auto& f : faces) counts.at(static_cast<std::size_t>(f.dim + 1)) += 1;
  return counts;
}

}  // namespace tropmirror
