#include "core/toric.hpp"

#include "core/errors.hpp"

#include <algorithm>
#include <set>

namespace tropmirror {

namespace {

Integer mod_positive(const Integer& x, const Integer& n) {
  Integer r = x % n;
  if (r < 0) r += n;
  return r;
}

void check_divisor(const ToricData& t, const TorusDivisor& d) {
  if (d.size() != t.num_rays())
    throw Error(ErrorCode::DimensionMismatch, "divisor needs one coefficient per ray");
}

}  // namespace

ToricData toric_from_fano(const Polytope& p) {
  if (!p.full_dimensional()) throw Error(ErrorCode::NotFano, "polytope is not full-dimensional");
  if (!p.integral()) throw Error(ErrorCode::NotFano, "polytope has non-integral vertices");
  const std::size_t n = p.ambient_dim();
  if (!p.relative_interior_contains(RationalVector(n)))
    throw Error(ErrorCode::NotFano, "origin is not an interior point");
  for (const auto& x : lattice_points(p)) {
    bool origin = std::all_of(x.begin(), x.end(), [](const Integer& c) { return c == 0; });
    if (!origin && p.relative_interior_contains(to_rational(x)))
      throw Error(ErrorCode::NotFano, "interior lattice point " + format_vector(x) + " besides the origin");
  }

  ToricData t;
  t.fano_ = p;
  for (const auto& v : p.lattice_vertices()) t.rays_.push_back(primitive(v));
  t.ray_matrix_ = IntegerMatrix::from_rows(t.rays_, n);
  t.max_cones_ = p.facet_vertices();
  t.smith_ = smith_normal_form(t.ray_matrix_);
  // Orient the free coordinates so that the anticanonical class is positive.
  for (std::size_t i = n; i < t.rays_.size(); ++i) {
    Integer sum = 0, first = 0;
    for (std::size_t r = 0; r < t.rays_.size(); ++r) {
      sum += t.smith_.left(i, r);
      if (first == 0) first = t.smith_.left(i, r);
    }
    if (sum < 0 || (sum == 0 && first < 0)) t.smith_.left.negate_row(i);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (t.smith_.diagonal[i] > 1) {
      t.torsion_rows_.push_back(i);
      t.torsion_orders_.push_back(t.smith_.diagonal[i]);
    }
  return t;
}

ToricData toric_from_fan(const std::vector<LatticeVector>& rays,
                         const std::vector<std::vector<std::size_t>>& max_cones) {
  if (rays.empty()) throw Error(ErrorCode::Schema, "no rays given");
  const std::size_t n = rays.front().size();
  for (const auto& r : rays)
    if (r.size() != n) throw Error(ErrorCode::DimensionMismatch, "rays have different lengths");
  Polytope p = convex_hull(rays, n);
  if (p.vertices().size() != rays.size())
    throw Error(ErrorCode::Schema, "every ray must be a vertex of the convex hull of the rays");
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (p.vertices()[i] != to_rational(rays[i]))
      throw Error(ErrorCode::Schema, "repeated ray " + format_vector(rays[i]));
  if (!p.full_dimensional()) throw Error(ErrorCode::NotFano, "rays do not span the lattice");

  std::set<std::vector<std::size_t>> given;
  for (auto cone : max_cones) {
    for (std::size_t r : cone)
      if (r >= rays.size()) throw Error(ErrorCode::Schema, "cone refers to a missing ray");
    std::sort(cone.begin(), cone.end());
    given.insert(std::move(cone));
  }
  std::set<std::vector<std::size_t>> facets(p.facet_vertices().begin(), p.facet_vertices().end());
  if (given != facets || given.size() != max_cones.size())
    throw Error(ErrorCode::Schema, "maximal cones must be the cones over the facets of conv(rays)");
  return toric_from_fano(p);
}

DivisorClass ToricData::degree(const LatticeVector& e) const {
  if (e.size() != num_rays()) throw Error(ErrorCode::DimensionMismatch, "exponent vector has wrong length");
  LatticeVector y = smith_.left.apply(e);
  DivisorClass c;
  for (std::size_t k = 0; k < torsion_rows_.size(); ++k)
    c.torsion.push_back(mod_positive(y[torsion_rows_[k]], torsion_orders_[k]));
  for (std::size_t i = dim(); i < num_rays(); ++i) c.free.push_back(y[i]);
  return c;
}

TorusDivisor ToricData::representative(const DivisorClass& c) const {
  if (c.free.size() != class_group_rank() || c.torsion.size() != torsion_orders_.size())
    throw Error(ErrorCode::DimensionMismatch, "class has wrong shape");
  LatticeVector y(num_rays());
  for (std::size_t k = 0; k < torsion_rows_.size(); ++k) y[torsion_rows_[k]] = c.torsion[k];
  for (std::size_t i = dim(); i < num_rays(); ++i) y[i] = c.free[i - dim()];
  return *solve_integer(smith_.left, y);
}

Polytope divisor_polytope(const ToricData& t, const TorusDivisor& d) {
  check_divisor(t, d);
  std::vector<Facet> ineqs;
  for (std::size_t r = 0; r < t.num_rays(); ++r) ineqs.push_back({t.rays()[r], Rational(d[r])});
  return polytope_from_inequalities(ineqs, t.dim());
}

std::vector<Monomial> sections_basis(const ToricData& t, const DivisorClass& c,
                                     const TorusDivisor& representative) {
  if (t.degree(representative) != c)
    throw Error(ErrorCode::DimensionMismatch, "representative does not have the requested class");
  Polytope p = divisor_polytope(t, representative);
  std::vector<Monomial> out;
  if (p.empty()) return out;
  for (const auto& alpha : lattice_points(p)) out.push_back(add(t.ray_matrix().apply(alpha), representative));
  return out;
}

CartierData is_cartier(const ToricData& t, const TorusDivisor& d) {
  check_divisor(t, d);
  CartierData out;
  out.cartier = true;
  for (const auto& cone : t.max_cones()) {
    IntegerMatrix a = t.ray_matrix().select_rows(cone);
    LatticeVector rhs;
    for (std::size_t r : cone) rhs.push_back(-d[r]);
    out.local.push_back(solve_integer(a, rhs));
    if (!out.local.back()) out.cartier = false;
  }
  return out;
}

bool is_nef(const ToricData& t, const TorusDivisor& d) {
  CartierData c = is_cartier(t, d);
  if (!c.cartier) throw Error(ErrorCode::NotCartier, "divisor " + format_vector(d) + " is not Cartier");
  for (const auto& m : c.local)
    for (std::size_t r = 0; r < t.num_rays(); ++r)
      if (dot(*m, t.rays()[r]) < -d[r]) return false;
  return true;
}

PicardSublattice picard_sublattice(const ToricData& t) {
  const std::size_t n = t.dim(), k = t.max_cones().size(), m = t.num_rays();
  std::vector<std::vector<std::size_t>> cones_of(m);
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t r : t.max_cones()[s]) cones_of[r].push_back(s);

  // Compatible families (m_sigma): neighbouring cones agree on shared rays.
  std::vector<LatticeVector> constraints;
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 1; i < cones_of[r].size(); ++i) {
      LatticeVector row(n * k);
      for (std::size_t c = 0; c < n; ++c) {
        row[cones_of[r][0] * n + c] += t.rays()[r][c];
        row[cones_of[r][i] * n + c] -= t.rays()[r][c];
      }
      constraints.push_back(std::move(row));
    }
  IntegerMatrix kernel = constraints.empty() ? IntegerMatrix::identity(n * k)
                                             : kernel_basis(IntegerMatrix::from_rows(constraints, n * k));

  std::vector<LatticeVector> divisors;
  for (std::size_t q = 0; q < kernel.cols(); ++q) {
    LatticeVector col = kernel.col(q);
    TorusDivisor a(m);
    for (std::size_t r = 0; r < m; ++r) {
      std::size_t s = cones_of[r].front();
      LatticeVector ms(col.begin() + static_cast<std::ptrdiff_t>(s * n),
                       col.begin() + static_cast<std::ptrdiff_t>((s + 1) * n));
      a[r] = -dot(ms, t.rays()[r]);
    }
    divisors.push_back(std::move(a));
  }

  PicardSublattice out;
  std::set<DivisorClass> seen;
  DivisorClass zero = t.degree(LatticeVector(m));
  for (const auto& a : divisors) {
    DivisorClass c = t.degree(a);
    if (c != zero && seen.insert(c).second) out.generators.push_back(c);
  }
  IntegerMatrix cdiv(m, divisors.size());
  for (std::size_t q = 0; q < divisors.size(); ++q)
    for (std::size_t r = 0; r < m; ++r) cdiv(r, q) = divisors[q][r];
  SmithDecomposition snf = smith_normal_form(cdiv);
  std::size_t rk = snf.rank();
  out.rank = rk - n;
  out.index = 0;
  out.torsion_exponent = 1;
  for (std::size_t i = 0; i < rk; ++i)
    out.torsion_exponent = boost::multiprecision::lcm(out.torsion_exponent, snf.diagonal[i]);
  out.cartier_left = snf.left;
  out.cartier_diagonal.assign(snf.diagonal.begin(), snf.diagonal.begin() + static_cast<std::ptrdiff_t>(rk));
  if (rk == m) {
    out.index = 1;
    for (std::size_t i = 0; i < rk; ++i) out.index *= snf.diagonal[i];
  }
  return out;
}

bool PicardSublattice::contains(const TorusDivisor& d) const {
  LatticeVector y = cartier_left.apply(d);
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < cartier_diagonal.size()) {
      if (y[i] % cartier_diagonal[i] != 0) return false;
    } else if (y[i] != 0) {
      return false;
    }
  }
  return true;
}

bool is_picard_class(const ToricData& t, const DivisorClass& c) {
  return is_cartier(t, t.representative(c)).cartier;
}

MonomialIdeal irrelevant_ideal(const ToricData& t) {
  std::vector<Monomial> gens;
  for (const auto& cone : t.max_cones()) {
    Monomial g(t.num_rays(), Integer(1));
    for (std::size_t r : cone) g[r] = 0;
    gens.push_back(std::move(g));
  }
  return MonomialIdeal(t.num_rays(), std::move(gens));
}

RationalVector weight_lift(const ToricData& t, const RationalVector& w) {
  if (w.size() != t.dim()) throw Error(ErrorCode::DimensionMismatch, "weight has wrong length");
  return t.ray_matrix().apply(w);
}

namespace {

RationalVector gram_solve(const ToricData& t, const RationalVector& rhs) {
  IntegerMatrix a = t.ray_matrix();
  return *solve_rational(a.transpose() * a, rhs);
}

}  // namespace

RationalVector weight_project(const ToricData& t, const RationalVector& u) {
  if (u.size() != t.num_rays()) throw Error(ErrorCode::DimensionMismatch, "weight has wrong length");
  return gram_solve(t, t.ray_matrix().transpose().apply(u));
}

RationalVector weight_section(const ToricData& t, const RationalVector& w) {
  if (w.size() != t.dim()) throw Error(ErrorCode::DimensionMismatch, "weight has wrong length");
  return t.ray_matrix().apply(gram_solve(t, w));
}

TorusDivisor block_divisor(const ToricData& t, const std::vector<std::size_t>& block) {
  TorusDivisor d(t.num_rays());
  for (std::size_t r : block) d[r] = 1;
  return d;
}

void validate_nef_partition(const ToricData& t, const NefPartition& blocks) {
  std::vector<int> used(t.num_rays(), 0);
  for (const auto& block : blocks) {
    if (block.empty()) throw Error(ErrorCode::InvalidNefPartition, "empty block");
    for (std::size_t r : block) {
      if (r >= t.num_rays()) throw Error(ErrorCode::InvalidNefPartition, "block refers to a missing ray");
      ++used[r];
    }
  }
  for (std::size_t r = 0; r < t.num_rays(); ++r)
    if (used[r] != 1)
      throw Error(ErrorCode::InvalidNefPartition,
                  "ray " + std::to_string(r) + (used[r] ? " lies in several blocks" : " lies in no block"));
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    TorusDivisor e = block_divisor(t, blocks[j]);
    if (!is_cartier(t, e).cartier)
      throw Error(ErrorCode::InvalidNefPartition, "block " + std::to_string(j) + " is not Cartier");
    if (!is_nef(t, e)) throw Error(ErrorCode::InvalidNefPartition, "block " + std::to_string(j) + " is not nef");
  }
}

}  // namespace tropmirror
