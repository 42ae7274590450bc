#include "core/cone.hpp"

#include "core/errors.hpp"

#include <boost/dynamic_bitset.hpp>

namespace tropmirror {

namespace {

using Bits = boost::dynamic_bitset<>;

struct Ray {
  LatticeVector v;
  Bits zero;  // processed rows on which the ray vanishes
};

// Greedily pick `dim` linearly independent rows; fewer means not pointed.
std::vector<std::size_t> independent_rows(std::span<const LatticeVector> rows, std::size_t dim) {
  std::vector<std::size_t> chosen;
  std::vector<RationalVector> basis;  // echelonised copies of the chosen rows
  std::vector<std::size_t> pivot_of;
  for (std::size_t i = 0; i < rows.size() && chosen.size() < dim; ++i) {
    RationalVector r = to_rational(rows[i]);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational& coef = r[pivot_of[b]];
      if (coef == 0) continue;
      Rational f = coef / basis[b][pivot_of[b]];
      for (std::size_t k = 0; k < dim; ++k) r[k] -= f * basis[b][k];
    }
    std::size_t p = 0;
    while (p < dim && r[p] == 0) ++p;
    if (p == dim) continue;
    basis.push_back(std::move(r));
    pivot_of.push_back(p);
    chosen.push_back(i);
  }
  return chosen;
}

LatticeVector scaled_primitive(const RationalVector& v) {
  Integer d = common_denominator(v);
  LatticeVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Integer(numerator(v[i] * Rational(d)));
  return primitive(out);
}

}  // namespace

std::optional<ConeRays> extreme_rays(std::span<const LatticeVector> rows, std::size_t dim) {
  for (const auto& r : rows)
    if (r.size() != dim) throw Error(ErrorCode::DimensionMismatch, "cone row has wrong length");
  if (dim == 0) return ConeRays{};

  std::vector<std::size_t> basis = independent_rows(rows, dim);
  if (basis.size() < dim) return std::nullopt;

  const std::size_t m = rows.size();
  std::vector<Ray> rays;
  {
    IntegerMatrix b = IntegerMatrix::from_rows(
        std::vector<LatticeVector>([&] {
          std::vector<LatticeVector> sel;
          for (std::size_t i : basis) sel.push_back(rows[i]);
          return sel;
        }()),
        dim);
    for (std::size_t k = 0; k < dim; ++k) {
      RationalVector e(dim);
      e[k] = 1;
      auto sol = solve_rational(b, e);
      Ray ray{scaled_primitive(*sol), Bits(m)};
      for (std::size_t j = 0; j < dim; ++j)
        if (j != k) ray.zero.set(basis[j]);
      rays.push_back(std::move(ray));
    }
  }

  std::vector<bool> processed(m, false);
  for (std::size_t i : basis) processed[i] = true;

  for (std::size_t row = 0; row < m; ++row) {
    if (processed[row]) continue;
    processed[row] = true;
    const LatticeVector& a = rows[row];

    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = dot(a, rays[r].v);
      if (value[r] > 0) pos.push_back(r);
      else if (value[r] < 0) neg.push_back(r);
    }
    if (neg.empty()) {
      for (std::size_t r = 0; r < rays.size(); ++r)
        if (value[r] == 0) rays[r].zero.set(row);
      continue;
    }

    std::vector<Ray> next;
    for (std::size_t p : pos)
      for (std::size_t q : neg) {
        Bits common = rays[p].zero & rays[q].zero;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        LatticeVector v(dim);
        for (std::size_t k = 0; k < dim; ++k)
          v[k] = value[p] * rays[q].v[k] - value[q] * rays[p].v[k];
        Ray fresh{primitive(v), common};
        fresh.zero.set(row);
        next.push_back(std::move(fresh));
      }
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (value[r] > 0) next.push_back(std::move(rays[r]));
      else if (value[r] == 0) {
        rays[r].zero.set(row);
        next.push_back(std::move(rays[r]));
      }
    }
    rays = std::move(next);
  }

  ConeRays out;
  for (auto& ray : rays) {
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < m; ++i)
      if (dot(rows[i], ray.v) == 0) tight.push_back(i);
    out.rays.push_back(std::move(ray.v));
    out.tight_rows.push_back(std::move(tight));
  }
  return out;
}

}  // namespace tropmirror
