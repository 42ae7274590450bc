#include "core/hom_oracle.hpp"

#include <numeric>

namespace tropmirror {

namespace {

struct Components {
  std::vector<std::size_t> parent;
  std::vector<bool> zero;
  explicit Components(std::size_t n) : parent(n), zero(n, false) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent[a] = b;
    zero[b] = zero[b] || zero[a];
  }
};

}  // namespace

HomOracleSolution brute_force_hom(const LatticeVector& alpha, const MonomialIdeal& i0, const ToricData& t) {
  const auto& gens = i0.generators();
  const std::size_t m = t.num_rays(), k = gens.size();
  LatticeVector shift = t.ray_matrix().apply(alpha);

  HomOracleSolution out;
  std::vector<bool> live(k, false);
  for (std::size_t j = 0; j < k; ++j) {
    Monomial image = add(gens[j], shift);
    live[j] = is_nonnegative(image) && !i0.contains(image);
    if (live[j]) out.live.push_back(j);
  }

  // A map c: x^(m_j) -> c_j x^(m_j + shift) is well defined iff for every
  // monomial b in I0 and every pair of generators dividing b the two induced
  // values of b agree in S/I0. Each constraint reads c_i = c_j or c_i = 0.
  LatticeVector top(m, Integer(0));
  for (const auto& g : gens)
    for (std::size_t r = 0; r < m; ++r) top[r] = g[r] > top[r] ? g[r] : top[r];
  for (auto& e : top) e += 1;

  Components comp(k);
  for (std::size_t j = 0; j < k; ++j)
    if (!live[j]) comp.zero[j] = true;
  bool ones_ok = true;

  Monomial b(m, Integer(0));
  while (true) {
    if (i0.contains(b)) {
      Monomial value = add(b, shift);
      bool nonzero_value = is_nonnegative(value) && !i0.contains(value);
      std::vector<std::size_t> dividing;
      for (std::size_t j = 0; j < k; ++j)
        if (divides(gens[j], b)) dividing.push_back(j);
      if (nonzero_value) {
        // every dividing generator contributes c_j (or 0 if not live)
        for (std::size_t a = 1; a < dividing.size(); ++a) comp.join(dividing[0], dividing[a]);
        for (std::size_t a = 1; a < dividing.size(); ++a)
          if (live[dividing[0]] != live[dividing[a]]) ones_ok = false;
      }
    }
    std::size_t r = 0;
    while (r < m && b[r] == top[r]) b[r++] = 0;
    if (r == m) break;
    b[r] += 1;
  }

  for (std::size_t j = 0; j < k; ++j)
    if (comp.find(j) == j && !comp.zero[j]) ++out.dimension;
  out.all_ones_solves = ones_ok && !out.live.empty();
  return out;
}

}  // namespace tropmirror
