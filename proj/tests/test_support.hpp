#ifndef TROPMIRROR_TESTS_SUPPORT_HPP
#define TROPMIRROR_TESTS_SUPPORT_HPP

#include "core/lattice.hpp"
#include "core/toric.hpp"

#include <initializer_list>
#include <vector>

namespace tropmirror::testing {

inline LatticeVector vec(std::initializer_list<long> xs) {
  LatticeVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline std::vector<LatticeVector> pts(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<LatticeVector> out;
  for (const auto& r : rows) out.push_back(vec(r));
  return out;
}

inline ToricData toric(std::initializer_list<std::initializer_list<long>> vertices) {
  auto v = pts(vertices);
  return toric_from_fano(convex_hull(v, v.front().size()));
}

// P4 with x0 = -(e1+...+e4) and xi = ei.
inline ToricData p4() {
  return toric({{-1, -1, -1, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
}

inline ToricData p2() { return toric({{1, 0}, {0, 1}, {-1, -1}}); }

}  // namespace tropmirror::testing

#endif
