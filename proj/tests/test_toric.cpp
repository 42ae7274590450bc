#include "doctest.h"

#include "core/errors.hpp"
#include "core/toric.hpp"
#include "test_support.hpp"

#include <numeric>
#include <random>

using namespace tropmirror;
using namespace tropmirror::testing;

namespace {

DivisorClass cls(long d) { return DivisorClass{{Integer(d)}, {}}; }

// Binomial count of degree-d monomials in k variables.
long monomial_count(long k, long d) {
  long num = 1, den = 1;
  for (long i = 1; i < k; ++i) {
    num *= d + i;
    den *= i;
  }
  return num / den;
}

}  // namespace

TEST_CASE("toric data of P2 and P4") {
  ToricData t = p2();
  CHECK(t.num_rays() == 3);
  CHECK(t.class_group_rank() == 1);
  CHECK(t.torsion_orders().empty());
  for (std::size_t r = 0; r < 3; ++r) {
    LatticeVector e(3);
    e[r] = 1;
    CHECK(t.degree(e) == cls(1));
  }

  ToricData q = p4();
  CHECK(q.num_rays() == 5);
  CHECK(q.class_group_rank() == 1);
  CHECK(q.max_cones().size() == 5);
  for (std::size_t r = 0; r < 5; ++r) {
    LatticeVector e(5);
    e[r] = 1;
    CHECK(q.degree(e) == cls(1));
  }
  CHECK(q.rays()[0] == vec({-1, -1, -1, -1}));
}

TEST_CASE("weighted projective plane P(1,2,1) and a torsion class group") {
  ToricData t = toric({{1, 0}, {0, 1}, {-1, -2}});
  CHECK(t.degree(vec({1, 0, 0})) == cls(1));
  CHECK(t.degree(vec({0, 1, 0})) == cls(2));
  CHECK(t.degree(vec({0, 0, 1})) == cls(1));
  CHECK_FALSE(is_cartier(t, vec({1, 0, 0})).cartier);
  CHECK(is_cartier(t, vec({0, 1, 0})).cartier);
  CHECK_THROWS_AS(is_nef(t, vec({1, 0, 0})), Error);
  PicardSublattice pic = picard_sublattice(t);
  CHECK(pic.rank == 1);
  CHECK(pic.index == 2);
  CHECK_FALSE(is_picard_class(t, cls(1)));
  CHECK(is_picard_class(t, cls(2)));

  ToricData sq = toric({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
  CHECK(sq.class_group_rank() == 2);
  CHECK(sq.torsion_orders() == std::vector<Integer>{2});
}

TEST_CASE("non-Fano inputs are rejected") {
  auto big = pts({{2, 0}, {0, 2}, {-2, -2}});
  CHECK_THROWS_AS(toric_from_fano(convex_hull(big, 2)), Error);
  auto shifted = pts({{1, 1}, {2, 1}, {1, 2}});
  CHECK_THROWS_AS(toric_from_fano(convex_hull(shifted, 2)), Error);
  auto flat = pts({{1, 0}, {-1, 0}});
  CHECK_THROWS_AS(toric_from_fano(convex_hull(flat, 2)), Error);
}

TEST_CASE("explicit fans must match the facets of the ray hull") {
  auto rays = pts({{1, 0}, {0, 1}, {-1, -1}});
  ToricData t = toric_from_fan(rays, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(t.num_rays() == 3);
  CHECK_THROWS_AS(toric_from_fan(rays, {{0, 1}, {1, 2}}), Error);
  CHECK_THROWS_AS(toric_from_fan(rays, {{0, 1}, {1, 2}, {0, 2}, {0, 1, 2}}), Error);
}

TEST_CASE("divisor polytopes and sections") {
  ToricData t = p2();
  CHECK(lattice_points(divisor_polytope(t, vec({1, 0, 0}))).size() == 3);
  auto line = sections_basis(t, cls(1), vec({1, 0, 0}));
  std::sort(line.begin(), line.end());
  CHECK(line == pts({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));

  ToricData q = p4();
  Polytope anti = divisor_polytope(q, vec({1, 1, 1, 1, 1}));
  CHECK(lattice_points(anti).size() == 126);
  CHECK(anti.same_vertex_set(polar_dual(q.fano())));
  CHECK(lattice_points(divisor_polytope(q, vec({1, 1, 0, 0, 0}))).size() == 15);
  CHECK(lattice_points(divisor_polytope(q, vec({0, 0, 1, 1, 1}))).size() == 35);

  for (long d = 1; d <= 3; ++d) {
    TorusDivisor rep = q.representative(cls(d));
    CHECK(q.degree(rep) == cls(d));
    auto basis = sections_basis(q, cls(d), rep);
    CHECK(static_cast<long>(basis.size()) == monomial_count(5, d));
    for (const auto& m : basis) {
      CHECK(is_nonnegative(m));
      CHECK(std::accumulate(m.begin(), m.end(), Integer(0)) == d);
    }
  }
  CHECK(sections_basis(q, cls(-1), q.representative(cls(-1))).empty());
}

TEST_CASE("Cartier and nef") {
  ToricData q = p4();
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    LatticeVector d(5);
    for (auto& x : d) x = static_cast<long>(rng() % 7) - 3;
    CHECK(is_cartier(q, d).cartier);
  }
  CartierData anti = is_cartier(q, vec({1, 1, 1, 1, 1}));
  Polytope dual = polar_dual(q.fano());
  for (std::size_t s = 0; s < anti.local.size(); ++s) CHECK(to_rational(*anti.local[s]) == dual.vertices()[s]);

  CHECK(is_nef(q, vec({1, 1, 0, 0, 0})));
  CHECK(is_nef(q, vec({0, 0, 0, 0, 0})));
  CHECK_FALSE(is_nef(p2(), vec({-1, 0, 0})));
}

TEST_CASE("Picard sublattice and irrelevant ideal") {
  PicardSublattice pic = picard_sublattice(p4());
  CHECK(pic.rank == 1);
  CHECK(pic.index == 1);

  CHECK(irrelevant_ideal(p2()) == MonomialIdeal::prime(3, std::vector<std::size_t>{0, 1, 2}));
  CHECK(irrelevant_ideal(p4()) == MonomialIdeal::prime(5, std::vector<std::size_t>{0, 1, 2, 3, 4}));
  ToricData p1p1 = toric({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
  CHECK(irrelevant_ideal(p1p1) ==
        MonomialIdeal(4, pts({{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}})));
}

TEST_CASE("weight lift, projection and section") {
  ToricData t = p2();
  CHECK(weight_lift(t, to_rational(vec({0, 0}))) == to_rational(vec({0, 0, 0})));
  CHECK(weight_lift(t, to_rational(vec({1, 0}))) == to_rational(vec({1, 0, -1})));

  ToricData q = p4();
  std::mt19937 rng(11);
  for (int i = 0; i < 10; ++i) {
    RationalVector w(4);
    for (auto& x : w) x = Rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4));
    CHECK(weight_project(q, weight_lift(q, w)) == w);
    CHECK(q.ray_matrix().transpose().apply(weight_section(q, w)) == w);
  }
}

TEST_CASE("nef partitions") {
  ToricData q = p4();
  CHECK_NOTHROW(validate_nef_partition(q, {{0, 1}, {2, 3, 4}}));
  CHECK_THROWS_AS(validate_nef_partition(q, {{0, 1}, {2, 3}}), Error);
  CHECK_THROWS_AS(validate_nef_partition(q, {{0, 1}, {1, 2, 3, 4}}), Error);
  ToricData w = toric({{1, 0}, {0, 1}, {-1, -2}});
  CHECK_THROWS_AS(validate_nef_partition(w, {{0}, {1, 2}}), Error);

  DivisorClass sum = q.degree(add(block_divisor(q, {0, 1}), block_divisor(q, {2, 3, 4})));
  CHECK(sum == q.degree(vec({1, 1, 1, 1, 1})));
}

TEST_CASE("property: principal divisors have degree zero") {
  std::vector<ToricData> cases{p2(), p4(), toric({{1, 0}, {0, 1}, {-1, -2}}),
                               toric({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}})};
  std::mt19937 rng(3);
  for (const auto& t : cases) {
    DivisorClass zero = t.degree(LatticeVector(t.num_rays()));
    for (int i = 0; i < 10; ++i) {
      LatticeVector alpha(t.dim());
      for (auto& x : alpha) x = static_cast<long>(rng() % 9) - 4;
      CHECK(t.degree(t.ray_matrix().apply(alpha)) == zero);
      LatticeVector d(t.num_rays());
      for (auto& x : d) x = static_cast<long>(rng() % 9) - 4;
      CHECK(t.degree(t.representative(t.degree(d))) == t.degree(d));
    }
  }
}
