#include "doctest.h"

#include "core/errors.hpp"
#include "core/polytope.hpp"
#include "test_support.hpp"

#include <random>
#include <set>

using namespace tropmirror;
using tropmirror::testing::pts;
using tropmirror::testing::vec;

namespace {

Polytope hull(std::initializer_list<std::initializer_list<long>> points) {
  auto p = pts(points);
  return convex_hull(p, p.front().size());
}

FVector fv(const Polytope& p) {
  FaceLattice l = face_lattice(p);
  return fvector(l.faces(), p.ambient_dim());
}

// Independent count: brute force over a box with the defining inequalities.
std::size_t p2_anticanonical_count() {
  std::size_t n = 0;
  for (long x = -1; x <= 2; ++x)
    for (long y = -1; y <= 2; ++y)
      if (x >= -1 && y >= -1 && x + y <= 1) ++n;
  return n;
}

}  // namespace

TEST_CASE("convex hull of the unit square") {
  Polytope sq = hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(sq.dim() == 2);
  CHECK(sq.vertices().size() == 4);
  CHECK(sq.facets().size() == 4);
  CHECK(fv(sq) == FVector{1, 4, 4, 1});
  CHECK(lattice_points(sq).size() == 4);
  CHECK_FALSE(is_reflexive(sq));
}

TEST_CASE("hull drops interior and edge points and keeps input order") {
  Polytope p = hull({{1, 1}, {0, 0}, {1, 0}, {2, 0}, {0, 2}, {2, 2}, {0, 1}});
  CHECK(p.vertices() == std::vector<RationalVector>{
                           to_rational(vec({0, 0})), to_rational(vec({2, 0})),
                           to_rational(vec({0, 2})), to_rational(vec({2, 2}))});
}

TEST_CASE("P2 anticanonical triangle: lattice points and re-hull") {
  Polytope tri = hull({{2, -1}, {-1, 2}, {-1, -1}});
  auto points = lattice_points(tri);
  CHECK(points.size() == p2_anticanonical_count());
  CHECK(points.size() == 10);
  Polytope again = convex_hull(points, 2);
  CHECK(again.same_vertex_set(tri));
  CHECK(is_reflexive(tri));
}

TEST_CASE("lattice points of a segment") {
  Polytope seg = hull({{0}, {5}});
  CHECK(lattice_points(seg).size() == 6);
  CHECK(fv(seg) == FVector{1, 2, 1});
}

TEST_CASE("lower-dimensional hulls carry their affine span") {
  Polytope seg = hull({{0, 0}, {2, 2}, {1, 1}});
  CHECK(seg.dim() == 1);
  CHECK(seg.vertices().size() == 2);
  CHECK(seg.equations().size() == 1);
  CHECK(lattice_points(seg).size() == 3);
  CHECK_FALSE(seg.contains(vec({1, 0})));

  Polytope tri3 = hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(tri3.dim() == 2);
  CHECK(fv(tri3) == FVector{1, 3, 3, 1, 0});

  Polytope point = hull({{3, 4}});
  CHECK(point.dim() == 0);
  CHECK(fv(point) == FVector{1, 1, 0, 0});

  CHECK_THROWS_AS(polar_dual(seg), Error);
}

TEST_CASE("polar duality") {
  Polytope cross = hull({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
  Polytope cube = polar_dual(cross);
  CHECK(cube.same_vertex_set(hull({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}})));

  // P4 Fano simplex and its anticanonical dual.
  Polytope fano = hull({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, -1, -1, -1}});
  Polytope delta = polar_dual(fano);
  CHECK(delta.vertices().size() == 5);
  CHECK(delta.vertex_index(to_rational(vec({4, -1, -1, -1}))).has_value());
  // Each dual vertex is tight (value -1) on exactly four rays and has value 4 on the fifth.
  for (const auto& v : delta.vertices()) {
    int tight = 0;
    for (const auto& r : fano.vertices()) {
      Rational val = dot(v, r);
      CHECK(val >= -1);
      if (val == -1) ++tight;
    }
    CHECK(tight == 4);
  }
  CHECK(lattice_points(delta).size() == 126);
  CHECK(is_reflexive(fano));

  Polytope shifted = hull({{0, 0}, {1, 0}, {0, 1}});
  CHECK_THROWS_AS(polar_dual(shifted), Error);
}

TEST_CASE("face lattice F-vectors") {
  CHECK(fv(hull({{0, 0}, {1, 0}, {0, 1}})) == FVector{1, 3, 3, 1});
  Polytope simplex4 = hull({{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(fv(simplex4) == FVector{1, 5, 10, 10, 5, 1});
  CHECK(fv(hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1},
                 {1, 1, 1}})) == FVector{1, 8, 12, 6, 1});
}

TEST_CASE("dual faces") {
  Polytope square = hull({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
  Polytope cross = polar_dual(square);
  FaceLattice sq = face_lattice(square);
  FaceLattice cr = face_lattice(cross);
  for (std::size_t v : sq.of_dim(0)) {
    Face d = dual_face(square, sq[v]);
    CHECK(d.dim == 1);
    auto id = cr.find_by_vertices(d.vertices);
    REQUIRE(id.has_value());
    // The edge dual to vertex (a,b) lies on the line a x + b y = -1.
    const RationalVector& corner = square.vertices()[sq[v].vertices.front()];
    for (std::size_t w : cr[*id].vertices) CHECK(dot(cross.vertices()[w], corner) == -1);
  }

  Polytope fano = hull({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, -1, -1, -1}});
  Polytope delta = polar_dual(fano);
  FaceLattice lf = face_lattice(fano);
  FaceLattice ld = face_lattice(delta);
  for (const Face& f : lf.faces()) {
    Face d = dual_face(fano, f);
    REQUIRE(ld.find_by_vertices(d.vertices).has_value());
    CHECK(dual_face(delta, d) == f);
    if (f.dim >= 0 && f.dim < 4) CHECK(f.dim + d.dim == 3);
  }
}

TEST_CASE("minkowski sums") {
  Polytope p = hull({{0, 0}, {2, 1}, {1, 3}});
  Polytope origin = hull({{0, 0}});
  CHECK(minkowski_sum(p, origin).same_vertex_set(p));
  Polytope sq = minkowski_sum(hull({{0, 0}, {1, 0}}), hull({{0, 0}, {0, 1}}));
  CHECK(sq.same_vertex_set(hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}})));
  CHECK_THROWS_AS(minkowski_sum(p, hull({{0}, {1}})), Error);
}

TEST_CASE("reflexivity") {
  CHECK(is_reflexive(hull({{1, 0}, {0, 1}, {-1, -1}})));
  CHECK_FALSE(is_reflexive(hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}})));
  CHECK_FALSE(is_reflexive(hull({{2, 0}, {0, 2}, {-2, -2}})));
}

TEST_CASE("polytope from inequalities") {
  std::vector<Facet> ineqs{{vec({1, 0}), 1}, {vec({0, 1}), 1}, {vec({-1, -1}), 1}};
  Polytope tri = polytope_from_inequalities(ineqs, 2);
  CHECK(tri.same_vertex_set(hull({{2, -1}, {-1, 2}, {-1, -1}})));

  std::vector<Facet> unbounded{{vec({1, 0}), 0}, {vec({0, 1}), 0}};
  CHECK_THROWS_AS(polytope_from_inequalities(unbounded, 2), Error);

  std::vector<Facet> infeasible{{vec({1}), -2}, {vec({-1}), 1}};
  CHECK(polytope_from_inequalities(infeasible, 1).empty());

  std::vector<Facet> point{{vec({1, 0}), 0}, {vec({0, 1}), 0}, {vec({-1, -1}), 0}};
  Polytope origin = polytope_from_inequalities(point, 2);
  CHECK(origin.dim() == 0);
}

TEST_CASE("property: hull soundness, Euler relation, commutativity") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> coord(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + rng() % 2;
    std::size_t count = n + 1 + rng() % 8;
    std::vector<LatticeVector> points(count, LatticeVector(n));
    for (auto& p : points)
      for (auto& x : p) x = coord(rng);
    Polytope p = convex_hull(points, n);
    for (const auto& x : points) CHECK(p.contains(x));
    std::set<RationalVector> inputs;
    for (const auto& x : points) inputs.insert(to_rational(x));
    for (const auto& v : p.vertices()) CHECK(inputs.count(v) == 1);

    FaceLattice lat = face_lattice(p);
    FVector f = fvector(lat.faces(), n);
    long euler = 0;
    for (int d = -1; d <= p.dim(); ++d)
      euler += (d % 2 == 0 ? 1 : -1) * static_cast<long>(f[static_cast<std::size_t>(d + 1)]);
    CHECK(euler == 0);

    std::vector<LatticeVector> other(3, LatticeVector(n));
    for (auto& q : other)
      for (auto& x : q) x = coord(rng);
    Polytope q = convex_hull(other, n);
    CHECK(minkowski_sum(p, q).same_vertex_set(minkowski_sum(q, p)));
    Polytope r = convex_hull(std::vector<LatticeVector>{points[0], other[1]}, n);
    CHECK(minkowski_sum(minkowski_sum(p, q), r).same_vertex_set(minkowski_sum(p, minkowski_sum(q, r))));
  }
}
