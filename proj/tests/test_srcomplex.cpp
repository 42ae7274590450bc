#include "doctest.h"

#include "core/errors.hpp"
#include "core/srcomplex.hpp"
#include "test_support.hpp"

#include <set>

using namespace tropmirror;
using namespace tropmirror::testing;

namespace {

using Kind = FaceComplex::Kind;

MonomialIdeal k3_ideal() { return MonomialIdeal(5, pts({{1, 1, 0, 0, 0}, {0, 0, 1, 1, 1}})); }

std::set<std::vector<std::size_t>> maximal_vertex_sets(const FaceComplex& c) {
  std::set<std::vector<std::size_t>> out;
  for (std::size_t id : c.maximal_ids()) out.insert(c.lattice()[id].vertices);
  return out;
}

}  // namespace

TEST_CASE("ideal to complex") {
  FaceComplex c = ideal_to_complex(k3_ideal(), p4());
  CHECK(c.fvector() == FVector{1, 5, 9, 6, 0, 0});
  CHECK(maximal_vertex_sets(c) == std::set<std::vector<std::size_t>>{
                                      {0, 2, 3}, {1, 2, 3}, {0, 2, 4}, {1, 2, 4}, {0, 3, 4}, {1, 3, 4}});
  CHECK(c.is_closed());

  FaceComplex tri = ideal_to_complex(MonomialIdeal(3, pts({{1, 1, 1}})), p2());
  CHECK(tri.fvector() == FVector{1, 3, 3, 0});

  FaceComplex none = ideal_to_complex(MonomialIdeal::unit(5), p4());
  CHECK(none.fvector() == FVector{0, 0, 0, 0, 0, 0});
}

TEST_CASE("complex to ideal") {
  CHECK(complex_to_ideal(ideal_to_complex(k3_ideal(), p4())) == k3_ideal());
  MonomialIdeal boundary(3, pts({{1, 1, 1}}));
  CHECK(complex_to_ideal(ideal_to_complex(boundary, p2())) == boundary);
  CHECK(complex_to_ideal(ideal_to_complex(MonomialIdeal::unit(3), p2())).is_unit());

  // The complex {empty face} has every variable as a minimal non-face.
  FaceComplex just_empty = FaceComplex::from_vertex_sets(Kind::Complex, p2().fano(), {{}});
  CHECK(complex_to_ideal(just_empty) == MonomialIdeal::prime(3, std::vector<std::size_t>{0, 1, 2}));

  for (const auto& gens : {pts({{1, 0, 0, 0, 0}}), pts({{1, 1, 1, 1, 1}}), pts({{1, 1, 0, 0, 0}, {0, 0, 1, 1, 0}}),
                           pts({{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}})}) {
    MonomialIdeal i(5, gens);
    CHECK(complex_to_ideal(ideal_to_complex(i, p4())) == i);
  }
}

TEST_CASE("strata subcomplexes") {
  FaceComplex s = strata_subcomplex(k3_ideal(), p4());
  CHECK(s.fvector() == FVector{1, 5, 9, 6, 0, 0});
  CHECK(s.is_closed());
  CHECK(sphere_proxy_check(s).passed);

  FaceComplex line = strata_subcomplex(MonomialIdeal(3, pts({{1, 0, 0}})), p2());
  CHECK(line.fvector() == FVector{1, 2, 1, 0});
  auto top = line.maximal_ids();
  REQUIRE(top.size() == 1);
  CHECK(line.lattice()[top[0]].facets == std::vector<std::size_t>{0});

  FaceComplex boundary = strata_subcomplex(MonomialIdeal(5, pts({{1, 1, 1, 1, 1}})), p4());
  CHECK(boundary.fvector() == FVector{1, 5, 10, 10, 5, 0});

  CHECK(strata_subcomplex(MonomialIdeal::unit(5), p4()).fvector() == FVector{0, 0, 0, 0, 0, 0});
  // The irrelevant ideal cuts out nothing but the empty stratum.
  CHECK(strata_subcomplex(irrelevant_ideal(p4()), p4()).fvector() == FVector{1, 0, 0, 0, 0, 0});
}

TEST_CASE("strata and the Stanley-Reisner complex on a simplex") {
  // On a simplex each dual vertex misses exactly one ray facet; labelling it
  // by that ray turns the strata complex into the ideal complex.
  ToricData t = p4();
  for (const auto& gens : {pts({{1, 1, 0, 0, 0}, {0, 0, 1, 1, 1}}), pts({{1, 1, 1, 1, 1}}),
                           pts({{1, 0, 0, 0, 0}, {0, 1, 1, 0, 0}})}) {
    MonomialIdeal i(5, gens);
    FaceComplex c = ideal_to_complex(i, t);
    FaceComplex s = strata_subcomplex(i, t);
    std::set<std::set<std::size_t>> lhs, rhs;
    for (const Face& f : c.faces()) lhs.insert(std::set<std::size_t>(f.vertices.begin(), f.vertices.end()));
    for (const Face& g : s.faces()) {
      std::set<std::size_t> labels;
      for (std::size_t v : g.vertices) {
        const auto& tight = s.polytope().vertex_facets()[v];
        for (std::size_t r = 0; r < 5; ++r)
          if (std::find(tight.begin(), tight.end(), r) == tight.end()) labels.insert(r);
      }
      rhs.insert(labels);
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("dualize") {
  FaceComplex c = ideal_to_complex(k3_ideal(), p4());
  FaceComplex d = dualize(c);
  CHECK(d.kind() == Kind::CoComplex);
  CHECK(d.fvector() == FVector{0, 0, 6, 9, 5, 1});
  CHECK(d.is_closed());
  CHECK(dualize(d) == c);

  Polytope sq = convex_hull(pts({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}), 2);
  FaceComplex facet = FaceComplex::generated_by(Kind::CoComplex, sq, {{0, 1}});
  CHECK(facet.fvector() == FVector{0, 0, 1, 1});
  FaceComplex vertex = dualize(facet);
  CHECK(vertex.fvector() == FVector{1, 1, 0, 0});
  CHECK(vertex.kind() == Kind::Complex);

  Polytope off = convex_hull(pts({{0, 0}, {1, 0}, {0, 1}}), 2);
  CHECK_THROWS_AS(dualize(FaceComplex::generated_by(Kind::Complex, off, {{0}})), Error);
}

TEST_CASE("sphere proxy check") {
  Polytope simplex = p4().fano();
  std::vector<std::vector<std::size_t>> facets;
  for (const auto& f : simplex.facet_vertices()) facets.push_back(f);
  SphereReport r = sphere_proxy_check(FaceComplex::generated_by(Kind::Complex, simplex, facets));
  CHECK(r.passed);
  CHECK(r.dim == 3);
  CHECK(r.euler == 0);

  SphereReport k3 = sphere_proxy_check(ideal_to_complex(k3_ideal(), p4()));
  CHECK(k3.passed);
  CHECK(k3.euler == 2);

  Polytope prism = convex_hull(pts({{1, 0, 1}, {0, 1, 1}, {-1, -1, 1}, {1, 0, -1}, {0, 1, -1}, {-1, -1, -1}}), 3);
  SphereReport two = sphere_proxy_check(FaceComplex::generated_by(Kind::Complex, prism, {{0, 1, 2}, {3, 4, 5}}));
  CHECK_FALSE(two.passed);
  CHECK_FALSE(two.connected);

  // A bowtie: two triangles glued at a vertex has a disconnected vertex link.
  Polytope oct = convex_hull(pts({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}), 3);
  SphereReport bow = sphere_proxy_check(FaceComplex::generated_by(Kind::Complex, oct, {{0, 2, 4}, {1, 3, 4}}));
  CHECK_FALSE(bow.passed);

  CHECK_THROWS_AS(sphere_proxy_check(FaceComplex::generated_by(Kind::Complex, prism, {{0, 1, 2}, {3, 4}})), Error);
}
