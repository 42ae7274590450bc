#include "doctest.h"

#include "core/deformation.hpp"
#include "core/errors.hpp"
#include "core/hom_oracle.hpp"
#include "core/mirror.hpp"
#include "test_support.hpp"

#include <random>
#include <set>

using namespace tropmirror;
using namespace tropmirror::testing;

namespace {

MonomialIdeal k3_ideal() { return MonomialIdeal(5, pts({{1, 1, 0, 0, 0}, {0, 0, 1, 1, 1}})); }

std::size_t count_moving(const PT1Basis& b, std::size_t generator) {
  std::size_t n = 0;
  for (const auto& d : b.directions) n += d.images[generator].has_value();
  return n;
}

}  // namespace

TEST_CASE("candidate points") {
  CHECK(candidate_points(k3_ideal(), p4()).size() == 49);
  CHECK(candidate_points(MonomialIdeal(5, pts({{1, 1, 1, 1, 1}})), p4()).size() == 126);
  CHECK(candidate_points(MonomialIdeal(3, pts({{1, 0, 0}})), p2()) ==
        pts({{-1, 0}, {-1, 1}, {0, 0}}));
}

TEST_CASE("hom from point") {
  ToricData t = p2();
  MonomialIdeal line(3, pts({{1, 0, 0}}));
  auto moved = hom_from_point(vec({-1, 0}), line, t);
  REQUIRE(moved);
  CHECK(moved->images[0] == vec({0, 0, 1}));
  CHECK(moved->moved() == std::vector<std::size_t>{0});
  // x0 goes to itself, which is zero modulo the ideal
  CHECK_FALSE(hom_from_point(vec({0, 0}), line, t));

  // On two coordinate points of P2 a shift moving one generator off the
  // ideal while the common multiple survives is not a homomorphism.
  MonomialIdeal two(3, pts({{1, 0, 0}, {0, 1, 0}}));
  for (const auto& alpha : candidate_points(two, t)) {
    auto d = hom_from_point(alpha, two, t);
    auto oracle = brute_force_hom(alpha, two, t);
    CHECK(d.has_value() == oracle.all_ones_solves);
  }
}

TEST_CASE("pt1 basis of the K3 degeneration") {
  PT1Basis b = pt1_basis(k3_ideal(), p4());
  CHECK(b.directions.size() == 43);
  // generators are sorted, so x2*x3*x4 comes first
  CHECK(count_moving(b, 0) == 29);
  CHECK(count_moving(b, 1) == 14);
  for (const auto& d : b.directions) CHECK(d.moved().size() == 1);
  auto alphas = b.alphas();
  CHECK(std::is_sorted(alphas.begin(), alphas.end()));

  Degeneration deg = canonical_degeneration({{0, 1}, {2, 3, 4}}, p4());
  auto support = deg.all_support();
  CHECK(std::set<LatticeVector>(support.begin(), support.end()) ==
        std::set<LatticeVector>(alphas.begin(), alphas.end()));
  CHECK(b.groups.size() == 2);
}

TEST_CASE("pt1 basis of hypersurfaces") {
  CHECK(pt1_basis(MonomialIdeal(5, pts({{1, 1, 1, 1, 1}})), p4()).directions.size() == 125);
  CHECK(pt1_basis(MonomialIdeal(3, pts({{1, 1, 1}})), p2()).directions.size() == 9);
  CHECK(pt1_basis(MonomialIdeal(3, pts({{1, 0, 0}})), p2()).directions.size() == 2);
}

TEST_CASE("zero ideal has no candidates") {
  CHECK(candidate_points(MonomialIdeal(3, {}), p2()).empty());
}

TEST_CASE("pt1 basis agrees with the brute-force oracle on random ideals") {
  std::mt19937 rng(20261019);
  std::vector<ToricData> spaces{p2(), toric({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}), p4()};
  for (int trial = 0; trial < 60; ++trial) {
    const ToricData& t = spaces[trial % spaces.size()];
    const std::size_t m = t.num_rays();
    std::vector<Monomial> gens;
    std::size_t count = 1 + rng() % 3;
    for (std::size_t k = 0; k < count; ++k) {
      Monomial g(m, Integer(0));
      for (std::size_t r = 0; r < m; ++r) g[r] = rng() % 2;
      if (std::all_of(g.begin(), g.end(), [](const Integer& e) { return e == 0; })) g[rng() % m] = 1;
      gens.push_back(std::move(g));
    }
    MonomialIdeal i0(m, gens);
    CAPTURE(i0.to_string("x"));
    std::set<LatticeVector> from_basis;
    for (const auto& alpha : pt1_basis(i0, t).alphas()) from_basis.insert(alpha);
    for (const auto& alpha : candidate_points(i0, t)) {
      auto oracle = brute_force_hom(alpha, i0, t);
      CHECK(from_basis.count(alpha) == static_cast<std::size_t>(oracle.all_ones_solves));
      if (oracle.all_ones_solves) CHECK(oracle.dimension >= 1);
    }
  }
}
