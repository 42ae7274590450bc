#include "doctest.h"

#include "core/acceptance.hpp"
#include "core/errors.hpp"
#include "core/session.hpp"
#include "test_support.hpp"

#include <fstream>
#include <sstream>

using namespace tropmirror;
using namespace tropmirror::testing;

namespace {

Json k3_input() {
  return Json::parse(R"({"toric": {"fanoVertices": [[-1,-1,-1,-1],[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]},
                         "ideal": {"generators": [[1,1,0,0,0],[0,0,1,1,1]]}})");
}

Json read_data(const std::string& name) {
  std::ifstream in(std::string(TROPMIRROR_DATA_DIR) + "/" + name + ".json");
  REQUIRE(in);
  return Json::parse(in);
}

}  // namespace

TEST_CASE("integers") {
  CHECK(integer_from_json(Json(-7)) == -7);
  CHECK(integer_from_json(Json("123456789012345678901234567890")) == Integer("123456789012345678901234567890"));
  CHECK(integer_to_json(Integer(5)) == Json(5));
  CHECK(integer_to_json(Integer("123456789012345678901234567890")) == Json("123456789012345678901234567890"));
  CHECK_THROWS_AS(integer_from_json(Json("12a")), Error);
  CHECK_THROWS_AS(integer_from_json(Json(1.5)), Error);
  CHECK(rational_to_json(Rational(1, 2)) == Json("1/2"));
}

TEST_CASE("problem parsing") {
  Problem p = problem_from_json(k3_input());
  CHECK(p.toric.num_rays() == 5);
  CHECK(p.ideal.generators().size() == 2);
  CHECK_FALSE(p.partition);

  Json fan = Json::parse(R"({"toric": {"rays": [[1,0],[0,1],[-1,-1]], "maxCones": [[0,1],[1,2],[0,2]]},
                             "ideal": {"generators": [[1,1,1]]}, "nefPartition": [[0,1,2]]})");
  Problem q = problem_from_json(fan);
  CHECK(q.toric.num_rays() == 3);
  CHECK(q.partition == NefPartition{{0, 1, 2}});

  auto code_of = [](const char* text) {
    try {
      problem_from_json(Json::parse(text));
    } catch (const Error& e) {
      return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::Schema;
  };
  CHECK(code_of(R"({"ideal": {"generators": []}})") == ErrorCode::Schema);
  CHECK(code_of(R"({"toric": {"fanoVertices": [[1,0],[0,1],[-1,-1]]}})") == ErrorCode::Schema);
  CHECK(code_of(R"({"toric": {"fanoVertices": [[1,0],[0,1],[-1,-1],[0,0]]}, "ideal": {"generators": []}})") ==
        ErrorCode::Schema);
  CHECK(code_of(R"({"toric": {"fanoVertices": [[1,0],[0,1,2]]}, "ideal": {"generators": []}})") ==
        ErrorCode::DimensionMismatch);
  CHECK(code_of(R"({"toric": {"fanoVertices": [[1,0],[0,1],[-1,-1]]}, "ideal": {"generators": [[1,1]]}})") ==
        ErrorCode::DimensionMismatch);
  CHECK(code_of(R"({"toric": {"fanoVertices": [[1,0],[0,1],[-1,-1]]}, "ideal": {"generators": [[1,1,1]]},
                    "nefPartition": [[0,5]]})") == ErrorCode::Schema);
  CHECK(code_of(R"({"toric": {"rays": [[1,0],[0,1],[-1,-1]], "maxCones": [[0,1]]}, "ideal": {"generators": []}})") ==
        ErrorCode::Schema);
  CHECK(code_of(R"({"toric": {"fanoVertices": [[3,0],[0,3],[-3,-3]]}, "ideal": {"generators": []}})") ==
        ErrorCode::NotFano);
}

TEST_CASE("shipped inputs are the reference problems") {
  auto same = [](const Problem& a, const Problem& b) {
    return a.toric.rays() == b.toric.rays() && a.ideal == b.ideal;
  };
  CHECK(same(problem_from_json(read_data("k3")), k3_problem()));
  CHECK(same(problem_from_json(read_data("quintic")), quintic_problem()));
  CHECK(same(problem_from_json(read_data("elliptic")), elliptic_problem()));
  CHECK(same(problem_from_json(problem_to_json(k3_problem())), k3_problem()));
}

TEST_CASE("session text") {
  std::string complex = run_command("complex", k3_input(), false, false);
  CHECK(complex ==
        "2: {x0 x2 x3} {x1 x2 x3} {x0 x2 x4} {x1 x2 x4} {x0 x3 x4} {x1 x3 x4}\n"
        "complex of dim 2 embedded in dim 4 (printing facets)\n"
        "equidimensional, simplicial, F-vector {1,5,9,6,0,0}\n");
  std::string tropdef = run_command("tropdef", k3_input(), false, false);
  CHECK(tropdef.rfind("1: {y0 y4} {y1 y5} {y2 y6} {y3 y7} {y8 y9}\n", 0) == 0);
  CHECK(tropdef.find("non-simplicial, F-vector {0,0,5,9,6,1}") != std::string::npos);
  CHECK(run_command("pt1", k3_input(), false, false).find("F-vector {1,10,24,25,11,1}") != std::string::npos);
  CHECK(run_command("dualize", k3_input(), false, false).find("F-vector {1,6,9,5,0,0}") != std::string::npos);
  CHECK_THROWS_AS(run_command("frobnicate", k3_input(), false, false), Error);
}

TEST_CASE("session JSON") {
  Json complex = Json::parse(run_command("complex", k3_input(), true, false));
  CHECK(complex["kind"] == "complex");
  CHECK(complex["dim"] == 2);
  CHECK(complex["fvector"] == Json::parse("[1,5,9,6,0,0]"));
  CHECK(complex["faces"].size() == 6);

  Json mirror = Json::parse(run_command("mirror", k3_input(), true, true));
  for (const char* key : {"nabla", "nablaDual", "tropicalComplex", "dual", "mirrorIdeal", "xi", "family"})
    CHECK(mirror.contains(key));
  CHECK(mirror["nabla"]["vertices"].size() == 11);
  CHECK(mirror["mirrorIdeal"]["generators"].size() == 32);
  CHECK(mirror["family"].size() == 2);
  CHECK(mirror["family"][0]["perturbations"][0].contains("coefficientSymbol"));
  CHECK(run_command("mirror", k3_input(), true, false) == run_command("mirror", k3_input(), true, false));
}

TEST_CASE("complexes from JSON") {
  Json tri = Json::parse(R"({"kind": "complex", "vertices": [[1,0],[0,1],[-1,-1]], "faces": [[0,1],[1,2],[0,2]]})");
  FaceComplex c = complex_from_json(tri);
  CHECK(c.fvector() == FVector{1, 3, 3, 0});
  FaceComplex d = dualize(c);
  CHECK(d.kind() == FaceComplex::Kind::CoComplex);
  CHECK(d.fvector() == FVector{0, 3, 3, 1});
  Json back = complex_to_json(d);
  CHECK(back["kind"] == "cocomplex");
  CHECK(back["dim"] == 0);

  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"kind": "blob", "vertices": [[1]], "faces": []})")), Error);
  CHECK_THROWS_AS(complex_from_json(Json::parse(
                      R"({"kind": "complex", "vertices": [[1,0],[0,1],[-1,-1]], "faces": [[0,7]]})")),
                  Error);
  // a diagonal of the square is not a face
  CHECK_THROWS_AS(complex_from_json(Json::parse(
                      R"({"kind": "complex", "vertices": [[1,0],[0,1],[-1,0],[0,-1]], "faces": [[0,2]]})")),
                  Error);
}

TEST_CASE("acceptance report") {
  SuiteReport r = run_suite("elliptic");
  CHECK(r.passed());
  CHECK(r.criteria.size() == 4);
  std::string text = format_report(r);
  CHECK(text.find("PASS  criterion 3") != std::string::npos);
  CHECK(report_to_json(r)["passed"] == true);
  CHECK_THROWS_AS(run_suite("nope"), Error);
}
