// Exercises the shared library through its C interface only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tropmirror.h"

#include <string>
#include <vector>

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  tm_string_free(s);
  return out;
}

const char* k3_json =
    R"({"toric": {"fanoVertices": [[-1,-1,-1,-1],[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]},
        "ideal": {"generators": [[1,1,0,0,0],[0,0,1,1,1]]}})";

}  // namespace

TEST_CASE("mirror handle") {
  tm_problem* p = nullptr;
  REQUIRE(tm_problem_from_json(k3_json, &p) == TM_OK);
  tm_mirror* m = nullptr;
  REQUIRE(tm_mirror_run(p, &m) == TM_OK);

  size_t rays = 0;
  CHECK(tm_mirror_num_rays(m, &rays) == TM_OK);
  CHECK(rays == 10);

  size_t length = 0;
  CHECK(tm_mirror_tropical_fvector(m, nullptr, 0, &length) == TM_OK);
  std::vector<size_t> f(length);
  CHECK(tm_mirror_tropical_fvector(m, f.data(), f.size(), &length) == TM_OK);
  CHECK(f == std::vector<size_t>{1, 6, 9, 5, 0, 0});

  size_t members = 0;
  CHECK(tm_mirror_family_size(m, &members) == TM_OK);
  CHECK(members == 2);
  char* text = nullptr;
  CHECK(tm_mirror_family_member(m, 1, &text) == TM_OK);
  CHECK(take(text) == "y0*y1*y2*y3*y8 + s*(c1_0*y0^2*y4^3 + c1_4*y8^2*y9^3)");
  CHECK(tm_mirror_family_member(m, 2, &text) == TM_ERR_INVALID_ARGUMENT);

  CHECK(tm_mirror_to_json(m, 0, &text) == TM_OK);
  CHECK(take(text).find("\"tropicalComplex\"") != std::string::npos);

  tm_mirror_free(m);
  tm_problem_free(p);
}

TEST_CASE("builtin problems round trip through JSON") {
  for (const char* name : {"k3", "quintic", "elliptic"}) {
    tm_problem* p = nullptr;
    REQUIRE(tm_problem_builtin(name, &p) == TM_OK);
    char* json = nullptr;
    REQUIRE(tm_problem_to_json(p, &json) == TM_OK);
    tm_problem* q = nullptr;
    CHECK(tm_problem_from_json(json, &q) == TM_OK);
    tm_string_free(json);
    tm_problem_free(q);
    tm_problem_free(p);
  }
  tm_problem* p = nullptr;
  CHECK(tm_problem_builtin("cubic", &p) == TM_ERR_INVALID_ARGUMENT);
  CHECK(p == nullptr);
}

TEST_CASE("errors") {
  tm_problem* p = nullptr;
  CHECK(tm_problem_from_json("{", &p) == TM_ERR_PARSE);
  CHECK(tm_exit_code(TM_ERR_PARSE) == 2);
  CHECK(tm_problem_from_json(R"({"toric": {}})", &p) == TM_ERR_SCHEMA);
  CHECK(std::string(tm_last_error()).find("rays") != std::string::npos);
  CHECK(tm_problem_from_json(R"({"toric": {"fanoVertices": [[2,0],[0,2],[-2,-2]]}, "ideal": {"generators": []}})",
                             &p) == TM_ERR_NOT_FANO);
  CHECK(tm_exit_code(TM_ERR_NOT_FANO) == 3);
  CHECK(tm_exit_code(TM_ERR_FORMS_DISAGREE) == 4);
  CHECK(tm_exit_code(TM_OK) == 0);
  CHECK(std::string(tm_status_name(TM_ERR_SPHERE_CHECK_FAILED)) == "SphereCheckFailed");

  char* out = nullptr;
  CHECK(tm_run_command("frobnicate", k3_json, 0, 0, &out) == TM_ERR_SCHEMA);
  CHECK(out == nullptr);
  CHECK(tm_problem_from_json(nullptr, &p) == TM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("large integers travel as strings") {
  const char* json = R"({"toric": {"fanoVertices": [["-1","-1"],["1","0"],["0","1"]]},
                         "ideal": {"generators": [["1","1","1"]]}})";
  char* out = nullptr;
  REQUIRE(tm_run_command("complex", json, 1, 0, &out) == TM_OK);
  CHECK(take(out).find("\"fvector\":[1,3,3,0]") != std::string::npos);
}

TEST_CASE("dualize is an involution") {
  char* once = nullptr;
  REQUIRE(tm_run_command("dualize", k3_json, 1, 0, &once) == TM_OK);
  std::string first = take(once);
  char* twice = nullptr;
  REQUIRE(tm_run_command("dualize", first.c_str(), 1, 0, &twice) == TM_OK);
  char* tropdef = nullptr;
  REQUIRE(tm_run_command("tropdef", k3_json, 1, 0, &tropdef) == TM_OK);
  std::string back = take(twice), direct = take(tropdef);
  CHECK(back.find("\"fvector\":[0,0,5,9,6,1]") != std::string::npos);
  CHECK(back == direct);
}
