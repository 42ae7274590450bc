#include "tropmirror.h"

#include "core/acceptance.hpp"
#include "core/errors.hpp"
#include "core/session.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

struct tm_problem {
  tropmirror::Problem problem;
};

struct tm_mirror {
  tropmirror::MirrorResult result;
};

namespace {

thread_local std::string last_error;

tm_status status_for(tropmirror::ErrorCode code) {
  using tropmirror::ErrorCode;
  switch (code) {
    case ErrorCode::Schema: return TM_ERR_SCHEMA;
    case ErrorCode::DimensionMismatch: return TM_ERR_DIMENSION_MISMATCH;
    case ErrorCode::NotFullDimensional: return TM_ERR_NOT_FULL_DIMENSIONAL;
    case ErrorCode::OriginNotInterior: return TM_ERR_ORIGIN_NOT_INTERIOR;
    case ErrorCode::NotFano: return TM_ERR_NOT_FANO;
    case ErrorCode::Unbounded: return TM_ERR_UNBOUNDED;
    case ErrorCode::NotCartier: return TM_ERR_NOT_CARTIER;
    case ErrorCode::NotEquidimensional: return TM_ERR_NOT_EQUIDIMENSIONAL;
    case ErrorCode::UnboundedCandidatePolytope: return TM_ERR_UNBOUNDED_CANDIDATES;
    case ErrorCode::InvalidNefPartition: return TM_ERR_INVALID_NEF_PARTITION;
    case ErrorCode::EmptySupport: return TM_ERR_EMPTY_SUPPORT;
    case ErrorCode::UnboundedSlice: return TM_ERR_UNBOUNDED_SLICE;
    case ErrorCode::SphereCheckFailed: return TM_ERR_SPHERE_CHECK_FAILED;
    case ErrorCode::NoCartierMultiple: return TM_ERR_NO_CARTIER_MULTIPLE;
    case ErrorCode::NotFaceOfDelta: return TM_ERR_NOT_FACE_OF_DELTA;
    case ErrorCode::FormsDisagree: return TM_ERR_FORMS_DISAGREE;
    case ErrorCode::TropicalTestsDisagree: return TM_ERR_TROPICAL_TESTS_DISAGREE;
    case ErrorCode::DualityMismatch: return TM_ERR_DUALITY_MISMATCH;
  }
  return TM_ERR_INTERNAL;
}

tm_status fail(tm_status s, const std::string& message) {
  last_error = message;
  return s;
}

// Runs body, translating exceptions into status codes.
template <typename F>
tm_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return TM_OK;
  } catch (const tropmirror::Error& e) {
    return fail(status_for(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(TM_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(TM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TM_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string family_polynomial(const tropmirror::MirrorGenerator& g) {
  std::string out = tropmirror::format_monomial(g.promoted, "y");
  if (g.perturbations.empty()) return out;
  out += " + s*(";
  for (std::size_t i = 0; i < g.perturbations.size(); ++i)
    out += (i ? " + " : "") + g.perturbations[i].symbol + "*" + tropmirror::format_monomial(g.perturbations[i].image, "y");
  return out + ")";
}

}  // namespace

extern "C" {

TM_API const char* tm_version(void) { return "0.1.0"; }

TM_API const char* tm_status_name(tm_status status) {
  switch (status) {
    case TM_OK: return "Ok";
    case TM_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case TM_ERR_PARSE: return "Parse";
    case TM_ERR_INTERNAL: return "Internal";
    case TM_ERR_SCHEMA: return tropmirror::error_name(tropmirror::ErrorCode::Schema);
    case TM_ERR_DIMENSION_MISMATCH: return tropmirror::error_name(tropmirror::ErrorCode::DimensionMismatch);
    case TM_ERR_NOT_FULL_DIMENSIONAL: return tropmirror::error_name(tropmirror::ErrorCode::NotFullDimensional);
    case TM_ERR_ORIGIN_NOT_INTERIOR: return tropmirror::error_name(tropmirror::ErrorCode::OriginNotInterior);
    case TM_ERR_NOT_FANO: return tropmirror::error_name(tropmirror::ErrorCode::NotFano);
    case TM_ERR_UNBOUNDED: return tropmirror::error_name(tropmirror::ErrorCode::Unbounded);
    case TM_ERR_NOT_CARTIER: return tropmirror::error_name(tropmirror::ErrorCode::NotCartier);
    case TM_ERR_NOT_EQUIDIMENSIONAL: return tropmirror::error_name(tropmirror::ErrorCode::NotEquidimensional);
    case TM_ERR_UNBOUNDED_CANDIDATES: return tropmirror::error_name(tropmirror::ErrorCode::UnboundedCandidatePolytope);
    case TM_ERR_INVALID_NEF_PARTITION: return tropmirror::error_name(tropmirror::ErrorCode::InvalidNefPartition);
    case TM_ERR_EMPTY_SUPPORT: return tropmirror::error_name(tropmirror::ErrorCode::EmptySupport);
    case TM_ERR_UNBOUNDED_SLICE: return tropmirror::error_name(tropmirror::ErrorCode::UnboundedSlice);
    case TM_ERR_SPHERE_CHECK_FAILED: return tropmirror::error_name(tropmirror::ErrorCode::SphereCheckFailed);
    case TM_ERR_NO_CARTIER_MULTIPLE: return tropmirror::error_name(tropmirror::ErrorCode::NoCartierMultiple);
    case TM_ERR_NOT_FACE_OF_DELTA: return tropmirror::error_name(tropmirror::ErrorCode::NotFaceOfDelta);
    case TM_ERR_FORMS_DISAGREE: return tropmirror::error_name(tropmirror::ErrorCode::FormsDisagree);
    case TM_ERR_TROPICAL_TESTS_DISAGREE: return tropmirror::error_name(tropmirror::ErrorCode::TropicalTestsDisagree);
    case TM_ERR_DUALITY_MISMATCH: return tropmirror::error_name(tropmirror::ErrorCode::DualityMismatch);
  }
  return "Unknown";
}

TM_API int tm_exit_code(tm_status status) {
  if (status == TM_OK) return 0;
  if (status == TM_ERR_PARSE || status == TM_ERR_SCHEMA || status == TM_ERR_DIMENSION_MISMATCH ||
      status == TM_ERR_INVALID_ARGUMENT)
    return 2;
  if (status == TM_ERR_INTERNAL || status >= TM_ERR_NOT_FACE_OF_DELTA) return 4;
  return 3;
}

TM_API const char* tm_last_error(void) { return last_error.c_str(); }

TM_API void tm_string_free(char* s) { std::free(s); }

TM_API tm_status tm_problem_from_json(const char* json, tm_problem** out) {
  if (!json || !out) return fail(TM_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto p = new tm_problem{tropmirror::problem_from_json(tropmirror::Json::parse(json))};
    *out = p;
  });
}

TM_API tm_status tm_problem_builtin(const char* name, tm_problem** out) {
  if (!name || !out) return fail(TM_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  std::string n = name;
  if (n != "k3" && n != "quintic" && n != "elliptic") return fail(TM_ERR_INVALID_ARGUMENT, "unknown problem " + n);
  return guarded([&] {
    *out = new tm_problem{n == "k3"        ? tropmirror::k3_problem()
                          : n == "quintic" ? tropmirror::quintic_problem()
                                           : tropmirror::elliptic_problem()};
  });
}

TM_API tm_status tm_problem_to_json(const tm_problem* problem, char** out) {
  if (!problem || !out) return fail(TM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(tropmirror::problem_to_json(problem->problem).dump()); });
}

TM_API void tm_problem_free(tm_problem* problem) { delete problem; }

TM_API tm_status tm_run_command(const char* command, const char* input_json, int json_output, int pretty, char** out) {
  if (!command || !input_json || !out) return fail(TM_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = copy_string(
        tropmirror::run_command(command, tropmirror::Json::parse(input_json), json_output != 0, pretty != 0));
  });
}

TM_API tm_status tm_mirror_run(const tm_problem* problem, tm_mirror** out) {
  if (!problem || !out) return fail(TM_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const auto& p = problem->problem;
    *out = new tm_mirror{tropmirror::run_pipeline(p.ideal, p.toric, p.partition)};
  });
}

TM_API void tm_mirror_free(tm_mirror* mirror) { delete mirror; }

TM_API tm_status tm_mirror_to_json(const tm_mirror* mirror, int pretty, char** out) {
  if (!mirror || !out) return fail(TM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto j = tropmirror::mirror_result_to_json(mirror->result);
    *out = copy_string(pretty ? j.dump(2) : j.dump());
  });
}

TM_API tm_status tm_mirror_num_rays(const tm_mirror* mirror, size_t* out) {
  if (!mirror || !out) return fail(TM_ERR_INVALID_ARGUMENT, "null argument");
  *out = mirror->result.mirror_toric.num_rays();
  return TM_OK;
}

TM_API tm_status tm_mirror_tropical_fvector(const tm_mirror* mirror, size_t* counts, size_t capacity, size_t* length) {
  if (!mirror || !length || (capacity && !counts)) return fail(TM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto f = mirror->result.tropical.fvector();
    *length = f.size();
    for (std::size_t i = 0; i < f.size() && i < capacity; ++i) counts[i] = f[i];
  });
}

TM_API tm_status tm_mirror_family_size(const tm_mirror* mirror, size_t* out) {
  if (!mirror || !out) return fail(TM_ERR_INVALID_ARGUMENT, "null argument");
  *out = mirror->result.family.size();
  return TM_OK;
}

TM_API tm_status tm_mirror_family_member(const tm_mirror* mirror, size_t j, char** out) {
  if (!mirror || !out) return fail(TM_ERR_INVALID_ARGUMENT, "null argument");
  if (j >= mirror->result.family.size()) return fail(TM_ERR_INVALID_ARGUMENT, "family index out of range");
  return guarded([&] { *out = copy_string(family_polynomial(mirror->result.family[j])); });
}

TM_API tm_status tm_verify(const char* suite, uint64_t seed, int json_output, char** report, int* all_passed) {
  if (!suite || !report || !all_passed) return fail(TM_ERR_INVALID_ARGUMENT, "null argument");
  *report = nullptr;
  *all_passed = 0;
  return guarded([&] {
    auto r = tropmirror::run_suite(suite, seed);
    *all_passed = r.passed() ? 1 : 0;
    *report = copy_string(json_output ? tropmirror::report_to_json(r).dump(2) + "\n" : tropmirror::format_report(r));
  });
}

}  // extern "C"
