/* Tropical mirror construction for complete intersections in Gorenstein
   toric Fano varieties: C interface.

   Every function returns a tm_status. Strings handed out by the library are
   owned by the caller and released with tm_string_free. The message of the
   most recent failure on the calling thread is available from
   tm_last_error. */

#ifndef TROPMIRROR_H
#define TROPMIRROR_H

#include <stddef.h>
#include <stdint.h>

#if defined(TROPMIRROR_BUILDING)
#define TM_API __attribute__((visibility("default")))
#else
#define TM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tm_status {
  TM_OK = 0,
  TM_ERR_INVALID_ARGUMENT = 1,
  TM_ERR_PARSE = 2,
  /* input shape */
  TM_ERR_SCHEMA = 10,
  TM_ERR_DIMENSION_MISMATCH = 11,
  /* mathematical preconditions */
  TM_ERR_NOT_FULL_DIMENSIONAL = 20,
  TM_ERR_ORIGIN_NOT_INTERIOR = 21,
  TM_ERR_NOT_FANO = 22,
  TM_ERR_UNBOUNDED = 23,
  TM_ERR_NOT_CARTIER = 24,
  TM_ERR_NOT_EQUIDIMENSIONAL = 25,
  TM_ERR_UNBOUNDED_CANDIDATES = 26,
  TM_ERR_INVALID_NEF_PARTITION = 27,
  TM_ERR_EMPTY_SUPPORT = 28,
  TM_ERR_UNBOUNDED_SLICE = 29,
  TM_ERR_SPHERE_CHECK_FAILED = 30,
  TM_ERR_NO_CARTIER_MULTIPLE = 31,
  /* internal consistency */
  TM_ERR_NOT_FACE_OF_DELTA = 40,
  TM_ERR_FORMS_DISAGREE = 41,
  TM_ERR_TROPICAL_TESTS_DISAGREE = 42,
  TM_ERR_DUALITY_MISMATCH = 43,
  TM_ERR_INTERNAL = 50
} tm_status;

/* A parsed problem: toric Fano variety, monomial ideal, optional nef
   partition. */
typedef struct tm_problem tm_problem;
/* The outcome of the whole mirror construction for one problem. */
typedef struct tm_mirror tm_mirror;

TM_API const char* tm_version(void);
TM_API const char* tm_status_name(tm_status status);
/* 0 on success, 2 for input errors, 4 for internal inconsistencies and 3
   for everything else. */
TM_API int tm_exit_code(tm_status status);
TM_API const char* tm_last_error(void);
TM_API void tm_string_free(char* s);

TM_API tm_status tm_problem_from_json(const char* json, tm_problem** out);
/* One of "k3", "quintic", "elliptic". */
TM_API tm_status tm_problem_builtin(const char* name, tm_problem** out);
TM_API tm_status tm_problem_to_json(const tm_problem* problem, char** out);
TM_API void tm_problem_free(tm_problem* problem);

/* Runs complex, pt1, tropdef, dualize or mirror on a JSON input and renders
   the answer as session text or as JSON. */
TM_API tm_status tm_run_command(const char* command, const char* input_json, int json_output, int pretty,
                                char** out);

TM_API tm_status tm_mirror_run(const tm_problem* problem, tm_mirror** out);
TM_API void tm_mirror_free(tm_mirror* mirror);
TM_API tm_status tm_mirror_to_json(const tm_mirror* mirror, int pretty, char** out);
/* Number of rays of the mirror toric variety. */
TM_API tm_status tm_mirror_num_rays(const tm_mirror* mirror, size_t* out);
/* Face counts of the tropical complex on nabla, empty face first. Writes at
   most capacity entries and the full length to *length. */
TM_API tm_status tm_mirror_tropical_fvector(const tm_mirror* mirror, size_t* counts, size_t capacity, size_t* length);
TM_API tm_status tm_mirror_family_size(const tm_mirror* mirror, size_t* out);
/* The j-th family member as a polynomial in y0, y1, ... and s. */
TM_API tm_status tm_mirror_family_member(const tm_mirror* mirror, size_t j, char** out);

/* Runs an acceptance suite ("k3", "quintic", "elliptic", "properties",
   "all"). *all_passed is set to 1 when every criterion holds. */
TM_API tm_status tm_verify(const char* suite, uint64_t seed, int json_output, char** report, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* TROPMIRROR_H */
