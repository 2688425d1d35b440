/*
 * comptri -- exact composition algebras, triality, and outer
 * automorphism pairs of PGO+(n) at desk scale.
 *
 * C interface to the shared library.  All state lives behind opaque
 * handles; every function returns a status code and reports details
 * through comptri_last_error().  Strings returned through char** are
 * heap-allocated and must be released with comptri_string_free().
 *
 * Status codes match the CLI exit codes: 1 usage, 2 mathematical
 * failure (e.g. a table that is not a composition algebra), 3 an
 * exhausted search budget (never a negative mathematical claim).
 */
#ifndef COMPTRI_H
#define COMPTRI_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  COMPTRI_OK = 0,
  COMPTRI_ERR_USAGE = 1,
  COMPTRI_ERR_MATH = 2,
  COMPTRI_ERR_BUDGET = 3
} comptri_status;

typedef struct comptri_session comptri_session;
typedef struct comptri_algebra comptri_algebra;

/* A session fixes the field ("fp:<p>" with p an odd prime, or "q"),
 * the 3-Pfister parameters "a,b,c", and the master seed.  Every
 * algebra handle belongs to one session and shares its form. */
comptri_status comptri_session_new(const char* field, const char* pfister,
                                   uint64_t seed, comptri_session** out);
void comptri_session_free(comptri_session* s);

/* Message for the most recent failure on this thread. */
const char* comptri_last_error(void);

void comptri_string_free(char* s);

/* -- algebra construction ------------------------------------------ */

comptri_status comptri_algebra_cayley_dickson(comptri_session* s,
                                              comptri_algebra** out);
/* Split octonions via Zorn vector matrices; needs pfister 1,1,1. */
comptri_status comptri_algebra_zorn(comptri_session* s,
                                    comptri_algebra** out);
comptri_status comptri_algebra_from_json(comptri_session* s, const char* json,
                                         comptri_algebra** out);
/* which: 0 the session Hurwitz model H0, 1 its para-Hurwitz S0. */
comptri_status comptri_algebra_base(comptri_session* s, int which,
                                    comptri_algebra** out);
comptri_status comptri_algebra_to_json(const comptri_algebra* a, char** out);
void comptri_algebra_free(comptri_algebra* a);

/* -- operations ----------------------------------------------------- */

/* Re-certifies multiplicativity; emits {"multiplier", "unit"?}. */
comptri_status comptri_check(const comptri_algebra* a, char** out_json);

/* Kaplansky unitalization: {"hurwitz", "f", "g", "e"}. */
comptri_status comptri_unitalize(const comptri_algebra* a, char** out_json);

comptri_status comptri_para(const comptri_algebra* a, comptri_algebra** out);

/* {"sym", "f", "g"} with C = S_{f,g}, S symmetric, f,g isometries. */
comptri_status comptri_symmetric_decomposition(const comptri_algebra* a,
                                               char** out_json);

/* Triality components of h (JSON matrix or {"matrix":...}) with
 * respect to a (NULL = the session S0). */
comptri_status comptri_triality(comptri_session* s, const comptri_algebra* a,
                                const char* h_json, char** out_json);

/* Marked automorphism pair (rho_1^C, rho_2^C) in session normal form. */
comptri_status comptri_functor_image(const comptri_algebra* a,
                                     char** out_json);

comptri_status comptri_double_sign(const comptri_algebra* a, int* left,
                                   int* right);

comptri_status comptri_iso_check(const comptri_algebra* a,
                                 const comptri_algebra* b, const char* h_json,
                                 int* verdict);

/* {"isomorphic":"yes"|"no-invariant"|"unknown", "witness"?, ...} */
comptri_status comptri_iso_search(const comptri_algebra* a,
                                  const comptri_algebra* b, uint64_t budget,
                                  char** out_json);

/* The GO(n)-to-O(n) normalization pipeline from similarity matrices
 * F, G; fails with COMPTRI_ERR_MATH ("NotSquare") when the generalized
 * multiplier n(ab) is not a square. */
comptri_status comptri_normalize(comptri_session* s, const char* f_json,
                                 const char* g_json, char** out_json);

comptri_status comptri_census(comptri_session* s, uint64_t samples,
                              char** report_json, char** csv);

comptri_status comptri_selftest(comptri_session* s, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* COMPTRI_H */
