#ifndef CREMONA_C_H
#define CREMONA_C_H

/* C interface to the cremona library. Objects are opaque handles owned by
 * the caller and released with the matching _free function. Strings
 * returned through char** are allocated by the library and released with
 * cremona_string_free. Every call returns a status; on failure the message
 * is available from cremona_last_error() on the same thread. JSON formats
 * are documented in README.md. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CREMONA_API __declspec(dllexport)
#else
#define CREMONA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cremona_status {
  CREMONA_OK = 0,
  CREMONA_E_ARGUMENT = 1,     /* invalid input */
  CREMONA_E_DOMAIN = 2,       /* operation undefined for this input */
  CREMONA_E_INCONCLUSIVE = 3, /* search budget exhausted */
  CREMONA_E_CANCELLED = 4,
  CREMONA_E_INTERNAL = 5
} cremona_status;

typedef struct cremona_vector cremona_vector;
typedef struct cremona_isometry cremona_isometry;
typedef struct cremona_config cremona_config;
typedef struct cremona_curve cremona_curve;

CREMONA_API const char* cremona_version(void);
CREMONA_API const char* cremona_last_error(void);
CREMONA_API void cremona_string_free(char* s);

/* Lattice Z^{1,n} */
CREMONA_API cremona_status cremona_vector_from_json(const char* json, cremona_vector** out);
CREMONA_API cremona_status cremona_vector_to_json(const cremona_vector* v, char** out);
CREMONA_API cremona_status cremona_simple_root(int n, int i, cremona_vector** out);
CREMONA_API cremona_status cremona_canonical_vector(int n, cremona_vector** out);
/* Decimal string of u.v */
CREMONA_API cremona_status cremona_vector_inner(const cremona_vector* u, const cremona_vector* v, char** out);
CREMONA_API cremona_status cremona_vector_scale(const cremona_vector* v, long k, cremona_vector** out);
CREMONA_API void cremona_vector_free(cremona_vector* v);

CREMONA_API cremona_status cremona_gram_matrix(int n, char** json);
/* Roots of degree <= max_degree; csv != 0 selects the CSV catalog format. */
CREMONA_API cremona_status cremona_enumerate_roots(int n, int max_degree, int csv, char** out);
CREMONA_API cremona_status cremona_coble_conditions(int csv, char** out);
CREMONA_API cremona_status cremona_residue_counts(long* isotropic, long* norm_one);
/* {"terminal", "word", "simple_root", "sign", "trace": [...]} */
CREMONA_API cremona_status cremona_noether_reduce(const cremona_vector* root, char** json);

/* Weyl group and isometries */
CREMONA_API cremona_status cremona_isometry_from_word(int n, const int* letters, size_t length, cremona_isometry** out);
CREMONA_API cremona_status cremona_isometry_from_json(const char* json, cremona_isometry** out);
CREMONA_API cremona_status cremona_isometry_iota(const cremona_vector* w, cremona_isometry** out);
CREMONA_API cremona_status cremona_isometry_translation(const cremona_vector* a, long m, cremona_isometry** out);
CREMONA_API cremona_status cremona_isometry_to_json(const cremona_isometry* g, char** out);
CREMONA_API cremona_status cremona_isometry_apply(const cremona_isometry* g, const cremona_vector* v, cremona_vector** out);
/* {"kind", "witness", "order", "spectral_radius", "char_poly"} */
CREMONA_API cremona_status cremona_isometry_classify(const cremona_isometry* g, char** json);
/* JSON word w with word_to_isometry(w) = g; CREMONA_E_DOMAIN if g is not in W_n. */
CREMONA_API cremona_status cremona_isometry_to_word(const cremona_isometry* g, char** json);
CREMONA_API void cremona_isometry_free(cremona_isometry* g);

/* Point configurations */
CREMONA_API cremona_status cremona_config_from_json(const char* json, cremona_config** out);
CREMONA_API cremona_status cremona_config_to_json(const cremona_config* c, char** out);
CREMONA_API cremona_status cremona_config_size(const cremona_config* c, int* n);
CREMONA_API cremona_status cremona_config_effectivity(const cremona_config* c, const cremona_vector* cls, int* effective,
                                                      int* dimension);
/* 0-based base point indices */
CREMONA_API cremona_status cremona_config_quadratic(const cremona_config* c, int i, int j, int k, cremona_config** out);
CREMONA_API cremona_status cremona_config_act(const cremona_config* c, const int* letters, size_t length,
                                              cremona_config** out);
CREMONA_API cremona_status cremona_config_equivalent(const cremona_config* a, const cremona_config* b, int* equivalent);
/* {"unnodal", "witness", "witness_kind", "sextic_unique", "reason"} */
CREMONA_API cremona_status cremona_config_halphen_check(const cremona_config* c, int m, char** json);
CREMONA_API cremona_status cremona_config_coble_check(const cremona_config* c, char** json);
CREMONA_API void cremona_config_free(cremona_config* c);

/* Plane cubics. field_json may be NULL when json is a full curve document. */
CREMONA_API cremona_status cremona_curve_from_json(const char* json, const char* field_json, cremona_curve** out);
/* {"equation", "singularity", "group", "origin", "inflection_origin", "singular_point"} */
CREMONA_API cremona_status cremona_curve_describe(const cremona_curve* c, char** json);
/* JSON array of points for a JSON array of parameters (singular cubics). */
CREMONA_API cremona_status cremona_curve_points_from_params(const cremona_curve* c, const char* params_json, char** out);
CREMONA_API cremona_status cremona_curve_halphen_points(const cremona_curve* c, int m, uint64_t seed, int require_unnodal,
                                                        cremona_config** out);
CREMONA_API cremona_status cremona_curve_coble_points(const cremona_curve* c, uint64_t seed, cremona_config** out);
/* points_json: JSON array of points on the curve */
CREMONA_API cremona_status cremona_curve_halphen_index(const cremona_curve* c, const char* points_json, int m, int* ok);
/* {"harbourne", "kernel", "rank", "witness"} */
CREMONA_API cremona_status cremona_curve_harbourne_check(const cremona_curve* c, const char* points_json, char** json);
/* {"verdict", "witness", "certificate", "reason"} */
CREMONA_API cremona_status cremona_curve_kernel_check(const cremona_curve* c, const char* points_json, int max_degree,
                                                      uint64_t budget, uint64_t seed, char** json);
CREMONA_API void cremona_curve_free(cremona_curve* c);

/* Quadratic modules over Z/m */
/* JSON array of generators of a random rank-`rank` submodule of (Z/m)^10 */
CREMONA_API cremona_status cremona_random_submodule(int64_t m, int rank, uint64_t seed, char** json);
/* method: "theory" or "bfs"; budget bounds visited residues (0 = default). */
CREMONA_API cremona_status cremona_find_root(int64_t m, const char* generators_json, const char* method, uint64_t budget,
                                             uint64_t seed, char** certificate_json);
/* 1 if the certificate is a root whose residue lies in the submodule */
CREMONA_API cremona_status cremona_check_certificate(const char* generators_json, const char* certificate_json, int* valid);

#ifdef __cplusplus
}
#endif

#endif
