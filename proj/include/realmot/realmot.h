/* C interface to the realmot engine. All handles are opaque; every call that
 * can fail returns an rm_status and leaves a message in rm_last_error().
 * Strings returned through char** are owned by the caller (rm_string_free). */
#ifndef REALMOT_H
#define REALMOT_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(REALMOT_BUILD)
#define RM_API __attribute__((visibility("default")))
#else
#define RM_API
#endif

typedef enum rm_status {
  RM_OK = 0,
  RM_E_PARSE = 1,
  RM_E_INVALID_ARGUMENT,
  RM_E_BASE_MISMATCH,
  RM_E_UNREPRESENTABLE_PRODUCT,
  RM_E_DUALITY_UNDEFINED,
  RM_E_UNKNOWN_BASE_MORPHISM,
  RM_E_PROPERNESS_LOST,
  RM_E_NOT_WEIGHTED_HOMOGENEOUS,
  RM_E_NOT_CONVENIENT,
  RM_E_NON_SIMPLICIAL_CONE,
  RM_E_MISSING_TABLE_ENTRY,
  RM_E_MISSING_STRATUM_CLASS,
  RM_E_UNSUPPORTED_DIMENSION,
  RM_E_SINGULAR_LEVEL_CURVE,
  RM_E_MONKEY_SADDLE,
  RM_E_NON_SURFACE,
  RM_E_DIVERGENT_BLOCK,
  RM_E_DEGENERATE,
  RM_E_PRECONDITION_FAILED,
  RM_E_UNSUPPORTED,
  RM_E_INTERNAL,
  RM_E_NULL_ARGUMENT = 100
} rm_status;

typedef enum rm_sign { RM_SIGN_PLUS = 0, RM_SIGN_MINUS = 1 } rm_sign;

typedef struct rm_options {
  int qsigma_all_gens;      /* 0: positive generators only */
  int assume_nondegenerate; /* required for Newton and wh routes in d >= 3 */
  int corfib_printed;       /* DL Milnor fibre with the (L-1)^(|I|-1) coefficient */
} rm_options;

typedef struct rm_poly rm_poly;
typedef struct rm_datum rm_datum;     /* resolution datum with its generator registry */
typedef struct rm_table rm_table;     /* torus classes of compact faces */
typedef struct rm_series rm_series;   /* zeta function in closed form */
typedef struct rm_complex rm_complex;
typedef struct rm_cfun rm_cfun;       /* constructible function on a complex */
typedef struct rm_map rm_map;         /* simplicial map */
typedef struct rm_surface rm_surface; /* closed surface with vertex heights */

RM_API const char* rm_version(void);
RM_API const char* rm_last_error(void);
RM_API const char* rm_status_name(rm_status s);
RM_API void rm_string_free(char* s);

RM_API rm_status rm_poly_parse(const char* text, rm_poly** out);
RM_API rm_status rm_poly_to_string(const rm_poly* p, char** out);
RM_API void rm_poly_free(rm_poly* p);

/* JSON with optional "poly", "d", "generators", "morphisms". */
RM_API rm_status rm_datum_from_json(const char* json, rm_datum** out);
/* name: "x2y4", "x6" or "figure8" */
RM_API rm_status rm_datum_example(const char* name, rm_datum** out);
/* Polynomial text recorded with the datum; empty string when absent. */
RM_API rm_status rm_datum_poly(const rm_datum* d, char** out);
RM_API void rm_datum_free(rm_datum* d);

RM_API rm_status rm_table_compute(const rm_poly* f, rm_table** out);
RM_API rm_status rm_table_from_json(const rm_poly* f, const char* json, rm_table** out);
RM_API rm_status rm_table_to_json(const rm_table* t, char** out);
RM_API void rm_table_free(rm_table* t);

RM_API rm_status rm_zeta_dl(const rm_datum* d, rm_sign sign, rm_series** out);
/* table may be NULL: computed from f. */
RM_API rm_status rm_zeta_newton(const rm_poly* f, const rm_table* table, rm_sign sign, const rm_options* opt,
                                rm_series** out);
RM_API rm_status rm_series_to_json(const rm_series* z, char** out);
/* Coefficients of T^1..T^n and the limit at infinity. */
RM_API rm_status rm_series_expand_json(const rm_series* z, int n, char** out);
RM_API void rm_series_free(rm_series* z);

/* method: "dl" (needs d), "newton" or "wh" (need f; table may be NULL).
 * Result: {"method","sign","psi","beta","dual","duality"}. */
RM_API rm_status rm_milnor_json(const char* method, const rm_poly* f, const rm_datum* d, const rm_table* table,
                                rm_sign sign, const rm_options* opt, char** out);
/* All available routes; result {"routes","beta","unavailable","verdict","flags"}. */
RM_API rm_status rm_cross_validate_json(const rm_poly* f, const rm_datum* d, const rm_table* table, rm_sign sign,
                                        const rm_options* opt, char** out);
RM_API rm_status rm_newton_fan_json(const rm_poly* f, char** out);
RM_API rm_status rm_sphere_link_json(const rm_poly* f, const rm_table* table, int assume, char** out);

RM_API rm_status rm_complex_from_json(const char* json, rm_complex** out);
RM_API void rm_complex_free(rm_complex* k);
RM_API rm_status rm_cfun_from_json(const rm_complex* k, const char* json, rm_cfun** out);
RM_API rm_status rm_cfun_constant(const rm_complex* k, long value, rm_cfun** out);
RM_API void rm_cfun_free(rm_cfun* f);
/* {"source": complex, "target": complex, "map": {...}} */
RM_API rm_status rm_map_from_json(const char* json, rm_map** out);
RM_API rm_status rm_map_source(const rm_map* h, rm_complex** out);
RM_API rm_status rm_map_target(const rm_map* h, rm_complex** out);
RM_API void rm_map_free(rm_map* h);
/* op: integrate, dual, link, euler, push, pull, pi, locallink.
 * push/pi/locallink/pull need h; locallink reads `at`; pi ignores fn. */
RM_API rm_status rm_cf_apply_json(const char* op, const rm_cfun* fn, const rm_map* h, int at, char** out);

RM_API rm_status rm_surface_from_json(const char* json, rm_surface** out);
RM_API rm_status rm_surface_torus(rm_surface** out);
/* level as "p/q"; result {"level","beta","beta_link","nodes","edges","crossings"} */
RM_API rm_status rm_level_set_json(const rm_surface* m, const char* level, char** out);
RM_API void rm_surface_free(rm_surface* m);

/* suite: a suite name or "all"; *n_fail receives the number of FAIL cases. */
RM_API rm_status rm_validate_json(const char* suite, const rm_options* opt, char** out, int* n_fail);

#ifdef __cplusplus
}
#endif

#endif
