#ifndef VARLAM_VARLAM_H
#define VARLAM_VARLAM_H

#include <stdint.h>

#if defined(VARLAM_BUILDING_LIBRARY)
#define VARLAM_API __attribute__((visibility("default")))
#else
#define VARLAM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct vl_env vl_env;
typedef struct vl_term vl_term;

typedef enum vl_status {
  VL_OK = 0,
  VL_ERR_PARSE,
  VL_ERR_UNBOUND_NAME,
  VL_ERR_UNEXPANDED_CONSTANT,
  VL_ERR_DUPLICATE_DEFINITION,
  VL_ERR_OPEN_DEFINITION,
  VL_ERR_INDEX_OUT_OF_RANGE,
  VL_ERR_UNKNOWN_FAMILY,
  VL_ERR_UNKNOWN_SEQUENCE,
  VL_ERR_MIXED_SEQUENCE_USE,
  VL_ERR_NOT_A_NUMERAL,
  VL_ERR_REDUCTION,
  VL_ERR_IO,
  VL_ERR_INVALID_ARGUMENT,
  VL_ERR_INTERNAL
} vl_status;

typedef enum vl_reduction_status {
  VL_NORMAL_FORM = 0,
  VL_FUEL_EXHAUSTED,
  VL_SIZE_EXCEEDED
} vl_reduction_status;

typedef enum vl_verdict { VL_EQUAL = 0, VL_NOT_EQUAL = 1, VL_UNKNOWN = 2 } vl_verdict;

typedef struct vl_config {
  uint64_t fuel;           /* β-steps */
  uint64_t max_term_size;  /* nodes */
  int eta;                 /* nonzero: η-normalize after β */
} vl_config;

VARLAM_API const char* vl_version(void);
VARLAM_API void vl_config_default(vl_config* cfg);
VARLAM_API const char* vl_status_name(vl_status status);
/* Message of the most recent failure on this thread; empty when none. */
VARLAM_API const char* vl_last_error(void);
/* Strings returned through char** parameters are released with this. */
VARLAM_API void vl_string_free(char* s);

/* with_prelude: nonzero loads prelude.lam and variadic.lam (VARLAM_PRELUDE
   overrides the directory they come from). */
VARLAM_API vl_status vl_env_create(int with_prelude, vl_env** out);
VARLAM_API void vl_env_destroy(vl_env* env);
VARLAM_API vl_status vl_env_load_file(vl_env* env, const char* path);
VARLAM_API vl_status vl_env_load_source(vl_env* env, const char* source, const char* provenance);
VARLAM_API vl_status vl_env_define(vl_env* env, const char* name, const char* source);
VARLAM_API int vl_env_contains(const vl_env* env, const char* name);

/* env may be NULL; uppercase names must then not appear. */
VARLAM_API vl_status vl_parse(const vl_env* env, const char* source, vl_term** out);
VARLAM_API void vl_term_destroy(vl_term* term);
VARLAM_API vl_status vl_term_print(const vl_term* term, int sugar, char** out);
VARLAM_API vl_status vl_term_alpha_eq(const vl_term* a, const vl_term* b, int* out);
VARLAM_API vl_status vl_apply(const vl_term* fun, const vl_term* arg, vl_term** out);

/* Normal form (or the last term reached) in *out; steps may be NULL. */
VARLAM_API vl_status vl_normalize(const vl_env* env, const vl_term* term, const vl_config* cfg,
                                  vl_term** out, vl_reduction_status* status, uint64_t* steps);
/* Normal-order reduction sequence, one printed term per line. */
VARLAM_API vl_status vl_trace(const vl_env* env, const vl_term* term, const vl_config* cfg,
                              int sugar, char** out);
VARLAM_API vl_status vl_equal(const vl_env* env, const vl_term* a, const vl_term* b,
                              const vl_config* cfg, vl_verdict* out);

/* Constants are expanded through env first; with env NULL they stay opaque. */
VARLAM_API vl_status vl_bracket_turner(const vl_env* env, const vl_term* term, vl_term** out);
/* λn. ⟦m⟧ for a meta-term source such as "\x[1..n]. x[1..n]". */
VARLAM_API vl_status vl_bracket_extended(const char* meta_source, vl_term** out);
VARLAM_API vl_status vl_expand_meta(const char* meta_source, unsigned n, vl_term** out);
/* k = 0 for singly-indexed families. */
VARLAM_API vl_status vl_family(const char* name, unsigned k, unsigned n, vl_term** out);
/* Comma-separated family names. */
VARLAM_API vl_status vl_family_names(char** out);

VARLAM_API vl_status vl_church(unsigned n, vl_term** out);
VARLAM_API vl_status vl_unchurch(const vl_env* env, const vl_term* term, const vl_config* cfg,
                                 unsigned* out);

/* Runs a verification suite (kernel, bracket, variadic, fixpoint, all). The
   rendered report goes to *report; *passed is nonzero when every case passed. */
VARLAM_API vl_status vl_check(const vl_env* env, const char* suite, unsigned max_n,
                              const vl_config* cfg, char** report, int* passed);

#ifdef __cplusplus
}
#endif

#endif
