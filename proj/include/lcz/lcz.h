/* C interface to the lcz library. All strings returned through char** are
   heap-allocated and released with lcz_string_free. */
#ifndef LCZ_H
#define LCZ_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define LCZ_API __declspec(dllexport)
#else
#define LCZ_API __attribute__((visibility("default")))
#endif

typedef enum lcz_status {
  LCZ_OK = 0,
  LCZ_PARSE_ERROR = 1,
  LCZ_EXACT_UNSUPPORTED = 2,
  LCZ_DEGENERATE_METRIC = 3,
  LCZ_DIMENSION_MISMATCH = 4,
  LCZ_NOT_LIE_ALGEBRA = 5,
  LCZ_NOT_SELF_ADJOINT = 6,
  LCZ_BAD_DECOMPOSITION = 7,
  LCZ_TYPE_MISMATCH = 8,
  LCZ_NOT_LORENTZIAN = 9,
  LCZ_DEFECTIVE_AMBIGUITY = 10,
  LCZ_BAD_PARAM = 11,
  LCZ_NOT_EINSTEIN = 12,
  LCZ_CONSTRAINT_VIOLATION = 13,
  LCZ_DUPLICATE_BRACKET = 14,
  LCZ_UNKNOWN_NAME = 15,
  LCZ_BACKEND_MISMATCH = 16,
  LCZ_INTERNAL = 99
} lcz_status;

typedef enum lcz_format { LCZ_FORMAT_TEXT = 0, LCZ_FORMAT_KV = 1 } lcz_format;

typedef enum lcz_formulation {
  LCZ_CODAZZI_DEFINING = 0,
  LCZ_CODAZZI_BRACKET = 1,
  LCZ_CODAZZI_BOTH = 2
} lcz_formulation;

typedef struct lcz_algebra lcz_algebra;

/* mode: NULL (document hint, else exact when every literal allows it),
   "exact" or "float". */
LCZ_API lcz_status lcz_algebra_parse(const char* text, const char* mode, lcz_algebra** out);
LCZ_API void lcz_algebra_free(lcz_algebra* g);
LCZ_API size_t lcz_algebra_dim(const lcz_algebra* g);
LCZ_API int lcz_algebra_is_exact(const lcz_algebra* g);
/* Canonical definition text. */
LCZ_API lcz_status lcz_algebra_emit(const lcz_algebra* g, char** out);
/* Row-major Ricci operator as binary64; out must hold dim*dim values. */
LCZ_API lcz_status lcz_ricci(const lcz_algebra* g, double* out, size_t capacity);

/* rel_tol <= 0 selects the default (LCZ_DEFAULT_TOL or 1e-9). */
LCZ_API lcz_status lcz_analyze(const lcz_algebra* g, double rel_tol, lcz_format fmt, char** out);
LCZ_API lcz_status lcz_classify(const lcz_algebra* g, const char* operator_text, double rel_tol,
                                lcz_format fmt, char** out);
LCZ_API lcz_status lcz_codazzi(const lcz_algebra* g, const char* operator_text, lcz_formulation which,
                               double rel_tol, lcz_format fmt, char** out);

/* name: sl2 zzcore zzprod a2 a3 ex5d ex6d. params: whitespace separated
   key=value pairs (alpha, epsilon, sign, k, dim). Emits definition text. */
LCZ_API lcz_status lcz_family(const char* name, const char* params, char** out);

LCZ_API lcz_status lcz_selftest(double rel_tol, char** out, size_t* failures);

/* Message of the last failure on the calling thread. */
LCZ_API const char* lcz_last_error(void);
LCZ_API const char* lcz_status_name(lcz_status s);
LCZ_API void lcz_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
