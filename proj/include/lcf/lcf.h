#ifndef LCF_LCF_H
#define LCF_LCF_H

/*
 * C interface to the lcf library: continued fractions of truncated Laurent
 * series over F_p, Hankel determinants, and the two decomposition procedures.
 *
 * Conventions
 *   - Every fallible call returns an lcf_status; LCF_OK is 0.  On failure the
 *     message is available from lcf_last_error() on the same thread until the
 *     next failing call.
 *   - Objects are opaque handles created by *_new / *_parse / *_expand_* and
 *     released with the matching *_free (which accept NULL).
 *   - Strings returned through char** are heap-allocated and must be released
 *     with lcf_string_free.
 *   - Handles are immutable after creation and may be shared across threads.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LCF_BUILDING_LIBRARY)
#    define LCF_API __declspec(dllexport)
#  else
#    define LCF_API __declspec(dllimport)
#  endif
#else
#  define LCF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lcf_status {
  LCF_OK = 0,
  LCF_INVALID_ARGUMENT = 1,
  LCF_ZERO_INVERSE = 2,
  LCF_DIVISION_BY_ZERO_POLYNOMIAL = 3,
  LCF_FIELD_MISMATCH = 4,
  LCF_ZERO_SERIES = 5,
  LCF_INSUFFICIENT_PRECISION = 6,
  LCF_INSUFFICIENT_COEFFICIENTS = 7,
  LCF_WRONG_FIELD = 8,
  LCF_FIELD_TOO_SMALL = 9,
  LCF_PRECONDITION_VIOLATED = 10,
  LCF_PARSE_ERROR = 11,
  LCF_INTERNAL = 12,
  LCF_OUT_OF_MEMORY = 13
} lcf_status;

typedef struct lcf_field lcf_field;
typedef struct lcf_poly lcf_poly;
typedef struct lcf_series lcf_series;
typedef struct lcf_cf lcf_cf;

LCF_API const char* lcf_version(void);
/* Stable identifier such as "InsufficientPrecision". */
LCF_API const char* lcf_status_string(lcf_status status);
/* Message of the last failure on this thread; "" if none. */
LCF_API const char* lcf_last_error(void);
LCF_API void lcf_string_free(char* s);

/* ---- fields ------------------------------------------------------------ */

/* p must be a prime below 2^31. */
LCF_API lcf_status lcf_field_new(uint32_t p, lcf_field** out);
LCF_API void lcf_field_free(lcf_field* field);
LCF_API uint32_t lcf_field_characteristic(const lcf_field* field);

/* ---- polynomials ------------------------------------------------------- */

/* Text such as "2t^3+t+1". */
LCF_API lcf_status lcf_poly_parse(const lcf_field* field, const char* text, lcf_poly** out);
/* coeffs[i] is the coefficient of t^i; values are reduced mod p. */
LCF_API lcf_status lcf_poly_from_coeffs(const lcf_field* field, const int64_t* coeffs, size_t count,
                                        lcf_poly** out);
LCF_API void lcf_poly_free(lcf_poly* poly);
/* INT32_MIN for the zero polynomial. */
LCF_API int32_t lcf_poly_degree(const lcf_poly* poly);
LCF_API uint32_t lcf_poly_coeff(const lcf_poly* poly, size_t k);
LCF_API lcf_status lcf_poly_to_string(const lcf_poly* poly, char** out);

/* ---- truncated Laurent series ------------------------------------------ */

/* Text such as "0 ; 1 0 2 @3". */
LCF_API lcf_status lcf_series_parse(const lcf_field* field, const char* text, lcf_series** out);
LCF_API lcf_status lcf_series_from_rational(const lcf_poly* num, const lcf_poly* den,
                                            size_t precision, lcf_series** out);
LCF_API void lcf_series_free(lcf_series* series);
LCF_API size_t lcf_series_precision(const lcf_series* series);
/* Coefficient of t^-n; n = 0 is LCF_INVALID_ARGUMENT, n > precision LCF_INSUFFICIENT_PRECISION. */
LCF_API lcf_status lcf_series_coeff(const lcf_series* series, size_t n, uint32_t* out);
LCF_API lcf_status lcf_series_to_string(const lcf_series* series, char** out);

/* ---- continued fractions ----------------------------------------------- */

LCF_API lcf_status lcf_cf_expand_rational(const lcf_poly* num, const lcf_poly* den, lcf_cf** out);
/* Certified prefix only. */
LCF_API lcf_status lcf_cf_expand_series(const lcf_series* series, lcf_cf** out);
LCF_API void lcf_cf_free(lcf_cf* cf);
/* Number of partial quotients after a0. */
LCF_API size_t lcf_cf_length(const lcf_cf* cf);
LCF_API size_t lcf_cf_certified(const lcf_cf* cf);
/* index 0 is a0; 1..length are the partial quotients. */
LCF_API lcf_status lcf_cf_partial(const lcf_cf* cf, size_t index, lcf_poly** out);
LCF_API lcf_status lcf_cf_to_string(const lcf_cf* cf, char** out);

/* ---- Hankel determinants ----------------------------------------------- */

/* Delta_h of coeffs[0..2h-2]; Delta_0 = 1. */
LCF_API lcf_status lcf_hankel_delta(const lcf_field* field, const uint32_t* coeffs, size_t count,
                                    size_t h, uint32_t* out);

/* ---- commands (JSON reports) ------------------------------------------- */

typedef enum lcf_command {
  LCF_CMD_EXPAND = 0,
  LCF_CMD_DECOMPOSE = 1,
  LCF_CMD_VERIFY = 2,
  LCF_CMD_FUZZ = 3,
  LCF_CMD_EXAMPLE = 4
} lcf_command;

/* NULL strings and has_* = 0 mean "not given".  Fill with lcf_run_options_init. */
typedef struct lcf_run_options {
  uint32_t field;
  const char* rational;
  const char* series;
  const char* cf;
  int has_precision;
  size_t precision;
  int has_seed;
  uint64_t seed;
  const char* mode;  /* "hall", "hall-f2" ("f2"), "shulga" */
  const char* beta;  /* verify */
  const char* gamma;
  const char* suite; /* fuzz */
  size_t trials;
  int has_max_degree;
  int max_degree;
  int k;
  int m;
  size_t rounds;     /* example */
  int pretty;        /* indent the JSON */
} lcf_run_options;

LCF_API void lcf_run_options_init(lcf_run_options* options);

/* Runs a command.  On LCF_OK, *json_out holds the report and *ok_out is 1 iff
 * every check in the run passed. */
LCF_API lcf_status lcf_run(lcf_command command, const lcf_run_options* options, char** json_out,
                           int* ok_out);

#ifdef __cplusplus
}
#endif

#endif /* LCF_LCF_H */
