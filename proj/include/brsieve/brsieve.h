#ifndef BRSIEVE_BRSIEVE_H
#define BRSIEVE_BRSIEVE_H

#include <stdint.h>

#if defined(_WIN32)
#define BRSIEVE_API __declspec(dllexport)
#else
#define BRSIEVE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum brsieve_status {
  BRSIEVE_OK = 0,
  BRSIEVE_INVALID_ARGUMENT = 1,
  BRSIEVE_PARSE_ERROR = 2,
  BRSIEVE_BUDGET_EXCEEDED = 3,
  BRSIEVE_UNSUPPORTED = 4,
  BRSIEVE_INVARIANT_VIOLATION = 5,
  BRSIEVE_INDETERMINATE = 6,
  BRSIEVE_INTERNAL = 7
} brsieve_status;

/* Opaque handles. */
typedef struct brsieve_curve brsieve_curve;
typedef struct brsieve_report brsieve_report;

BRSIEVE_API const char* brsieve_version(void);

/* Message of the last failed call on this thread ("" if none). */
BRSIEVE_API const char* brsieve_last_error(void);

/* Strings returned through char** out-parameters are owned by the caller. */
BRSIEVE_API void brsieve_string_free(char* s);

/* Curve specs: "model = ...", "base = ...", "f = [...]" or "a_invariants = [...]". */
BRSIEVE_API brsieve_status brsieve_curve_parse(const char* text, brsieve_curve** out);
BRSIEVE_API brsieve_status brsieve_curve_load(const char* path, brsieve_curve** out);
BRSIEVE_API void brsieve_curve_free(brsieve_curve* curve);
BRSIEVE_API brsieve_status brsieve_curve_serialize(const brsieve_curve* curve, char** out);
BRSIEVE_API brsieve_status brsieve_curve_genus(const brsieve_curve* curve, unsigned* out);

/* Point count over F_{v^n} (curve over Q) or F_{q^n} (finite base, v ignored). */
BRSIEVE_API brsieve_status brsieve_curve_count(const brsieve_curve* curve, uint64_t v, unsigned n, uint64_t* out);

/* #J over the same fields, as a decimal string. */
BRSIEVE_API brsieve_status brsieve_curve_jacobian_order(const brsieve_curve* curve, uint64_t v, unsigned n, char** out);

/* L-polynomial coefficients as "[1, a1, ..., q^g]". */
BRSIEVE_API brsieve_status brsieve_curve_lpolynomial(const brsieve_curve* curve, uint64_t v, char** out);

/* Runs a subcommand such as "curve jac-order" with a JSON object of options
   (flag names with '-' replaced by '_'). */
BRSIEVE_API brsieve_status brsieve_run(const char* subcommand, const char* config_json, brsieve_report** out);
BRSIEVE_API void brsieve_report_free(brsieve_report* report);
BRSIEVE_API brsieve_status brsieve_report_json(const brsieve_report* report, int indent, char** out);
BRSIEVE_API brsieve_status brsieve_report_csv(const brsieve_report* report, char** out);
BRSIEVE_API brsieve_status brsieve_report_text(const brsieve_report* report, char** out);

/* 0 success, 1 mismatch, 2 input error, 3 budget exceeded. */
BRSIEVE_API int brsieve_report_exit_code(const brsieve_report* report);

/* Exit code for a failed call's status. */
BRSIEVE_API int brsieve_status_exit_code(brsieve_status status);

#ifdef __cplusplus
}
#endif

#endif
