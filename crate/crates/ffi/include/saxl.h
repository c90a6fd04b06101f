#ifndef SAXL_H
#define SAXL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SaxlStatus {
  SAXL_STATUS_OK = 0,
  SAXL_STATUS_NULL_POINTER = 1,
  SAXL_STATUS_INVALID_ARGUMENT = 2,
  SAXL_STATUS_PARSE = 3,
  SAXL_STATUS_BOUND_EXCEEDED = 4,
  SAXL_STATUS_UNSUPPORTED = 5,
  SAXL_STATUS_MISMATCH = 6,
  SAXL_STATUS_OUT_OF_RANGE = 7,
  SAXL_STATUS_INTERNAL = 8,
} SaxlStatus;

// Result of a CLI-style run: rendered output and pass/fail.
typedef struct SaxlReport SaxlReport;

// Character table of a symmetric group.
typedef struct SaxlSnTable SaxlSnTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread ("" after a success).
// Valid until the next call into the library on this thread.
const char *saxl_last_error(void);

// Library version as a static string.
const char *saxl_version(void);

// Computes the character table of S_n.
//
// # Safety
// `out` must be a valid pointer to writable storage for one handle.
enum SaxlStatus saxl_sn_table_new(uint32_t n, struct SaxlSnTable **out);

// # Safety
// `t` must be null or a handle from [`saxl_sn_table_new`] not yet freed.
void saxl_sn_table_free(struct SaxlSnTable *t);

// Number of classes (= number of irreducibles), 0 for a null handle.
//
// # Safety
// `t` must be null or a live handle.
size_t saxl_sn_table_size(const struct SaxlSnTable *t);

// Partition labelling row (and class) `i`, e.g. "3,2,1"; null when out of
// range.
//
// # Safety
// `t` must be null or a live handle.
const char *saxl_sn_table_label(const struct SaxlSnTable *t, size_t i);

// χ^{row}(class col).
//
// # Safety
// `t` must be a live handle and `out` writable.
enum SaxlStatus saxl_sn_table_value(const struct SaxlSnTable *t,
                                    size_t row,
                                    size_t col,
                                    int64_t *out);

// Littlewood-Richardson coefficient c^gamma_{alpha, beta}. Partitions are
// written "4,3,1" ("-" for empty).
//
// # Safety
// String arguments must be NUL-terminated; `out` writable.
enum SaxlStatus saxl_lr_coeff(const char *alpha,
                              const char *beta,
                              const char *gamma,
                              uint64_t *out);

// Kronecker coefficient <χ^λ χ^μ, χ^ν>.
//
// # Safety
// String arguments must be NUL-terminated; `out` writable.
enum SaxlStatus saxl_kronecker(const char *lambda, const char *mu, const char *nu, uint64_t *out);

// Runs a `saxl` command given as an argument vector without the program
// name, e.g. {"exceptional", "--group", "G2", "--verify-appendix"}. With
// `json` nonzero the output is the JSON report stream, else markdown.
//
// A command whose checks fail still returns `Ok`; query
// [`saxl_report_passed`].
//
// # Safety
// `argv` must point to `argc` NUL-terminated strings; `out` writable.
enum SaxlStatus saxl_run(const char *const *argv,
                         size_t argc,
                         int32_t json,
                         struct SaxlReport **out);

// 1 when every check in the report passed, 0 otherwise (or for null).
//
// # Safety
// `r` must be null or a live handle.
int32_t saxl_report_passed(const struct SaxlReport *r);

// Rendered report text, owned by the handle.
//
// # Safety
// `r` must be null or a live handle.
const char *saxl_report_text(const struct SaxlReport *r);

// # Safety
// `r` must be null or a handle from [`saxl_run`] not yet freed.
void saxl_report_free(struct SaxlReport *r);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SAXL_H */
