#ifndef PRETZEL_SURGEON_H
#define PRETZEL_SURGEON_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible entry point.
 */
typedef enum PsCode {
  Ok = 0,
  InvalidArgument = 1,
  NullPointer = 2,
  Internal = 3,
} PsCode;

/**
 * Conclusion of a classification run.
 */
typedef enum PsConclusion {
  NoNontrivialFinite = 0,
  Inconclusive = 1,
} PsConclusion;

/**
 * Opaque classification ledger.
 */
typedef struct PsLedger PsLedger;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Intersection number of two slopes a/b and c/d.
 *
 * # Safety
 * `out` must point to writable memory for one u64.
 */
enum PsCode ps_slope_distance(int64_t a_num,
                              int64_t a_den,
                              int64_t b_num,
                              int64_t b_den,
                              uint64_t *out);

/**
 * Minimal total norm S = 2pq - 3(p+q).
 *
 * # Safety
 * `out` must point to writable memory for one i64.
 */
enum PsCode ps_minimal_norm(int64_t p, int64_t q, int64_t *out);

/**
 * Exact minimum of the norm of slope num/den over the feasible
 * coefficient vectors of the knot's detection-backed model.
 *
 * # Safety
 * `out` must point to writable memory for one i64.
 */
enum PsCode ps_min_slope_norm(int64_t p, int64_t q, int64_t num, int64_t den, int64_t *out);

/**
 * Classify the knot and hand back an opaque ledger handle.
 *
 * # Safety
 * `out` must point to writable memory for one `PsLedger*`; the handle must
 * be released with [`ps_ledger_free`].
 */
enum PsCode ps_classify(int64_t p, int64_t q, bool allow_asserted, struct PsLedger **out);

/**
 * Conclusion recorded in a ledger.
 *
 * # Safety
 * `ledger` must be a live handle from [`ps_classify`]; `out` must be
 * writable.
 */
enum PsCode ps_ledger_conclusion(const struct PsLedger *ledger, enum PsConclusion *out);

/**
 * Number of candidate slopes in a ledger.
 *
 * # Safety
 * `ledger` must be a live handle; `out` must be writable.
 */
enum PsCode ps_ledger_candidate_count(const struct PsLedger *ledger, uintptr_t *out);

/**
 * Number of entries recorded with status paper_asserted.
 *
 * # Safety
 * `ledger` must be a live handle; `out` must be writable.
 */
enum PsCode ps_ledger_asserted_count(const struct PsLedger *ledger, uintptr_t *out);

/**
 * Serialize a ledger to its stable JSON form.
 *
 * # Safety
 * `ledger` must be a live handle; `out` receives a NUL-terminated string
 * owned by the caller (release with [`ps_string_free`]).
 */
enum PsCode ps_ledger_to_json(const struct PsLedger *ledger, char **out);

/**
 * Release a ledger handle. A null pointer is a no-op.
 *
 * # Safety
 * `ledger` must be null or a handle from [`ps_classify`] not yet freed.
 */
void ps_ledger_free(struct PsLedger *ledger);

/**
 * Release a string returned by this library. A null pointer is a no-op.
 *
 * # Safety
 * `s` must be null or a string returned by this library not yet freed.
 */
void ps_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PRETZEL_SURGEON_H */
