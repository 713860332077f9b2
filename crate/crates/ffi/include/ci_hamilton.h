/* C ABI for the ci-hamilton library. */

#ifndef CI_HAMILTON_H
#define CI_HAMILTON_H

/* Generated by cbindgen from ci-hamilton-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code returned by every entry point.
typedef enum CihStatus {
  // Success; for verification entry points, all checks passed.
  CihOk = 0,
  // A required pointer argument was NULL.
  CihNullPointer = 1,
  // Input validation failed (dimension, degree, Betti data, ...).
  CihInvalidArgument = 2,
  // The query is undefined for this input (signature in odd complex
  // dimension).
  CihUnsupported = 3,
  // The input parsed and validated but a check failed.
  CihCheckFailed = 4,
  // A JSON document failed to parse.
  CihParseError = 5,
  // An internal invariant was violated; this is a library bug.
  CihInternalError = 6,
} CihStatus;

// Outcome of the smooth circle-action obstruction test.
typedef enum CihObstruction {
  // Spin with nonzero A-hat genus: no smooth circle action exists.
  CihObstructionExcludesAction = 0,
  // Spin with vanishing A-hat genus: the test says nothing.
  CihObstructionNone = 1,
  // Odd complex dimension or not spin: the test does not apply.
  CihObstructionNotApplicable = 2,
} CihObstruction;

// Combined Hamiltonian verdict across both dimension branches.
typedef enum CihVerdict {
  // Real dimension 8k, positive definite: diffeomorphic to CP^{4k}.
  CihVerdictConsistentProjectiveSpace = 0,
  // Real dimension 8k, positive definite: diffeomorphic to a quadric.
  CihVerdictConsistentQuadric = 1,
  // Real dimension 8k, positive definite: an intersection of two
  // quadrics.
  CihVerdictConsistentTwoQuadrics = 2,
  // Real dimension 8k, signature below the middle Betti number: no
  // Hamiltonian circle action with isolated or 2-mod-4-dimensional
  // fixed components exists.
  CihVerdictExcluded = 3,
  // Real dimension 8k+4 and `signature = 2 - middle Betti number`.
  CihVerdictRelationHolds = 4,
  // Real dimension 8k+4 and the relation fails (same exclusion as
  // `CihVerdictExcluded`).
  CihVerdictRelationFails = 5,
  // Odd complex dimension: neither branch applies.
  CihVerdictNotApplicable = 6,
} CihVerdict;

// Opaque handle to a complete intersection.
typedef struct CihIntersection CihIntersection;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Create a complete intersection of complex dimension `n` from
// `degrees_len` hypersurface degrees. Degree-1 entries are dropped and
// the rest sorted, exactly as the library normalizes multidegrees.
// `degrees` may be NULL when `degrees_len` is 0.
//
// # Safety
// `degrees` must point to `degrees_len` readable `uint32_t` values when
// `degrees_len > 0`, and `out` must be a valid pointer.
enum CihStatus cih_intersection_new(uint32_t n,
                                    const uint32_t *degrees,
                                    size_t degrees_len,
                                    struct CihIntersection **out);

// Release a handle created by [`cih_intersection_new`]. NULL is a no-op.
//
// # Safety
// `handle` must be NULL or a pointer previously returned by
// [`cih_intersection_new`] that has not been freed yet.
void cih_intersection_free(struct CihIntersection *handle);

// Exact Euler characteristic.
//
// # Safety
// `handle` must be a live handle and `out` a valid pointer.
enum CihStatus cih_euler_characteristic(const struct CihIntersection *handle, int64_t *out);

// Middle Betti number `b_n`.
//
// # Safety
// `handle` must be a live handle and `out` a valid pointer.
enum CihStatus cih_middle_betti(const struct CihIntersection *handle, uint64_t *out);

// Signature of the middle intersection form. Fails with
// `CihUnsupported` when the complex dimension is odd.
//
// # Safety
// `handle` must be a live handle and `out` a valid pointer.
enum CihStatus cih_signature(const struct CihIntersection *handle, int64_t *out);

// A-hat genus as a fraction string, e.g. `"2"` or `"-1/8"`. Release the
// string with [`cih_string_free`].
//
// # Safety
// `handle` must be a live handle and `out` a valid pointer.
enum CihStatus cih_a_hat_genus(const struct CihIntersection *handle, char **out);

// Whether the first Chern class is positive.
//
// # Safety
// `handle` must be a live handle and `out` a valid pointer.
enum CihStatus cih_is_fano(const struct CihIntersection *handle, bool *out);

// Whether the second Stiefel-Whitney class vanishes.
//
// # Safety
// `handle` must be a live handle and `out` a valid pointer.
enum CihStatus cih_is_spin(const struct CihIntersection *handle, bool *out);

// The A-hat obstruction to smooth circle actions.
//
// # Safety
// `handle` must be a live handle and `out` a valid pointer.
enum CihStatus cih_smooth_action_obstruction(const struct CihIntersection *handle,
                                             enum CihObstruction *out);

// The Hamiltonian verdict: the positive-definiteness classification in
// real dimension 8k, the signature relation in dimension 8k+4.
//
// # Safety
// `handle` must be a live handle and `out` a valid pointer.
enum CihStatus cih_hamiltonian_verdict(const struct CihIntersection *handle, enum CihVerdict *out);

// Full invariant report as a JSON document, in the same shape as
// `ci-hamilton invariants --json`. Release with [`cih_string_free`].
//
// # Safety
// `handle` must be a live handle and `out` a valid pointer.
enum CihStatus cih_invariants_json(const struct CihIntersection *handle, char **out);

// Check a fixed-point document (same JSON schema as
// `ci-hamilton verify-fixed-points`) and write the verification report
// as JSON. Returns `CihOk` when all checks pass, `CihCheckFailed` when
// the report contains a failure, `CihParseError`/`CihInvalidArgument`
// for bad input; the report is written whenever the document was valid.
//
// # Safety
// `document` must be a NUL-terminated string; `out_report` may be NULL
// if the caller only wants the status.
enum CihStatus cih_verify_fixed_points_json(const char *document, char **out_report);

// Enumerate fixed-point data against a target profile given as
// `betti_len` Betti numbers `b_0..b_{2m}`; writes a JSON object with the
// solutions, their count, and the truncation flag. Release with
// [`cih_string_free`].
//
// # Safety
// `betti` must point to `betti_len` readable `uint64_t` values and
// `out` must be a valid pointer.
enum CihStatus cih_enumerate_json(const uint64_t *betti,
                                  size_t betti_len,
                                  size_t max_components,
                                  bool allow_positive_dim,
                                  char **out);

// Release a string returned by this library. NULL is a no-op.
//
// # Safety
// `s` must be NULL or a string returned by this library that has not
// been freed yet.
void cih_string_free(char *s);

// Static description of a status code. Never NULL; do not free.
const char *cih_status_message(enum CihStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CI_HAMILTON_H */
