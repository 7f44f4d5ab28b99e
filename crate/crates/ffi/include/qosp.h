#ifndef QOSP_H
#define QOSP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum QospStatus {
  QOSP_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  QOSP_STATUS_NULL = 1,
  /**
   * The expression text did not parse.
   */
  QOSP_STATUS_PARSE = 2,
  /**
   * An argument was out of range or of the wrong rank.
   */
  QOSP_STATUS_INVALID = 3,
  /**
   * The computation itself failed (no solution, division by zero, ...).
   */
  QOSP_STATUS_MATH = 4,
  /**
   * A string argument was not valid UTF-8.
   */
  QOSP_STATUS_UTF8 = 5,
  /**
   * The library panicked; the handle arguments should be considered poisoned.
   */
  QOSP_STATUS_PANIC = 6,
} QospStatus;

/**
 * Algebra handle for a fixed rank and ρ convention.
 */
typedef struct QospAlgebra QospAlgebra;

/**
 * Element handle, tied to the rank of the algebra that produced it.
 */
typedef struct QospElement QospElement;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates the algebra of rank `rank`; `literal_rho` selects ρ as the full
 * sum of positive roots instead of the half sum.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage.
 */
enum QospStatus qosp_algebra_new(uint32_t rank, bool literal_rho, struct QospAlgebra **out);

/**
 * # Safety
 * `alg` must be null or a handle from [`qosp_algebra_new`] not yet freed.
 */
void qosp_algebra_free(struct QospAlgebra *alg);

/**
 * # Safety
 * `alg` must be a live algebra handle, `expr` a NUL-terminated string and
 * `out` writable.
 */
enum QospStatus qosp_element_parse(const struct QospAlgebra *alg,
                                   const char *expr,
                                   struct QospElement **out);

/**
 * # Safety
 * `x` must be null or a live element handle.
 */
void qosp_element_free(struct QospElement *x);

/**
 * Canonical text of `x`; release with [`qosp_string_free`].
 *
 * # Safety
 * `x` must be a live element handle and `out` writable.
 */
enum QospStatus qosp_element_to_string(const struct QospElement *x, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void qosp_string_free(char *s);

/**
 * # Safety
 * All handles must be live and belong to algebras of the same rank.
 */
enum QospStatus qosp_element_mul(const struct QospAlgebra *alg,
                                 const struct QospElement *a,
                                 const struct QospElement *b,
                                 struct QospElement **out);

/**
 * Zhang transformation `Ψ(x)`.
 *
 * # Safety
 * Handles must be live; `out` writable.
 */
enum QospStatus qosp_psi(const struct QospAlgebra *alg,
                         const struct QospElement *x,
                         struct QospElement **out);

/**
 * Harish-Chandra projection of `x` onto its torus part.
 *
 * # Safety
 * `x` must be live; `out` writable.
 */
enum QospStatus qosp_upsilon(const struct QospElement *x, struct QospElement **out);

/**
 * # Safety
 * `x` must be live; `out` writable.
 */
enum QospStatus qosp_element_is_zero(const struct QospElement *x, bool *out);

/**
 * Whether `x` lies in the image `Ψ(U)`.
 *
 * # Safety
 * Handles must be live; `out` writable.
 */
enum QospStatus qosp_in_bar(const struct QospAlgebra *alg, const struct QospElement *x, bool *out);

/**
 * Central element `z_{2λ}` for `2λ` given by `len` twice-coordinates,
 * solved on the window of the given height.
 *
 * # Safety
 * `two_lambda` must point to `len` readable integers; `alg` live; `out` writable.
 */
enum QospStatus qosp_casimir(const struct QospAlgebra *alg,
                             const int32_t *two_lambda,
                             size_t len,
                             uint32_t height,
                             struct QospElement **out);

/**
 * Annihilation criterion for the character with `Λ(K_{β_i}) = values[i]`
 * (scalar expressions) and `θ` given by the low `rank` bits of `theta_mask`.
 *
 * # Safety
 * `values` must point to `len` NUL-terminated strings; `alg` live; `out` writable.
 */
enum QospStatus qosp_annihilation_criterion(const struct QospAlgebra *alg,
                                            const char *const *values,
                                            size_t len,
                                            uint32_t theta_mask,
                                            bool *out);

/**
 * Message for the last failed call on this thread (empty after a success).
 * The pointer stays valid until the next call into the library on this thread.
 */
const char *qosp_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QOSP_H */
