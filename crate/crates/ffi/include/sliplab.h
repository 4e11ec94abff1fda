#ifndef SLIPLAB_H
#define SLIPLAB_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum SliplabStatus {
  SLIPLAB_STATUS_OK = 0,
  SLIPLAB_STATUS_NULL_POINTER = 1,
  SLIPLAB_STATUS_INVALID_ARGUMENT = 2,
  SLIPLAB_STATUS_PARSE = 3,
  SLIPLAB_STATUS_VALIDATION = 4,
  SLIPLAB_STATUS_CAP_EXCEEDED = 5,
  SLIPLAB_STATUS_BUFFER_TOO_SMALL = 6,
  SLIPLAB_STATUS_PANIC = 7,
} SliplabStatus;

/**
 * An algebra over GF(p). Only ever handled through pointers.
 */
typedef struct SliplabAlgebra SliplabAlgebra;

/**
 * Outcome of [`sliplab_check_slip`].
 */
typedef struct SliplabSlipReport {
  size_t multiplier_dim;
  size_t lip_dim;
  bool is_slip;
  uint64_t points_processed;
  bool early_stop;
} SliplabSlipReport;

/**
 * Outcome of [`sliplab_check_zpd`].
 */
typedef struct SliplabZpdReport {
  size_t span_dim;
  size_t kernel_dim;
  bool is_zpd;
  uint64_t points_processed;
} SliplabZpdReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next `sliplab_*` call on the same thread.
 */
const char *sliplab_last_error(void);

/**
 * Builds an algebra from structure constants (`dim^3` entries, `c[(i*dim+j)*dim+k]`
 * is the coefficient of `e_k` in `e_i e_j`) and a unit (`dim` entries).
 *
 * # Safety
 * `structure` and `unit` must point to `dim^3` and `dim` readable values;
 * `out` must be writable.
 */
enum SliplabStatus sliplab_algebra_new(uint64_t p,
                                       size_t dim,
                                       const uint32_t *structure,
                                       const uint32_t *unit,
                                       struct SliplabAlgebra **out);

/**
 * Parses the text algebra format.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum SliplabStatus sliplab_algebra_parse(const char *text, struct SliplabAlgebra **out);

/**
 * GF(p) as a one-dimensional algebra.
 *
 * # Safety
 * `out` must be writable.
 */
enum SliplabStatus sliplab_algebra_field(uint64_t p, struct SliplabAlgebra **out);

/**
 * GF(p)[x]/(x^2) with basis 1, x.
 *
 * # Safety
 * `out` must be writable.
 */
enum SliplabStatus sliplab_algebra_dual_numbers(uint64_t p, struct SliplabAlgebra **out);

/**
 * Block upper triangular matrices over `a` with the given block sizes.
 *
 * # Safety
 * `a` must be a live handle, `sizes` must point to `len` values and `out`
 * must be writable.
 */
enum SliplabStatus sliplab_algebra_block_upper(const struct SliplabAlgebra *a,
                                               const size_t *sizes,
                                               size_t len,
                                               struct SliplabAlgebra **out);

/**
 * Direct product `a x b`.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum SliplabStatus sliplab_algebra_product(const struct SliplabAlgebra *a,
                                           const struct SliplabAlgebra *b,
                                           struct SliplabAlgebra **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `a` must be null or a handle not yet freed.
 */
void sliplab_algebra_free(struct SliplabAlgebra *a);

/**
 * Dimension over GF(p), or 0 for a null handle.
 *
 * # Safety
 * `a` must be null or a live handle.
 */
size_t sliplab_algebra_dim(const struct SliplabAlgebra *a);

/**
 * The characteristic p, or 0 for a null handle.
 *
 * # Safety
 * `a` must be null or a live handle.
 */
uint32_t sliplab_algebra_characteristic(const struct SliplabAlgebra *a);

/**
 * Text form of the algebra; release with [`sliplab_string_free`].
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum SliplabStatus sliplab_algebra_serialize(const struct SliplabAlgebra *a, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void sliplab_string_free(char *s);

/**
 * Decides SLIP. `cap` of 0 means the default cap. When `witness` is
 * non-null and the algebra is not SLIP, a LIP map that is not a left
 * multiplier is written there row-major (`dim * dim` entries, `witness_len`
 * must be at least that).
 *
 * # Safety
 * `a` must be a live handle, `report` writable, and `witness` null or
 * writable for `witness_len` values.
 */
enum SliplabStatus sliplab_check_slip(const struct SliplabAlgebra *a,
                                      uint64_t cap,
                                      bool early_stop,
                                      struct SliplabSlipReport *report,
                                      uint32_t *witness,
                                      size_t witness_len);

/**
 * Decides the zero product determined property. `cap` of 0 means the
 * default cap.
 *
 * # Safety
 * `a` must be a live handle and `report` writable.
 */
enum SliplabStatus sliplab_check_zpd(const struct SliplabAlgebra *a,
                                     uint64_t cap,
                                     bool early_stop,
                                     struct SliplabZpdReport *report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SLIPLAB_H */
