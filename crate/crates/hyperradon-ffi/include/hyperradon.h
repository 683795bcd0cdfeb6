#ifndef HYPERRADON_H
#define HYPERRADON_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result status of every FFI call.
 */
typedef enum {
  HR_STATUS_OK = 0,
  /**
   * A pointer argument was null or a handle was invalid.
   */
  HR_STATUS_NULL_ARGUMENT = 1,
  /**
   * Parameters were rejected before any computation ran.
   */
  HR_STATUS_INVALID_PARAMETER = 2,
  /**
   * A quadrature or series did not reach its tolerance.
   */
  HR_STATUS_NON_CONVERGENCE = 3,
  /**
   * The computation panicked; the context is still usable.
   */
  HR_STATUS_INTERNAL = 4,
} HrStatus;

/**
 * Opaque evaluation context: tolerances plus the last error message.
 */
typedef struct HrContext HrContext;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Allocate a context with default tolerances. Free with
 * `hr_context_free`.
 */
HrContext *hr_context_new(void);

/**
 * Release a context. Passing null is a no-op.
 */
void hr_context_free(HrContext *ctx);

/**
 * Override one tolerance by name, e.g. `sigma_cutoff` = `60.0`.
 * Unknown keys and non-positive values are rejected.
 *
 * # Safety
 * `ctx` must come from `hr_context_new`; `key` must be a NUL-terminated
 * string.
 */
HrStatus hr_context_set(HrContext *ctx, const char *key, double value);

/**
 * Message for the most recent failing call on this context, or null if
 * the last call succeeded. The pointer is owned by the context and is
 * invalidated by the next call on it.
 *
 * # Safety
 * `ctx` must come from `hr_context_new`.
 */
const char *hr_last_error(const HrContext *ctx);

/**
 * Modified Bessel function of imaginary order, K_{i kappa}(x), with an
 * a-posteriori error estimate.
 *
 * # Safety
 * All pointers must be valid; `ctx` must come from `hr_context_new`.
 */
HrStatus hr_bessel_k_imag(HrContext *ctx,
                          double kappa,
                          double x,
                          double *out_value,
                          double *out_abs_error);

/**
 * Conical function P^m_{i kappa - 1/2}(x) for x > 1.
 *
 * # Safety
 * All pointers must be valid; `ctx` must come from `hr_context_new`.
 */
HrStatus hr_conical_p(HrContext *ctx,
                      double kappa,
                      int32_t m,
                      double x,
                      double *out_value,
                      double *out_abs_error);

/**
 * Bound-state orders of the depth-k well, smallest first. Writes at
 * most `cap` values into `out` and stores the true count in
 * `out_count`; call again with a larger buffer if truncated.
 *
 * # Safety
 * `out` must point to at least `cap` doubles when `cap > 0`.
 */
HrStatus hr_poschl_teller_spectrum(HrContext *ctx,
                                   uint32_t k,
                                   double *out,
                                   uintptr_t cap,
                                   uintptr_t *out_count);

/**
 * Bound-state order 2(n + theta/pi) of the boundary-angle extension.
 *
 * # Safety
 * `ctx` must come from `hr_context_new`; `out_nu` must be valid.
 */
HrStatus hr_extension_bound_order(HrContext *ctx, double theta, int64_t n, double *out_nu);

/**
 * Geodesic Radon image of the disc eigenmode (k, nu) over the geodesic
 * at angle theta with offset xi, by adaptive quadrature. The context's
 * `sigma_cutoff` tolerance controls the arc truncation.
 *
 * # Safety
 * All pointers must be valid; `ctx` must come from `hr_context_new`.
 */
HrStatus hr_radon_disc(HrContext *ctx,
                       int32_t k,
                       double nu,
                       double theta,
                       double xi,
                       double *out_re,
                       double *out_im);

/**
 * Closed form of the disc Radon image, for cross-checking the
 * quadrature route.
 *
 * # Safety
 * All pointers must be valid; `ctx` must come from `hr_context_new`.
 */
HrStatus hr_radon_disc_closed_form(HrContext *ctx,
                                   int32_t k,
                                   double nu,
                                   double theta,
                                   double xi,
                                   double *out_re,
                                   double *out_im);

/**
 * Singular value of the Radon transform at spectral order nu.
 *
 * # Safety
 * All pointers must be valid; `ctx` must come from `hr_context_new`.
 */
HrStatus hr_singular_value(HrContext *ctx, double nu, double *out_value);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HYPERRADON_H */
