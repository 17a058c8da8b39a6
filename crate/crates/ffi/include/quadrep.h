/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#ifndef QUADREP_H
#define QUADREP_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Which component [`quadrep_representation_get`] returns.
 */
typedef enum QuadrepComponent {
  QUADREP_COMPONENT_X = 0,
  QUADREP_COMPONENT_Y = 1,
  QUADREP_COMPONENT_U = 2,
  /**
   * JSON trace of an integer descent; NULL for polynomial rings.
   */
  QUADREP_COMPONENT_TRACE_JSON = 3,
} QuadrepComponent;

typedef enum QuadrepConvention {
  QUADREP_CONVENTION_FLOOR = 0,
  QUADREP_CONVENTION_LEAST_ABS = 1,
} QuadrepConvention;

typedef enum QuadrepRing {
  QUADREP_RING_INTEGERS = 0,
  /**
   * Polynomials over F_p; pass the prime separately.
   */
  QUADREP_RING_POLY_FP = 1,
  QUADREP_RING_POLY_RATIONALS = 2,
} QuadrepRing;

/**
 * Result of a call.
 */
typedef enum QuadrepStatus {
  QUADREP_STATUS_OK = 0,
  /**
   * The algorithm ran and reported failure, e.g. a step limit.
   */
  QUADREP_STATUS_FAILURE = 1,
  QUADREP_STATUS_INVALID_INPUT = 2,
  QUADREP_STATUS_INTERNAL = 3,
  QUADREP_STATUS_NULL_POINTER = 4,
  QUADREP_STATUS_PANIC = 5,
} QuadrepStatus;

/**
 * A form `x² + gxy + hy²` over one ring.
 */
typedef struct QuadrepForm QuadrepForm;

/**
 * A representation `m = u·Q(x, y)`, plus the descent trace for integers.
 */
typedef struct QuadrepRepresentation QuadrepRepresentation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version, a static string.
 */
const char *quadrep_version(void);

/**
 * Message for the last failing call on this thread; empty after a
 * successful call. Valid until the next call on the same thread.
 */
const char *quadrep_last_error(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void quadrep_string_free(char *s);

/**
 * Creates the form `x² + gxy + hy²`. `prime` is read only for
 * `QUADREP_RING_POLY_FP`. Coefficients use the text syntax, e.g. `"1+2*X"`.
 *
 * # Safety
 * `g` and `h` must be NUL-terminated strings; `out` must be writable.
 */
enum QuadrepStatus quadrep_form_new(enum QuadrepRing ring,
                                    uint64_t prime,
                                    const char *g,
                                    const char *h,
                                    struct QuadrepForm **out);

/**
 * # Safety
 * `form` must come from [`quadrep_form_new`] and not have been freed.
 */
void quadrep_form_free(struct QuadrepForm *form);

/**
 * Writes `Q(x, y)` to `out`.
 *
 * # Safety
 * Pointers must be valid; `out` receives a string to free with
 * [`quadrep_string_free`].
 */
enum QuadrepStatus quadrep_form_evaluate(const struct QuadrepForm *form,
                                         const char *x,
                                         const char *y,
                                         char **out);

/**
 * Lifts `m = u·Q(x, y)` to a root `z0` of `Q(z, 1)` modulo `m`.
 *
 * # Safety
 * Pointers must be valid; `out_m` and `out_z0` receive strings to free
 * with [`quadrep_string_free`].
 */
enum QuadrepStatus quadrep_lift(const struct QuadrepForm *form,
                                const char *x,
                                const char *y,
                                const char *u,
                                char **out_m,
                                char **out_z0);

/**
 * Sets `*out` to whether `m` divides `Q(z, 1)`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum QuadrepStatus quadrep_verify_root(const struct QuadrepForm *form,
                                       const char *m,
                                       const char *z,
                                       bool *out);

/**
 * Descends from a root `z` of `Q(z, 1)` modulo `m` to `m = u·Q(x, y)`.
 * Integer forms must be catalog forms; `max_steps = 0` picks the default
 * limit. Returns `QUADREP_STATUS_FAILURE` when the algorithm gives up.
 *
 * # Safety
 * Pointers must be valid; `out` receives a handle to free with
 * [`quadrep_representation_free`].
 */
enum QuadrepStatus quadrep_descend(const struct QuadrepForm *form,
                                   const char *m,
                                   const char *z,
                                   enum QuadrepConvention convention,
                                   uint64_t max_steps,
                                   struct QuadrepRepresentation **out);

/**
 * # Safety
 * `rep` must come from [`quadrep_descend`] and not have been freed.
 */
void quadrep_representation_free(struct QuadrepRepresentation *rep);

/**
 * A component of `rep` as a new string (free with
 * [`quadrep_string_free`]), or NULL if `rep` is NULL or has no trace.
 *
 * # Safety
 * `rep` must be NULL or a live handle.
 */
char *quadrep_representation_get(const struct QuadrepRepresentation *rep,
                                 enum QuadrepComponent component);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QUADREP_H */
