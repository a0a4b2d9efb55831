#ifndef QUIVDIM_H
#define QUIVDIM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result code of every fallible call.
 */
typedef enum QdStatus {
  QD_STATUS_OK = 0,
  QD_STATUS_NULL_POINTER = 1,
  QD_STATUS_INVALID_UTF8 = 2,
  /**
   * The text format could not be read.
   */
  QD_STATUS_PARSE = 3,
  /**
   * The text was read but does not describe a valid algebra.
   */
  QD_STATUS_INVALID_ALGEBRA = 4,
  QD_STATUS_UNKNOWN_VERTEX = 5,
  QD_STATUS_INVALID_ARGUMENT = 6,
  /**
   * A panic was caught at the boundary.
   */
  QD_STATUS_INTERNAL = 7,
} QdStatus;

/**
 * An incidence quotient owned by the library.
 */
typedef struct QdAlgebra QdAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses an algebra in the text format.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum QdStatus qd_algebra_parse(const char *text, struct QdAlgebra **out);

/**
 * Builds a catalogue algebra such as `A_1` from `kind` ("A", "B" or "Q") and `param`.
 *
 * # Safety
 * `kind` must be a NUL-terminated string and `out` a valid pointer.
 */
enum QdStatus qd_algebra_template(const char *kind,
                                  uint32_t param,
                                  bool opposite,
                                  struct QdAlgebra **out);

/**
 * Draws the seeded random instance on `n` vertices.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum QdStatus qd_algebra_random(uint64_t seed, uint32_t n, struct QdAlgebra **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `a` must come from this library and not be used afterwards.
 */
void qd_algebra_free(struct QdAlgebra *a);

/**
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum QdStatus qd_algebra_vertex_count(const struct QdAlgebra *a, size_t *out);

/**
 * Whether the algebra passes the strong simple connectedness certificate.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum QdStatus qd_algebra_is_certified(const struct QdAlgebra *a, bool *out);

/**
 * The algebra in the text format.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum QdStatus qd_algebra_to_text(const struct QdAlgebra *a, char **out);

/**
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum QdStatus qd_gldim(const struct QdAlgebra *a, uint32_t *out);

/**
 * Projective dimension of the simple at the vertex labelled `label`.
 *
 * # Safety
 * `a` must be a live handle, `label` a NUL-terminated string and `out` a valid pointer.
 */
enum QdStatus qd_pd_simple(const struct QdAlgebra *a, const char *label, uint32_t *out);

/**
 * Injective dimension of the simple at the vertex labelled `label`.
 *
 * # Safety
 * `a` must be a live handle, `label` a NUL-terminated string and `out` a valid pointer.
 */
enum QdStatus qd_id_simple(const struct QdAlgebra *a, const char *label, uint32_t *out);

/**
 * Multiplicity of `P_y` in the `k`-th term of the minimal resolution of `S_x`.
 *
 * # Safety
 * `a` must be a live handle, the labels NUL-terminated strings and `out` a valid pointer.
 */
enum QdStatus qd_ext_dim(const struct QdAlgebra *a,
                         const char *x,
                         const char *y,
                         uint32_t k,
                         uint32_t *out);

/**
 * Number of critical full subcategories, found by scanning every subset.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum QdStatus qd_critical_count(const struct QdAlgebra *a, size_t *out);

/**
 * The JSON report: dimensions of all simples and, if `criterion`, the
 * critical subcategories.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum QdStatus qd_report_json(const struct QdAlgebra *a, bool criterion, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void qd_string_free(char *s);

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next call into the library on the same thread.
 */
const char *qd_last_error(void);

/**
 * Library version, a static string.
 */
const char *qd_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QUIVDIM_H */
