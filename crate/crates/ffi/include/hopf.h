#ifndef HOPF_H
#define HOPF_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result of every fallible call.
 */
typedef enum HopfStatus {
  HOPF_STATUS_OK = 0,
  HOPF_STATUS_NULL_POINTER = 1,
  HOPF_STATUS_INVALID_UTF8 = 2,
  HOPF_STATUS_PARSE = 3,
  HOPF_STATUS_VALIDATION = 4,
  HOPF_STATUS_DOMAIN = 5,
  HOPF_STATUS_TRUNCATION = 6,
  HOPF_STATUS_STRUCTURAL = 7,
  HOPF_STATUS_INFEASIBLE = 8,
  HOPF_STATUS_BUDGET = 9,
  HOPF_STATUS_INVARIANT = 10,
  HOPF_STATUS_PANIC = 11,
} HopfStatus;

/**
 * Outcome of [`hopf_iso`].
 */
typedef enum HopfVerdict {
  HOPF_VERDICT_NOT_ISOMORPHIC = 0,
  HOPF_VERDICT_ISOMORPHIC = 1,
  HOPF_VERDICT_UNDETERMINED = 2,
} HopfVerdict;

/**
 * A connected graded Hopf algebra truncated at a fixed degree.
 */
typedef struct HopfAlgebra HopfAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message of the last failed call on this thread, or null. The
 * pointer stays valid until the next call on this thread.
 */
const char *hopf_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` is null or was returned by this library and not yet freed.
 */
void hopf_string_free(char *s);

/**
 * Builds a named gallery fixture (or the source of a gallery map) in
 * characteristic `characteristic` (0 for the rationals) up to degree
 * `truncation`.
 *
 * # Safety
 * `name` is a NUL-terminated string; `out` is valid for one write.
 */
enum HopfStatus hopf_gallery_open(const char *name,
                                  uint32_t characteristic,
                                  size_t truncation,
                                  struct HopfAlgebra **out);

/**
 * Builds a Hopf algebra from a JSON presentation document at the
 * document's own truncation.
 *
 * # Safety
 * `json` is a NUL-terminated string; `out` is valid for one write.
 */
enum HopfStatus hopf_document_open(const char *json, struct HopfAlgebra **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `h` is null or a handle from this library not yet freed.
 */
void hopf_algebra_free(struct HopfAlgebra *h);

/**
 * The truncation degree of `h`.
 *
 * # Safety
 * `h` is a live handle; `out` is valid for one write.
 */
enum HopfStatus hopf_algebra_bound(const struct HopfAlgebra *h, size_t *out);

/**
 * The dimension of `h` in `degree` (0 above the bound).
 *
 * # Safety
 * `h` is a live handle; `out` is valid for one write.
 */
enum HopfStatus hopf_algebra_dimension(const struct HopfAlgebra *h, size_t degree, size_t *out);

/**
 * The product of two elements, e.g. `"x^2 + y"`, as text.
 *
 * # Safety
 * `h` is a live handle; `left` and `right` are NUL-terminated strings;
 * `out` is valid for one write. Free the result with [`hopf_string_free`].
 */
enum HopfStatus hopf_product(const struct HopfAlgebra *h,
                             const char *left,
                             const char *right,
                             char **out);

/**
 * The coproduct of an element as text, with `⊗` between tensor factors.
 *
 * # Safety
 * As for [`hopf_product`].
 */
enum HopfStatus hopf_coproduct(const struct HopfAlgebra *h, const char *element, char **out);

/**
 * The chain decomposition of the V-module of indecomposables, e.g.
 * `"{(1,0),(2,1)}"`.
 *
 * # Safety
 * `h` is a live handle; `out` is valid for one write. Free the result
 * with [`hopf_string_free`].
 */
enum HopfStatus hopf_classify(const struct HopfAlgebra *h, char **out);

/**
 * Whether every bialgebra axiom holds up to the bound.
 *
 * # Safety
 * `h` is a live handle; `out` is valid for one write.
 */
enum HopfStatus hopf_check_axioms(const struct HopfAlgebra *h, bool *out);

/**
 * Whether the projection onto indecomposables has a V-equivariant section.
 *
 * # Safety
 * `h` is a live handle; `out` is valid for one write.
 */
enum HopfStatus hopf_is_split(const struct HopfAlgebra *h, bool *out);

/**
 * Hopf-level isomorphism test. `detail`, when not null, receives the
 * evidence text, to be freed with [`hopf_string_free`].
 *
 * # Safety
 * `a` and `b` are live handles; `out` is valid for one write; `detail` is
 * null or valid for one write.
 */
enum HopfStatus hopf_iso(const struct HopfAlgebra *a,
                         const struct HopfAlgebra *b,
                         enum HopfVerdict *out,
                         char **detail);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOPF_H */
