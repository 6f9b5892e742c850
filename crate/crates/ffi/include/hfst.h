#ifndef HFST_H
#define HFST_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum HfstStatus {
  HFST_STATUS_OK = 0,
  /**
   * The input parsed but is not a valid object, or a precondition failed.
   */
  HFST_STATUS_INVALID = 1,
  HFST_STATUS_PARSE = 2,
  /**
   * Independent computations disagreed.
   */
  HFST_STATUS_INCONSISTENT = 3,
  HFST_STATUS_NULL_ARGUMENT = 4,
  /**
   * A Rust panic was caught at the boundary.
   */
  HFST_STATUS_PANIC = 5,
} HfstStatus;

/**
 * Opaque A∞-module.
 */
typedef struct HfstModule HfstModule;

/**
 * Opaque type D structure.
 */
typedef struct HfstTypeD HfstTypeD;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or an empty string.
 * The pointer stays valid until the next call into this library.
 */
const char *hfst_last_error(void);

/**
 * Library version as a static string.
 */
const char *hfst_version(void);

/**
 * Parses and validates a type D structure.
 *
 * # Safety
 * `src` is a NUL-terminated string; `out` is writable.
 */
enum HfstStatus hfst_typed_parse(const char *src, struct HfstTypeD **out);

/**
 * Type D structure of a multicurve given in curve format.
 *
 * # Safety
 * `src` is a NUL-terminated string; `out` is writable.
 */
enum HfstStatus hfst_typed_from_curve(const char *src, struct HfstTypeD **out);

/**
 * Built-in type D structure (`fig3_typeD`).
 *
 * # Safety
 * `name` is a NUL-terminated string; `out` is writable.
 */
enum HfstStatus hfst_typed_builtin(const char *name, struct HfstTypeD **out);

/**
 * # Safety
 * `p` is null or a live handle, not used afterwards.
 */
void hfst_typed_free(struct HfstTypeD *p);

/**
 * Number of generators, or 0 for a null handle.
 *
 * # Safety
 * `p` is null or a live handle.
 */
size_t hfst_typed_generator_count(const struct HfstTypeD *p);

/**
 * Parses and validates an A∞-module.
 *
 * # Safety
 * `src` is a NUL-terminated string; `out` is writable.
 */
enum HfstStatus hfst_module_parse(const char *src, struct HfstModule **out);

/**
 * Built-in module (`S_untwisted_bounded`, `S_twisted_bounded`).
 *
 * # Safety
 * `name` is a NUL-terminated string; `out` is writable.
 */
enum HfstStatus hfst_module_builtin(const char *name, struct HfstModule **out);

/**
 * # Safety
 * `m` is null or a live handle, not used afterwards.
 */
void hfst_module_free(struct HfstModule *m);

/**
 * Homology dimension of `m ⊠ p`, over F₂(t) for a Laurent module.
 *
 * # Safety
 * Handles are live; `dim` is writable.
 */
enum HfstStatus hfst_box_tensor_dim(const struct HfstModule *m,
                                    const struct HfstTypeD *p,
                                    size_t *dim);

/**
 * Homology dimension of the morphism complex `Mor(p1, p2)`.
 *
 * # Safety
 * Handles are live; `dim` is writable.
 */
enum HfstStatus hfst_mor_dim(const struct HfstTypeD *p1, const struct HfstTypeD *p2, size_t *dim);

/**
 * HFST verdict for a λ-framed type D structure. `window = 0` selects the
 * default filling window.
 *
 * # Safety
 * `p` is live; `out` is writable.
 */
enum HfstStatus hfst_is_hfst_typed(const struct HfstTypeD *p, size_t window, bool *out);

/**
 * HFST verdict for a λ-framed multicurve in curve format.
 *
 * # Safety
 * `src` is a NUL-terminated string; `out` is writable.
 */
enum HfstStatus hfst_is_hfst_curve(const char *src, size_t window, bool *out);

/**
 * Seifert classification of `base=disk|mobius; cones=...`: the verdict and
 * the distance between the rational longitude and the fiber.
 *
 * # Safety
 * `src` is a NUL-terminated string; both outputs are writable.
 */
enum HfstStatus hfst_seifert_classify(const char *src, bool *is_hfst, uint64_t *delta);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HFST_H */
