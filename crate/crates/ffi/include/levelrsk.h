#ifndef LEVELRSK_H
#define LEVELRSK_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LrskStatus {
  LRSK_STATUS_OK = 0,
  LRSK_STATUS_NULL_POINTER = 1,
  LRSK_STATUS_INVALID_UTF8 = 2,
  LRSK_STATUS_PARSE = 3,
  LRSK_STATUS_INVALID = 4,
  LRSK_STATUS_UNSUPPORTED = 5,
  LRSK_STATUS_VERIFICATION_FAILED = 6,
  LRSK_STATUS_PANIC = 7,
} LrskStatus;

typedef enum LrskKind {
  LRSK_KIND_MULTICOMPOSITION = 0,
  LRSK_KIND_MULTIPARTITION = 1,
  LRSK_KIND_PARMAT = 2,
  LRSK_KIND_BCM = 3,
  LRSK_KIND_FLAGGED_BIWORD = 4,
  LRSK_KIND_TABLEAU_PAIR = 5,
  LRSK_KIND_MULTITABLEAU = 6,
} LrskKind;

/**
 * A parsed, validated document.
 */
typedef struct LrskDocument LrskDocument;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL. The pointer
 * stays valid until the next `lrsk_*` call on the same thread.
 */
const char *lrsk_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *lrsk_version(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void lrsk_string_free(char *s);

/**
 * # Safety
 * `doc` must be NULL or a handle returned by this library, not yet freed.
 */
void lrsk_document_free(struct LrskDocument *doc);

/**
 * Parses and validates a JSON document.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum LrskStatus lrsk_document_parse(const char *text, struct LrskDocument **out);

/**
 * Canonical multi-line JSON for `doc`.
 *
 * # Safety
 * `doc` must be a live handle; `out` must be writable.
 */
enum LrskStatus lrsk_document_serialize(const struct LrskDocument *doc, char **out);

/**
 * # Safety
 * `doc` must be a live handle; `out` must be writable.
 */
enum LrskStatus lrsk_document_kind(const struct LrskDocument *doc, enum LrskKind *out);

/**
 * # Safety
 * `doc` must be a live handle; `out` must be writable.
 */
enum LrskStatus lrsk_document_level(const struct LrskDocument *doc, size_t *out);

/**
 * The correspondence: a parmat document to its tableau pair.
 *
 * # Safety
 * `parmat` must be a live handle; `out` must be writable.
 */
enum LrskStatus lrsk_forward(const struct LrskDocument *parmat, struct LrskDocument **out);

/**
 * Inverse of [`lrsk_forward`].
 *
 * # Safety
 * `pair` must be a live handle; `out` must be writable.
 */
enum LrskStatus lrsk_inverse(const struct LrskDocument *pair, struct LrskDocument **out);

/**
 * Moves `doc` along parmat, bcm, flagged-biword, tableau-pair to `to`.
 *
 * # Safety
 * `doc` must be a live handle; `out` must be writable.
 */
enum LrskStatus lrsk_convert(const struct LrskDocument *doc,
                             enum LrskKind to,
                             struct LrskDocument **out);

/**
 * Number of parmat elements with row sums `nu` and column sums `mu`, both
 * multicomposition documents.
 *
 * # Safety
 * `nu` and `mu` must be live handles; `out` must be writable.
 */
enum LrskStatus lrsk_count_parmat(const struct LrskDocument *nu,
                                  const struct LrskDocument *mu,
                                  uint64_t *out);

/**
 * Number of flagged semistandard multitableaux of shape `shape` (a
 * multipartition document) and content `mu`.
 *
 * # Safety
 * `shape` and `mu` must be live handles; `out` must be writable.
 */
enum LrskStatus lrsk_count_sst(const struct LrskDocument *shape,
                               const struct LrskDocument *mu,
                               uint64_t *out);

/**
 * Runs the exhaustive verification within the given budget and writes the
 * JSON report to `report` (also on verification failure).
 *
 * # Safety
 * `report` must be writable.
 */
enum LrskStatus lrsk_verify(uint32_t max_n, size_t max_level, size_t max_parts, char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LEVELRSK_H */
