/* C interface to the bruhat crate. See the crate README for usage. */

#ifndef BRUHAT_H
#define BRUHAT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call.
typedef enum BruhatStatus {
  BRUHAT_STATUS_OK = 0,
  // A required pointer argument was null.
  BRUHAT_STATUS_NULL_ARGUMENT = 1,
  // A string argument was not valid UTF-8.
  BRUHAT_STATUS_INVALID_UTF8 = 2,
  // An argument was malformed or out of range for the request.
  BRUHAT_STATUS_INVALID_ARGUMENT = 3,
  // The computation itself failed; see the error message.
  BRUHAT_STATUS_DOMAIN_ERROR = 4,
  // Exact integer arithmetic overflowed.
  BRUHAT_STATUS_OVERFLOW = 5,
  // The enumeration budget was exhausted before the request finished.
  BRUHAT_STATUS_BUDGET_EXCEEDED = 6,
  // An output buffer was too small; the message names the needed size.
  BRUHAT_STATUS_BUFFER_TOO_SMALL = 7,
  // A bug: an internal panic was caught at the boundary.
  BRUHAT_STATUS_INTERNAL_PANIC = 8,
} BruhatStatus;

// Opaque handle to a validated generalized Cartan matrix.
typedef struct BruhatGcm BruhatGcm;

// Outcome of comparing two cell tables.
typedef struct BruhatComparison {
  // When the counts agree everywhere, the compared depth; -1 otherwise.
  int64_t matched_through;
  // First dimension where the counts differ; -1 when they never do.
  int64_t diverge_at;
  // Whether the generators used through the full depth span isomorphic
  // subdiagrams.
  bool used_subdiagrams_isomorphic;
  // Largest dimension d with equal counts through d over isomorphic
  // used subdiagrams.
  uint64_t agreement_depth;
} BruhatComparison;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the most recent failure on this thread.
//
// The pointer stays valid until the next failing call on the same
// thread. Never freed by the caller.
const char *bruhat_last_error_message(void);

// Creates a handle from a family name like `E8` or `A3`.
//
// # Safety
// `name` must point to a NUL-terminated string and `out` to writable
// space for one pointer. On success `*out` owns the new handle.
enum BruhatStatus bruhat_gcm_from_name(const char *name, struct BruhatGcm **out);

// Creates a handle from matrix text (rank line, then one row per line).
//
// # Safety
// `text` must point to a NUL-terminated string and `out` to writable
// space for one pointer. On success `*out` owns the new handle.
enum BruhatStatus bruhat_gcm_parse_text(const char *text, struct BruhatGcm **out);

// Releases a handle. Null is accepted and ignored.
//
// # Safety
// `gcm` must be null or a pointer returned by a `bruhat_gcm_*`
// constructor that has not been freed yet.
void bruhat_gcm_free(struct BruhatGcm *gcm);

// Writes the rank of the matrix to `out`.
//
// # Safety
// `gcm` must be a live handle; `out` must be writable.
enum BruhatStatus bruhat_gcm_rank(const struct BruhatGcm *gcm, size_t *out);

// Writes whether the matrix is of finite type (symmetric matrices only).
//
// # Safety
// `gcm` must be a live handle; `out` must be writable.
enum BruhatStatus bruhat_gcm_is_finite_type(const struct BruhatGcm *gcm, bool *out);

// Counts Weyl group elements by length, writing `max_len + 1` numbers.
//
// # Safety
// `gcm` must be a live handle; `out` must point to at least `out_len`
// writable `uint64_t` entries.
enum BruhatStatus bruhat_growth_series(const struct BruhatGcm *gcm,
                                       size_t max_len,
                                       size_t budget,
                                       uint64_t *out,
                                       size_t out_len);

// Counts minimal coset representatives by length for the parabolic
// spanned by the 1-based nodes in `sub`, writing `max_len + 1` numbers.
//
// # Safety
// `gcm` must be a live handle; `sub` must point to `sub_len` readable
// entries (or be null when `sub_len` is 0); `out` must point to at
// least `out_len` writable `uint64_t` entries.
enum BruhatStatus bruhat_coset_level_sizes(const struct BruhatGcm *gcm,
                                           const uint32_t *sub,
                                           size_t sub_len,
                                           size_t max_len,
                                           size_t budget,
                                           uint64_t *out,
                                           size_t out_len);

// Tabulates Bruhat cell counts through `max_dim`, lifted through a
// cover with `sheets` sheets, writing `max_dim + 1` numbers.
//
// # Safety
// Same contracts as `bruhat_coset_level_sizes`.
enum BruhatStatus bruhat_cell_counts(const struct BruhatGcm *gcm,
                                     const uint32_t *sub,
                                     size_t sub_len,
                                     size_t max_dim,
                                     uint64_t sheets,
                                     size_t budget,
                                     uint64_t *out,
                                     size_t out_len);

// Compares the cell tables of two quotients through `max_dim` and fills
// `out` with the verdict.
//
// # Safety
// Both handles must be live; the two node lists follow the same
// contract as `bruhat_coset_level_sizes`; `out` must be writable.
enum BruhatStatus bruhat_compare(const struct BruhatGcm *left,
                                 const uint32_t *left_sub,
                                 size_t left_sub_len,
                                 const struct BruhatGcm *right,
                                 const uint32_t *right_sub,
                                 size_t right_sub_len,
                                 size_t max_dim,
                                 size_t budget,
                                 struct BruhatComparison *out);

// Deduces the homotopy profile of K(E_n) through degree `max_k` and
// returns the full JSON report (same schema as the command line) in
// `*out`. Free the string with `bruhat_string_free`.
//
// # Safety
// `out` must be writable.
enum BruhatStatus bruhat_en_profile_json(size_t n, size_t max_k, size_t budget, char **out);

// Builds the Whitehead tower of a named space (O(n), SO(n), or K(En))
// and returns the full JSON report in `*out`. Free the string with
// `bruhat_string_free`.
//
// # Safety
// `space` must point to a NUL-terminated string; `out` must be
// writable.
enum BruhatStatus bruhat_tower_json(const char *space, size_t max_k, size_t budget, char **out);

// Writes the stable orthogonal group in degree `k` (for example `C2` or
// `Z`) as a NUL-terminated string into `buf`.
//
// # Safety
// `buf` must point to at least `buf_len` writable bytes.
enum BruhatStatus bruhat_bott_group(size_t k, char *buf, size_t buf_len);

// Releases a string returned through a `char **` output. Null is
// accepted and ignored.
//
// # Safety
// `s` must be null or a string returned by this library that has not
// been freed yet.
void bruhat_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* BRUHAT_H */
