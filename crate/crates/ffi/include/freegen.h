/* C interface to the freegen library. Generated by cbindgen; do not edit. */

#pragma once

/* Generated with cbindgen:0.27.0 */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Algorithm that produced a cumulant series.
 */
typedef enum FgMethod {
  /**
   * Exact summation over noncrossing partitions.
   */
  FG_METHOD_LATTICE = 0,
  /**
   * Coefficient recursion on the moment series.
   */
  FG_METHOD_RECURSION = 1,
} FgMethod;

/**
 * Status code returned by every fallible function in this interface.
 */
typedef enum FgStatus {
  /**
   * The call succeeded.
   */
  FG_STATUS_OK = 0,
  /**
   * An argument was rejected: zero generators, an order outside the
   * computed range, a malformed block type, and similar.
   */
  FG_STATUS_INVALID_ARGUMENT = 1,
  /**
   * The request mixes parities where the computation requires one.
   */
  FG_STATUS_PARITY = 2,
  /**
   * The request exceeds a hard size limit of the chosen algorithm.
   */
  FG_STATUS_SIZE_TOO_LARGE = 3,
  /**
   * The walk oracle needs more states than the supplied budget allows.
   */
  FG_STATUS_BUDGET_EXHAUSTED = 4,
  /**
   * A required pointer argument was null.
   */
  FG_STATUS_NULL_POINTER = 5,
} FgStatus;

/**
 * Word-length expansion of a power of the generating operator (opaque).
 */
typedef struct FgExpansion FgExpansion;

/**
 * Formal power series with exact integer coefficients (opaque).
 */
typedef struct FgSeries FgSeries;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Returns the library version as a static string; do not free it.
 */
const char *fg_version(void);

/**
 * Describes a status code as a static string; do not free it.
 */
const char *fg_status_describe(enum FgStatus status);

/**
 * Expands the `order`-th power of the generating operator over
 * `n_generators` free generators. On success writes a heap-allocated
 * handle to `out`; release it with `fg_expansion_free`.
 *
 * # Safety
 * `out` must be a valid pointer to writable memory.
 */
enum FgStatus fg_expand_power(uintptr_t n_generators, uintptr_t order, struct FgExpansion **out);

/**
 * Recomputes an expansion by exhaustively counting reduced words, as an
 * independent check on `fg_expand_power`. `budget` caps the number of walk
 * states (pass 0 for the built-in default). Release the handle with
 * `fg_expansion_free`.
 *
 * # Safety
 * `out` must be a valid pointer to writable memory.
 */
enum FgStatus fg_exhaustive_expansion(uintptr_t n_generators,
                                      uintptr_t order,
                                      uintptr_t budget,
                                      struct FgExpansion **out);

/**
 * Returns the power an expansion describes, or 0 for a null handle.
 *
 * # Safety
 * `expansion` must be null or a handle from this library.
 */
uintptr_t fg_expansion_order(const struct FgExpansion *expansion);

/**
 * Writes the coefficient of the given word length as a heap-allocated
 * decimal string (lengths outside the support yield "0"); release it with
 * `fg_string_free`.
 *
 * # Safety
 * `expansion` must be a handle from this library and `out` writable.
 */
enum FgStatus fg_expansion_coefficient(const struct FgExpansion *expansion,
                                       uintptr_t length,
                                       char **out);

/**
 * Writes true when the expansion's coefficients, weighted by sphere sizes,
 * sum to the full power of the graph degree.
 *
 * # Safety
 * `expansion` must be a handle from this library and `out` writable.
 */
enum FgStatus fg_expansion_mass_conserved(const struct FgExpansion *expansion, bool *out);

/**
 * Releases an expansion handle; null is ignored.
 *
 * # Safety
 * `expansion` must be null or an unreleased handle from this library.
 */
void fg_expansion_free(struct FgExpansion *expansion);

/**
 * Computes the moment series of the generating operator through
 * `max_order`. Release the handle with `fg_series_free`.
 *
 * # Safety
 * `out` must be a valid pointer to writable memory.
 */
enum FgStatus fg_moment_series(uintptr_t n_generators, uintptr_t max_order, struct FgSeries **out);

/**
 * Computes the R-transform coefficient series through `max_order`.
 * `lattice_limit` caps the order handled by summation over noncrossing
 * partitions (pass 0 for the default); beyond it the computation switches
 * to the moment recursion. `threads` sets the worker count for the lattice
 * summation (0 and 1 both mean single-threaded; the result is identical
 * for every thread count). When `out_method` is non-null it receives the
 * algorithm that ran. Release the handle with `fg_series_free`.
 *
 * # Safety
 * `out_series` must be a valid pointer to writable memory; `out_method`
 * must be null or writable.
 */
enum FgStatus fg_r_transform(uintptr_t n_generators,
                             uintptr_t max_order,
                             uintptr_t lattice_limit,
                             uintptr_t threads,
                             struct FgSeries **out_series,
                             enum FgMethod *out_method);

/**
 * Returns the highest order stored in a series, or 0 for a null handle.
 *
 * # Safety
 * `series` must be null or a handle from this library.
 */
uintptr_t fg_series_max_order(const struct FgSeries *series);

/**
 * Writes the coefficient at `order` (1-based) as a heap-allocated decimal
 * string; release it with `fg_string_free`. Fails with
 * `FG_STATUS_INVALID_ARGUMENT` for order 0 or beyond the computed range.
 *
 * # Safety
 * `series` must be a handle from this library and `out` writable.
 */
enum FgStatus fg_series_coefficient(const struct FgSeries *series, uintptr_t order, char **out);

/**
 * Releases a series handle; null is ignored.
 *
 * # Safety
 * `series` must be null or an unreleased handle from this library.
 */
void fg_series_free(struct FgSeries *series);

/**
 * Writes the `order`-th moment of the generating operator as a
 * heap-allocated decimal string; release it with `fg_string_free`.
 *
 * # Safety
 * `out` must be a valid pointer to writable memory.
 */
enum FgStatus fg_moment(uintptr_t n_generators, uintptr_t order, char **out);

/**
 * Writes the number of closed walks of the given length at the identity of
 * the Cayley graph as a heap-allocated decimal string; release it with
 * `fg_string_free`. Odd lengths yield "0".
 *
 * # Safety
 * `out` must be a valid pointer to writable memory.
 */
enum FgStatus fg_closed_walk_count(uintptr_t n_generators, uintptr_t length, char **out);

/**
 * Writes the `n`-th Catalan number as a heap-allocated decimal string;
 * release it with `fg_string_free`.
 *
 * # Safety
 * `out` must be a valid pointer to writable memory.
 */
enum FgStatus fg_catalan(uintptr_t n, char **out);

/**
 * Runs the built-in verification suite (engine versus independent walk
 * oracles, evenness, transform round trips, mass conservation) through
 * `max_order` (pass 0 for the default) and writes true when every check
 * passes.
 *
 * # Safety
 * `out_passed` must be a valid pointer to writable memory.
 */
enum FgStatus fg_verify(uintptr_t n_generators, uintptr_t max_order, bool *out_passed);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must be null or an unreleased string from this library.
 */
void fg_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus
