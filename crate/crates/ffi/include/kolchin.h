#ifndef KOLCHIN_H
#define KOLCHIN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum KolchinStatus {
  KOLCHIN_STATUS_OK = 0,
  /**
   * A precondition of the operation does not hold.
   */
  KOLCHIN_STATUS_DOMAIN_ERROR = 1,
  /**
   * A null pointer, a non-UTF-8 string or an out-of-range argument.
   */
  KOLCHIN_STATUS_INVALID_ARGUMENT = 2,
  /**
   * A configured cap was hit.
   */
  KOLCHIN_STATUS_RESOURCE_LIMIT = 3,
  /**
   * Malformed input text.
   */
  KOLCHIN_STATUS_PARSE_ERROR = 4,
  /**
   * An internal panic was caught at the boundary.
   */
  KOLCHIN_STATUS_PANIC = 5,
} KolchinStatus;

/**
 * A subset of `N^m`, kept as its generators.
 */
typedef struct KolchinExpSet KolchinExpSet;

/**
 * A numerical polynomial.
 */
typedef struct KolchinPoly KolchinPoly;

/**
 * A linear constant-coefficient differential system.
 */
typedef struct KolchinSystem KolchinSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. The pointer stays
 * valid until the next call into this library from the same thread.
 */
const char *kolchin_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library and not yet freed.
 */
void kolchin_string_free(char *s);

/**
 * Parses a polynomial from JSON or a comma-separated list of standard
 * coefficients, highest first (`"0,2,-1"`).
 *
 * # Safety
 * `text` must be a valid C string; `out` must be writable.
 */
enum KolchinStatus kolchin_poly_parse(const char *text, struct KolchinPoly **out);

/**
 * Builds a polynomial from `len` standard coefficients, highest first.
 *
 * # Safety
 * `coeffs` must point to `len` readable integers; `out` must be writable.
 */
enum KolchinStatus kolchin_poly_from_coeffs(const int64_t *coeffs,
                                            uintptr_t len,
                                            struct KolchinPoly **out);

/**
 * Interpolates the polynomial of degree at most `m` through `values[k]` at
 * `start + k`.
 *
 * # Safety
 * `values` must point to `len` readable integers; `out` must be writable.
 */
enum KolchinStatus kolchin_poly_interpolate(const int64_t *values,
                                            uintptr_t len,
                                            uint64_t start,
                                            uintptr_t m,
                                            struct KolchinPoly **out);

/**
 * # Safety
 * `p` must be NULL or a handle from this library not yet freed.
 */
void kolchin_poly_free(struct KolchinPoly *p);

/**
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum KolchinStatus kolchin_poly_degree_bound(const struct KolchinPoly *p, uintptr_t *out);

/**
 * Value at `s` as a decimal string.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum KolchinStatus kolchin_poly_evaluate(const struct KolchinPoly *p, uint64_t s, char **out);

/**
 * Eventual comparison: writes -1, 0 or 1.
 *
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum KolchinStatus kolchin_poly_compare(const struct KolchinPoly *a,
                                        const struct KolchinPoly *b,
                                        int32_t *out);

/**
 * JSON form `{"m": m, "standard_coeffs": [...]}`.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum KolchinStatus kolchin_poly_to_json(const struct KolchinPoly *p, char **out);

/**
 * Human-readable form such as `2*t + 1`.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum KolchinStatus kolchin_poly_to_string(const struct KolchinPoly *p, char **out);

/**
 * Parses an exponent set, one generator per line. `m = 0` infers the
 * ambient dimension from the tuples.
 *
 * # Safety
 * `text` must be a valid C string; `out` must be writable.
 */
enum KolchinStatus kolchin_expset_parse(const char *text, uintptr_t m, struct KolchinExpSet **out);

/**
 * # Safety
 * `e` must be NULL or a handle from this library not yet freed.
 */
void kolchin_expset_free(struct KolchinExpSet *e);

/**
 * Dimension polynomial of the set.
 *
 * # Safety
 * `e` must be a live handle; `out` must be writable.
 */
enum KolchinStatus kolchin_expset_omega(const struct KolchinExpSet *e, struct KolchinPoly **out);

/**
 * # Safety
 * `e` must be a live handle; `out` must be writable.
 */
enum KolchinStatus kolchin_expset_stability_bound(const struct KolchinExpSet *e, uint64_t *out);

/**
 * Number of vectors of order at most `s` outside the set, by enumeration
 * (`inclusion_exclusion = false`) or by inclusion-exclusion.
 *
 * # Safety
 * `e` must be a live handle; `out` must be writable.
 */
enum KolchinStatus kolchin_expset_volume(const struct KolchinExpSet *e,
                                         uint64_t s,
                                         bool inclusion_exclusion,
                                         char **out);

/**
 * Parses a system in the `m = ..`, `n = ..`, `eq: ..` format.
 *
 * # Safety
 * `text` must be a valid C string; `out` must be writable.
 */
enum KolchinStatus kolchin_system_parse(const char *text, struct KolchinSystem **out);

/**
 * # Safety
 * `sys` must be NULL or a handle from this library not yet freed.
 */
void kolchin_system_free(struct KolchinSystem *sys);

/**
 * Kolchin polynomial from the leaders of the Groebner basis.
 *
 * # Safety
 * `sys` must be a live handle; `out` must be writable.
 */
enum KolchinStatus kolchin_system_omega(const struct KolchinSystem *sys, struct KolchinPoly **out);

/**
 * Kolchin polynomial from sampled prolongation dimensions.
 *
 * # Safety
 * `sys` must be a live handle; `out` must be writable.
 */
enum KolchinStatus kolchin_system_omega_via_prolongation(const struct KolchinSystem *sys,
                                                         struct KolchinPoly **out);

/**
 * # Safety
 * `sys` must be a live handle; `out` must be writable.
 */
enum KolchinStatus kolchin_system_prolongation_dimension(const struct KolchinSystem *sys,
                                                         uint64_t s,
                                                         uint64_t margin,
                                                         uint64_t *out);

/**
 * Whether the Kolchin polynomial eventually dominates or equals `p`.
 *
 * # Safety
 * `sys`, `p` must be live handles; `out` must be writable.
 */
enum KolchinStatus kolchin_system_omega_at_least(const struct KolchinSystem *sys,
                                                 const struct KolchinPoly *p,
                                                 bool *out);

/**
 * Whether the Kolchin polynomial equals `p`.
 *
 * # Safety
 * `sys`, `p` must be live handles; `out` must be writable.
 */
enum KolchinStatus kolchin_system_omega_equals(const struct KolchinSystem *sys,
                                               const struct KolchinPoly *p,
                                               bool *out);

/**
 * JSON object with `C`, `D`, `s0`, `s1` and `coeff_bound` as decimal strings.
 *
 * # Safety
 * `out` must be writable.
 */
enum KolchinStatus kolchin_bounds_json(uint64_t r, uint64_t m, uint64_t n, char **out);

/**
 * Compares two monomials such as `d[1,0]x1` under the orderly ranking;
 * writes -1, 0 or 1.
 *
 * # Safety
 * `a`, `b` must be valid C strings; `out` must be writable.
 */
enum KolchinStatus kolchin_rank_compare(const char *a, const char *b, int32_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KOLCHIN_H */
