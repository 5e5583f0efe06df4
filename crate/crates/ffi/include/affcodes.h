#ifndef AFFCODES_H
#define AFFCODES_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Weight-distribution method for [`aff_weights_compute`].
 */
typedef enum AffMethod {
  AFF_METHOD_BRUTE = 0,
  AFF_METHOD_CLOSED = 1,
  AFF_METHOD_MOMENTS = 2,
} AffMethod;

/**
 * Result of every fallible call.
 */
typedef enum AffStatus {
  AFF_STATUS_OK = 0,
  AFF_STATUS_NULL_POINTER = 1,
  AFF_STATUS_INVALID_ARGUMENT = 2,
  /**
   * An enumeration or size limit would be exceeded.
   */
  AFF_STATUS_RESOURCE_BOUND = 3,
  /**
   * The requested method does not apply to these parameters.
   */
  AFF_STATUS_NOT_APPLICABLE = 4,
  /**
   * A value does not fit the output type.
   */
  AFF_STATUS_OVERFLOW = 5,
  /**
   * A panic was caught at the boundary.
   */
  AFF_STATUS_INTERNAL = 6,
} AffStatus;

/**
 * A constructed linear code.
 */
typedef struct AffCode AffCode;

/**
 * A finite field GF(p^m) with the Conway modulus.
 */
typedef struct AffField AffField;

/**
 * A weight distribution, as (weight, count) entries in increasing weight.
 */
typedef struct AffWeights AffWeights;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failing call on this thread; empty if none. Valid until the next
 * failing call on the same thread.
 */
const char *aff_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *aff_version(void);

/**
 * Creates GF(p^m) with the Conway modulus.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum AffStatus aff_field_new(uint32_t p, uint32_t m, struct AffField **out);

/**
 * Releases a field; null is ignored.
 *
 * # Safety
 * `field` must be null or a handle from [`aff_field_new`] not yet freed.
 */
void aff_field_free(struct AffField *field);

/**
 * Number of elements, or 0 for a null handle.
 *
 * # Safety
 * `field` must be null or a live handle.
 */
uint32_t aff_field_order(const struct AffField *field);

/**
 * `*out = a + b`.
 *
 * # Safety
 * `field` must be a live handle and `out` writable.
 */
enum AffStatus aff_field_add(const struct AffField *field, uint32_t a, uint32_t b, uint32_t *out);

/**
 * `*out = a * b`.
 *
 * # Safety
 * `field` must be a live handle and `out` writable.
 */
enum AffStatus aff_field_mul(const struct AffField *field, uint32_t a, uint32_t b, uint32_t *out);

/**
 * `*out = a^-1`; fails for zero.
 *
 * # Safety
 * `field` must be a live handle and `out` writable.
 */
enum AffStatus aff_field_inv(const struct AffField *field, uint32_t a, uint32_t *out);

/**
 * `*out` = index of the generator raised to `k` (negative exponents allowed).
 *
 * # Safety
 * `field` must be a live handle and `out` writable.
 */
enum AffStatus aff_field_alpha_pow(const struct AffField *field, int64_t k, uint32_t *out);

/**
 * Roots in GF(q) of `constant + sum coeffs[i] x^(p^i)`.
 *
 * # Safety
 * `coeffs` must point to `len` readable values and `out` must be writable.
 */
enum AffStatus aff_root_count(const struct AffField *field,
                              uint32_t constant,
                              const uint32_t *coeffs,
                              size_t len,
                              uint64_t *out);

/**
 * Extended code of length p^m spanned by 1 and x^(p^i), i = 0..=h.
 *
 * # Safety
 * `out` must be writable.
 */
enum AffStatus aff_code_extended(uint32_t p, uint32_t m, uint32_t h, struct AffCode **out);

/**
 * Unit-circle code of length p^m + 1 over GF(p^(2m)).
 *
 * # Safety
 * `out` must be writable.
 */
enum AffStatus aff_code_circle(uint32_t p, uint32_t m, uint32_t s, struct AffCode **out);

/**
 * Releases a code; null is ignored.
 *
 * # Safety
 * `code` must be null or a live handle.
 */
void aff_code_free(struct AffCode *code);

/**
 * Length, dimension and alphabet size. Any output pointer may be null.
 *
 * # Safety
 * `code` must be a live handle; non-null outputs must be writable.
 */
enum AffStatus aff_code_params(const struct AffCode *code,
                               size_t *n,
                               size_t *k,
                               uint64_t *alphabet);

/**
 * Encodes a message of `k` symbols into `word` of `n` symbols.
 *
 * # Safety
 * `msg` must hold `k` readable values and `word` `n` writable ones.
 */
enum AffStatus aff_code_encode(const struct AffCode *code,
                               const uint32_t *msg,
                               size_t k,
                               uint32_t *word,
                               size_t n);

/**
 * Weight distribution of `code` by `method` with `workers` threads (0 means 1).
 *
 * # Safety
 * `code` must be a live handle and `out` writable.
 */
enum AffStatus aff_weights_compute(const struct AffCode *code,
                                   enum AffMethod method,
                                   uint32_t workers,
                                   struct AffWeights **out);

/**
 * Number of (weight, count) entries, including weight 0; 0 for a null handle.
 *
 * # Safety
 * `w` must be null or a live handle.
 */
size_t aff_weights_len(const struct AffWeights *w);

/**
 * Entry `i` in increasing weight order.
 *
 * # Safety
 * `w` must be a live handle; `weight` and `count` writable.
 */
enum AffStatus aff_weights_entry(const struct AffWeights *w,
                                 size_t i,
                                 uint32_t *weight,
                                 uint64_t *count);

/**
 * Releases a distribution; null is ignored.
 *
 * # Safety
 * `w` must be null or a live handle.
 */
void aff_weights_free(struct AffWeights *w);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* AFFCODES_H */
