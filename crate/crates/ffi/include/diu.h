/* C interface to the diu digest library. */

#ifndef DIU_H
#define DIU_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum {
  DIU_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  DIU_STATUS_NULL_POINTER = 1,
  /**
   * `alg` is not a `DiuAlgorithm` value.
   */
  DIU_STATUS_INVALID_ALGORITHM = 2,
  /**
   * The unified datapath has no such mode (SHA-1).
   */
  DIU_STATUS_UNSUPPORTED_MODE = 3,
  /**
   * Output buffer smaller than the digest.
   */
  DIU_STATUS_BUFFER_TOO_SMALL = 4,
  /**
   * Total message length reached 2^64 bits.
   */
  DIU_STATUS_LENGTH_OVERFLOW = 5,
  /**
   * The context was already finalized.
   */
  DIU_STATUS_USE_AFTER_FINALIZE = 6,
  /**
   * A known-answer vector did not match.
   */
  DIU_STATUS_SELFTEST_FAILED = 7,
} DiuStatus;

/**
 * Algorithm selector accepted by the `alg` parameters.
 */
typedef enum {
  DIU_ALGORITHM_MD5 = 0,
  DIU_ALGORITHM_SHA1 = 1,
  DIU_ALGORITHM_SHA192 = 2,
} DiuAlgorithm;

/**
 * Opaque streaming digest context.
 */
typedef struct DiuContext DiuContext;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Digest size in bytes for `alg`, or 0 if `alg` is invalid.
 */
uintptr_t diu_digest_len(int alg);

/**
 * One-shot digest of `msg` into `out`.
 *
 * # Safety
 * `msg` must point to `msg_len` readable bytes (or be null with
 * `msg_len == 0`); `out` must point to `out_cap` writable bytes.
 */
DiuStatus diu_digest(int alg,
                     const uint8_t *msg,
                     uintptr_t msg_len,
                     uint8_t *out,
                     uintptr_t out_cap);

/**
 * One-shot digest through the unified datapath; MD5 and SHA-192 only.
 *
 * # Safety
 * Same contract as [`diu_digest`].
 */
DiuStatus diu_unified_digest(int alg,
                             const uint8_t *msg,
                             uintptr_t msg_len,
                             uint8_t *out,
                             uintptr_t out_cap);

/**
 * Allocates a streaming context, or returns null if `alg` is invalid.
 */
DiuContext *diu_context_new(int alg);

/**
 * Absorbs `len` bytes into the context.
 *
 * # Safety
 * `ctx` must come from [`diu_context_new`] and not yet be freed; `data`
 * must point to `len` readable bytes (or be null with `len == 0`).
 */
DiuStatus diu_context_update(DiuContext *ctx, const uint8_t *data, uintptr_t len);

/**
 * Pads, writes the digest into `out` and marks the context finalized. The
 * context stays allocated until [`diu_context_free`]; further updates or
 * finalizes report `USE_AFTER_FINALIZE`.
 *
 * # Safety
 * `ctx` as in [`diu_context_update`]; `out` must point to `out_cap`
 * writable bytes.
 */
DiuStatus diu_context_finalize(DiuContext *ctx, uint8_t *out, uintptr_t out_cap);

/**
 * Releases a context. Null is a no-op.
 *
 * # Safety
 * `ctx` must come from [`diu_context_new`] and not be used afterwards.
 */
void diu_context_free(DiuContext *ctx);

/**
 * Runs the embedded known-answer vectors through the standalone engines
 * and the unified datapath.
 */
DiuStatus diu_selftest(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DIU_H */
