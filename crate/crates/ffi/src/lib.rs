//! C ABI for the diu digest library: one-shot and streaming digests, the
//! unified-datapath digest and the embedded known-answer self-test.
//!
//! Contexts are opaque handles created with [`diu_context_new`] and released
//! with [`diu_context_free`]. Every fallible call returns a [`DiuStatus`];
//! output buffers must hold at least [`diu_digest_len`] bytes. Algorithm
//! arguments take the `DiuAlgorithm` values and are validated, so an
//! out-of-range integer reports `INVALID_ALGORITHM` instead of misbehaving.

use std::os::raw::c_int;

use diu::unified::{unified_digest, Mode};
use diu::vectors::{default_vectors, run_selftest};
use diu::{digest, md5, sha, Algorithm, DigestError};

/// Algorithm selector accepted by the `alg` parameters.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiuAlgorithm {
    Md5 = 0,
    Sha1 = 1,
    Sha192 = 2,
}

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiuStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// `alg` is not a `DiuAlgorithm` value.
    InvalidAlgorithm = 2,
    /// The unified datapath has no such mode (SHA-1).
    UnsupportedMode = 3,
    /// Output buffer smaller than the digest.
    BufferTooSmall = 4,
    /// Total message length reached 2^64 bits.
    LengthOverflow = 5,
    /// The context was already finalized.
    UseAfterFinalize = 6,
    /// A known-answer vector did not match.
    SelftestFailed = 7,
}

impl From<DigestError> for DiuStatus {
    fn from(e: DigestError) -> DiuStatus {
        match e {
            DigestError::LengthOverflow => DiuStatus::LengthOverflow,
            DigestError::UseAfterFinalize => DiuStatus::UseAfterFinalize,
        }
    }
}

enum Inner {
    Md5(md5::Md5),
    Sha1(sha::sha1::Sha1),
    Sha192(sha::sha192::Sha192),
}

/// Opaque streaming digest context.
pub struct DiuContext {
    inner: Inner,
}

fn algorithm_from_int(alg: c_int) -> Option<Algorithm> {
    match alg {
        0 => Some(Algorithm::Md5),
        1 => Some(Algorithm::Sha1),
        2 => Some(Algorithm::Sha192),
        _ => None,
    }
}

/// Reconstructs a byte slice, treating (null, 0) as the empty message.
unsafe fn input_slice<'a>(ptr: *const u8, len: usize) -> Option<&'a [u8]> {
    if ptr.is_null() {
        if len == 0 {
            Some(&[])
        } else {
            None
        }
    } else {
        Some(std::slice::from_raw_parts(ptr, len))
    }
}

unsafe fn write_digest(bytes: &[u8], out: *mut u8, out_cap: usize) -> DiuStatus {
    if out.is_null() {
        return DiuStatus::NullPointer;
    }
    if out_cap < bytes.len() {
        return DiuStatus::BufferTooSmall;
    }
    std::ptr::copy_nonoverlapping(bytes.as_ptr(), out, bytes.len());
    DiuStatus::Ok
}

/// Digest size in bytes for `alg`, or 0 if `alg` is invalid.
#[no_mangle]
pub extern "C" fn diu_digest_len(alg: c_int) -> usize {
    algorithm_from_int(alg).map_or(0, Algorithm::digest_bytes)
}

/// One-shot digest of `msg` into `out`.
///
/// # Safety
/// `msg` must point to `msg_len` readable bytes (or be null with
/// `msg_len == 0`); `out` must point to `out_cap` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn diu_digest(
    alg: c_int,
    msg: *const u8,
    msg_len: usize,
    out: *mut u8,
    out_cap: usize,
) -> DiuStatus {
    let Some(algorithm) = algorithm_from_int(alg) else {
        return DiuStatus::InvalidAlgorithm;
    };
    let Some(message) = input_slice(msg, msg_len) else {
        return DiuStatus::NullPointer;
    };
    write_digest(&digest(algorithm, message), out, out_cap)
}

/// One-shot digest through the unified datapath; MD5 and SHA-192 only.
///
/// # Safety
/// Same contract as [`diu_digest`].
#[no_mangle]
pub unsafe extern "C" fn diu_unified_digest(
    alg: c_int,
    msg: *const u8,
    msg_len: usize,
    out: *mut u8,
    out_cap: usize,
) -> DiuStatus {
    let mode = match algorithm_from_int(alg) {
        None => return DiuStatus::InvalidAlgorithm,
        Some(Algorithm::Md5) => Mode::Md5,
        Some(Algorithm::Sha192) => Mode::Sha192,
        Some(Algorithm::Sha1) => return DiuStatus::UnsupportedMode,
    };
    let Some(message) = input_slice(msg, msg_len) else {
        return DiuStatus::NullPointer;
    };
    match unified_digest(mode, message) {
        Ok(bytes) => write_digest(&bytes, out, out_cap),
        Err(e) => e.into(),
    }
}

/// Allocates a streaming context, or returns null if `alg` is invalid.
#[no_mangle]
pub extern "C" fn diu_context_new(alg: c_int) -> *mut DiuContext {
    let inner = match algorithm_from_int(alg) {
        Some(Algorithm::Md5) => Inner::Md5(md5::Md5::new()),
        Some(Algorithm::Sha1) => Inner::Sha1(sha::sha1::Sha1::new()),
        Some(Algorithm::Sha192) => Inner::Sha192(sha::sha192::Sha192::new()),
        None => return std::ptr::null_mut(),
    };
    Box::into_raw(Box::new(DiuContext { inner }))
}

/// Absorbs `len` bytes into the context.
///
/// # Safety
/// `ctx` must come from [`diu_context_new`] and not yet be freed; `data`
/// must point to `len` readable bytes (or be null with `len == 0`).
#[no_mangle]
pub unsafe extern "C" fn diu_context_update(
    ctx: *mut DiuContext,
    data: *const u8,
    len: usize,
) -> DiuStatus {
    let Some(ctx) = ctx.as_mut() else {
        return DiuStatus::NullPointer;
    };
    let Some(bytes) = input_slice(data, len) else {
        return DiuStatus::NullPointer;
    };
    let result = match &mut ctx.inner {
        Inner::Md5(c) => c.update(bytes),
        Inner::Sha1(c) => c.update(bytes),
        Inner::Sha192(c) => c.update(bytes),
    };
    match result {
        Ok(()) => DiuStatus::Ok,
        Err(e) => e.into(),
    }
}

/// Pads, writes the digest into `out` and marks the context finalized. The
/// context stays allocated until [`diu_context_free`]; further updates or
/// finalizes report `USE_AFTER_FINALIZE`.
///
/// # Safety
/// `ctx` as in [`diu_context_update`]; `out` must point to `out_cap`
/// writable bytes.
#[no_mangle]
pub unsafe extern "C" fn diu_context_finalize(
    ctx: *mut DiuContext,
    out: *mut u8,
    out_cap: usize,
) -> DiuStatus {
    let Some(ctx) = ctx.as_mut() else {
        return DiuStatus::NullPointer;
    };
    // Reject a short buffer before consuming the single finalize.
    if out.is_null() {
        return DiuStatus::NullPointer;
    }
    let needed = match &ctx.inner {
        Inner::Md5(_) => md5::DIGEST_BYTES,
        Inner::Sha1(_) => sha::sha1::DIGEST_BYTES,
        Inner::Sha192(_) => sha::sha192::DIGEST_BYTES,
    };
    if out_cap < needed {
        return DiuStatus::BufferTooSmall;
    }
    let result = match &mut ctx.inner {
        Inner::Md5(c) => c.finalize().map(|d| d.to_vec()),
        Inner::Sha1(c) => c.finalize().map(|d| d.to_vec()),
        Inner::Sha192(c) => c.finalize().map(|d| d.to_vec()),
    };
    match result {
        Ok(bytes) => write_digest(&bytes, out, out_cap),
        Err(e) => e.into(),
    }
}

/// Releases a context. Null is a no-op.
///
/// # Safety
/// `ctx` must come from [`diu_context_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn diu_context_free(ctx: *mut DiuContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Runs the embedded known-answer vectors through the standalone engines
/// and the unified datapath.
#[no_mangle]
pub extern "C" fn diu_selftest() -> DiuStatus {
    if run_selftest(&default_vectors()).all_passed() {
        DiuStatus::Ok
    } else {
        DiuStatus::SelftestFailed
    }
}
