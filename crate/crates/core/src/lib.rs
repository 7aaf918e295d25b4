//! Data-integrity digests: MD5, SHA-1 and SHA-192, plus a software model of
//! a unified datapath that runs MD5 and SHA-192 on one shared register file
//! and is verified bit-identical to the standalone engines.
//!
//! One-shot hashing goes through [`digest`]; each algorithm module also
//! exposes a streaming context (`new` / `update` / `finalize`) and its raw
//! compression function. The [`unified`] module holds the mode-select core,
//! per-step tracing and the functional-unit resource model; [`vectors`]
//! carries the frozen known-answer suite behind `diu selftest`.
//!
//! MD5 and SHA-1 are implemented for interoperability and comparison, not
//! for new designs that need collision resistance.

use std::fmt;
use std::str::FromStr;

mod engine;
pub mod md5;
pub mod sha;
pub mod unified;
pub mod vectors;
pub mod word;

/// The three digest algorithms in this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Md5,
    Sha1,
    Sha192,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Md5 => "md5",
            Algorithm::Sha1 => "sha1",
            Algorithm::Sha192 => "sha192",
        }
    }

    /// Digest size: 16, 20 or 24 bytes.
    pub fn digest_bytes(self) -> usize {
        match self {
            Algorithm::Md5 => md5::DIGEST_BYTES,
            Algorithm::Sha1 => sha::sha1::DIGEST_BYTES,
            Algorithm::Sha192 => sha::sha192::DIGEST_BYTES,
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = UnknownAlgorithm;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "md5" => Ok(Algorithm::Md5),
            "sha1" => Ok(Algorithm::Sha1),
            "sha192" => Ok(Algorithm::Sha192),
            _ => Err(UnknownAlgorithm),
        }
    }
}

/// Algorithm name was not one of `md5`, `sha1`, `sha192`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnknownAlgorithm;

impl fmt::Display for UnknownAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unknown algorithm (expected md5, sha1 or sha192)")
    }
}

impl std::error::Error for UnknownAlgorithm {}

/// Streaming-context failures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DigestError {
    /// The cumulative message length reached 2^64 bits.
    LengthOverflow,
    /// The context was updated or finalized after finalize.
    UseAfterFinalize,
}

impl fmt::Display for DigestError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DigestError::LengthOverflow => f.write_str("message length reached 2^64 bits"),
            DigestError::UseAfterFinalize => f.write_str("context was already finalized"),
        }
    }
}

impl std::error::Error for DigestError {}

/// One-shot digest of `message` under `algorithm`.
pub fn digest(algorithm: Algorithm, message: &[u8]) -> Vec<u8> {
    match algorithm {
        Algorithm::Md5 => md5::digest(message).to_vec(),
        Algorithm::Sha1 => sha::sha1::digest(message).to_vec(),
        Algorithm::Sha192 => sha::sha192::digest(message).to_vec(),
    }
}
