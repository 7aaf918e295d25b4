//! Known-answer vector store and self-test runner.
//!
//! Vector files are UTF-8 text, one `<alg>,<message-hex>,<digest-hex>`
//! record per line; `#` starts a comment. The shipped default set is
//! embedded in the binary and frozen: a digest change there fails the
//! build's own self-test.

use std::collections::HashSet;
use std::fmt;

use crate::unified::{unified_digest, Mode};
use crate::{digest, Algorithm};

/// Embedded default vector file.
pub const DEFAULT_VECTORS: &str = include_str!("../data/vectors.txt");

/// One frozen (algorithm, message, digest) record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TestVector {
    pub algorithm: Algorithm,
    pub message: Vec<u8>,
    pub digest: Vec<u8>,
}

/// Vector-file rejection, with the 1-based offending line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VectorError {
    Parse { line: usize, reason: String },
    DigestLengthMismatch { line: usize, algorithm: Algorithm, got: usize },
    Duplicate { line: usize },
}

impl fmt::Display for VectorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VectorError::Parse { line, reason } => write!(f, "line {line}: {reason}"),
            VectorError::DigestLengthMismatch { line, algorithm, got } => write!(
                f,
                "line {line}: {} digest must be {} bytes, got {got}",
                algorithm.name(),
                algorithm.digest_bytes()
            ),
            VectorError::Duplicate { line } => {
                write!(f, "line {line}: duplicate (algorithm, message) record")
            }
        }
    }
}

impl std::error::Error for VectorError {}

/// Parses a vector file; rejects malformed records and duplicates.
pub fn parse_vectors(text: &str) -> Result<Vec<TestVector>, VectorError> {
    let mut vectors = Vec::new();
    let mut seen: HashSet<(Algorithm, Vec<u8>)> = HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let record = raw.trim();
        if record.is_empty() || record.starts_with('#') {
            continue;
        }

        let mut fields = record.split(',');
        let (alg, msg, dig) = match (fields.next(), fields.next(), fields.next(), fields.next()) {
            (Some(a), Some(m), Some(d), None) => (a, m, d),
            _ => {
                return Err(VectorError::Parse {
                    line,
                    reason: "expected <alg>,<message-hex>,<digest-hex>".into(),
                })
            }
        };

        let algorithm: Algorithm = alg.parse().map_err(|_| VectorError::Parse {
            line,
            reason: format!("unknown algorithm {alg:?}"),
        })?;
        let message = hex::decode(msg).map_err(|e| VectorError::Parse {
            line,
            reason: format!("bad message hex: {e}"),
        })?;
        let digest = hex::decode(dig).map_err(|e| VectorError::Parse {
            line,
            reason: format!("bad digest hex: {e}"),
        })?;

        if digest.len() != algorithm.digest_bytes() {
            return Err(VectorError::DigestLengthMismatch {
                line,
                algorithm,
                got: digest.len(),
            });
        }
        if !seen.insert((algorithm, message.clone())) {
            return Err(VectorError::Duplicate { line });
        }
        vectors.push(TestVector { algorithm, message, digest });
    }
    Ok(vectors)
}

/// The embedded default vectors. The shipped file always parses.
pub fn default_vectors() -> Vec<TestVector> {
    parse_vectors(DEFAULT_VECTORS).expect("embedded vector file is well-formed")
}

/// One self-test mismatch: which vector failed and what each path produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelftestFailure {
    pub algorithm: Algorithm,
    pub message: Vec<u8>,
    pub expected: Vec<u8>,
    pub standalone: Vec<u8>,
    /// `None` for SHA-1, which has no unified mode.
    pub unified: Option<Vec<u8>>,
}

impl fmt::Display for SelftestFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({}) expected {} standalone {}",
            self.algorithm.name(),
            hex::encode(&self.message),
            hex::encode(&self.expected),
            hex::encode(&self.standalone),
        )?;
        if let Some(u) = &self.unified {
            write!(f, " unified {}", hex::encode(u))?;
        }
        Ok(())
    }
}

/// Self-test outcome over a vector set.
#[derive(Debug, Clone, Default)]
pub struct SelftestReport {
    pub passed: usize,
    pub failures: Vec<SelftestFailure>,
}

impl SelftestReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Hashes every vector with the standalone engine and, for MD5 and SHA-192,
/// the unified core as well; a vector passes only if every path matches.
pub fn run_selftest(vectors: &[TestVector]) -> SelftestReport {
    let mut report = SelftestReport::default();
    for v in vectors {
        let standalone = digest(v.algorithm, &v.message);
        let unified = match v.algorithm {
            Algorithm::Md5 => Some(unified_digest(Mode::Md5, &v.message)),
            Algorithm::Sha192 => Some(unified_digest(Mode::Sha192, &v.message)),
            Algorithm::Sha1 => None,
        }
        .map(|r| r.expect("vector messages fit the bit counter"));

        let ok = standalone == v.digest && unified.as_deref().is_none_or(|u| u == v.digest);
        if ok {
            report.passed += 1;
        } else {
            report.failures.push(SelftestFailure {
                algorithm: v.algorithm,
                message: v.message.clone(),
                expected: v.digest.clone(),
                standalone,
                unified,
            });
        }
    }
    report
}
