//! SHA-1 and SHA-192. Both digests share the per-step logical functions,
//! the four constant bands and the 80-word message schedule; they differ in
//! register count and step dataflow.

pub mod sha1;
pub mod sha192;

use crate::word::{rotl, Word};

/// Steps per block for both family members.
pub const STEPS: usize = 80;

/// Step function f_t: choose, parity, majority, parity over 20-step bands.
#[inline(always)]
pub fn ft(t: usize, b: Word, c: Word, d: Word) -> Word {
    debug_assert!(t < STEPS);
    match t / 20 {
        0 => (b & c) | (!b & d),
        1 | 3 => b ^ c ^ d,
        2 => (b & c) | (b & d) | (c & d),
        _ => unreachable!(),
    }
}

/// Step constant K_t over the same 20-step bands.
#[inline(always)]
pub fn kt(t: usize) -> Word {
    debug_assert!(t < STEPS);
    match t / 20 {
        0 => 0x5A827999,
        1 => 0x6ED9EBA1,
        2 => 0x8F1BBCDC,
        _ => 0xCA62C1D6,
    }
}

/// Expands 16 block words into the 80-word schedule:
/// W_t = rotl(W_{t-3} ^ W_{t-8} ^ W_{t-14} ^ W_{t-16}, 1) for t >= 16.
pub fn expand_schedule(block_words: &[Word; 16]) -> [Word; STEPS] {
    let mut w = [0u32; STEPS];
    w[..16].copy_from_slice(block_words);
    for t in 16..STEPS {
        w[t] = rotl(w[t - 3] ^ w[t - 8] ^ w[t - 14] ^ w[t - 16], 1);
    }
    w
}
