//! SHA-192: six working registers and a second accumulator path. Each step
//! computes TEMP1 like SHA-1, folds A and F into TEMP2, and rotates A by 15
//! into B; the digest is six words (192 bits).

use super::{expand_schedule, ft, kt};
use crate::engine::Engine;
use crate::word::{rotl, serialize_digest, words_from_block, Block, ByteOrder, LengthEncoding, Word};
use crate::DigestError;

pub const DIGEST_BYTES: usize = 24;

/// Registers A, B, C, D, E, F.
pub type Sha192State = [Word; 6];

pub const IV: Sha192State = [
    0x67452301, 0xEFCDAB89, 0x98BADCFE, 0x10325476, 0xC3D2E1F0, 0xF9B2D834,
];

/// One step. With every right-hand side reading the incoming registers:
///
/// TEMP1 = rotl(A,5) + f_t(B,C,D) + E + w + k
/// TEMP2 = TEMP1 + A + F
/// (A', B', C', D', E', F') = (TEMP2, rotl(A,15), rotl(B,30), C, D, TEMP1)
#[inline(always)]
pub fn step(regs: Sha192State, w: Word, k: Word, t: usize) -> Sha192State {
    let [a, b, c, d, e, f] = regs;
    let temp1 = rotl(a, 5)
        .wrapping_add(ft(t, b, c, d))
        .wrapping_add(e)
        .wrapping_add(w)
        .wrapping_add(k);
    let temp2 = temp1.wrapping_add(a).wrapping_add(f);
    [temp2, rotl(a, 15), rotl(b, 30), c, d, temp1]
}

/// 80 steps over the expanded schedule, then the six-word chaining addition.
pub fn compress(cv: Sha192State, block: &Block) -> Sha192State {
    let w = expand_schedule(&words_from_block(block, ByteOrder::BigEndian));
    let mut regs = cv;
    for (t, &wt) in w.iter().enumerate() {
        regs = step(regs, wt, kt(t), t);
    }
    [
        cv[0].wrapping_add(regs[0]),
        cv[1].wrapping_add(regs[1]),
        cv[2].wrapping_add(regs[2]),
        cv[3].wrapping_add(regs[3]),
        cv[4].wrapping_add(regs[4]),
        cv[5].wrapping_add(regs[5]),
    ]
}

/// Streaming SHA-192 context.
#[derive(Debug, Clone)]
pub struct Sha192 {
    engine: Engine<6>,
}

impl Sha192 {
    pub fn new() -> Self {
        Sha192 { engine: Engine::new(IV) }
    }

    pub fn update(&mut self, data: &[u8]) -> Result<(), DigestError> {
        self.engine.update(data, compress)
    }

    pub fn finalize(&mut self) -> Result<[u8; DIGEST_BYTES], DigestError> {
        let state = self.engine.finalize(compress, LengthEncoding::BigEndian64)?;
        Ok(serialize_digest(&state, ByteOrder::BigEndian)
            .try_into()
            .expect("six words serialize to twenty-four bytes"))
    }
}

impl Default for Sha192 {
    fn default() -> Self {
        Sha192::new()
    }
}

/// One-shot digest.
pub fn digest(message: &[u8]) -> [u8; DIGEST_BYTES] {
    let mut ctx = Sha192::new();
    ctx.update(message).expect("in-memory message fits the bit counter");
    ctx.finalize().expect("fresh context")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::pad_message;
    use proptest::prelude::*;

    #[test]
    fn step_zero_fixed_point() {
        assert_eq!(step([0; 6], 0, 0, 25), [0; 6]);
    }

    #[test]
    fn step_single_step_kat() {
        // Frozen from the straight-line transcription oracle: IV registers,
        // w = 0, k = 0x5A827999, t = 0.
        let out = step(IV, 0, 0x5A827999, 0);
        assert_eq!(
            out,
            [0x00AC93E8, 0x9180B3A2, 0x7BF36AE2, 0x98BADCFE, 0x10325476, 0x9FB498B3]
        );
    }

    #[test]
    fn empty_message_digest_kat() {
        assert_eq!(
            hex::encode(digest(b"")),
            "3decc0bf73d424c70118692b42e60e903d9d344e934e598f"
        );
    }

    #[test]
    fn abc_digest_kat() {
        assert_eq!(
            hex::encode(digest(b"abc")),
            "499d0b3e779ef9645a03fef910492e571ccc0f0f9a95371e"
        );
    }

    #[test]
    fn empty_message_block_is_not_a_fixed_point() {
        let blocks = pad_message(b"", LengthEncoding::BigEndian64).unwrap();
        assert_ne!(compress(IV, &blocks[0]), IV);
    }

    #[test]
    fn digest_is_24_bytes_for_any_input() {
        for len in [0usize, 1, 63, 64, 65, 200] {
            assert_eq!(digest(&vec![0x7Eu8; len]).len(), DIGEST_BYTES);
        }
    }

    #[test]
    fn streaming_matches_one_shot() {
        let msg: Vec<u8> = (0u16..300).map(|i| (i * 7) as u8).collect();
        let mut ctx = Sha192::new();
        for chunk in msg.chunks(11) {
            ctx.update(chunk).unwrap();
        }
        assert_eq!(ctx.finalize().unwrap(), digest(&msg));
    }

    proptest! {
        #[test]
        fn step_dataflow(regs in proptest::array::uniform6(any::<u32>()),
                         w: u32, t in 0usize..80) {
            let k = kt(t);
            let [a, b, c, d, _e, f] = regs;
            let out = step(regs, w, k, t);
            // Structural wiring, independent of the arithmetic.
            prop_assert_eq!(out[1], a.rotate_left(15));
            prop_assert_eq!(out[2], b.rotate_left(30));
            prop_assert_eq!(out[3], c);
            prop_assert_eq!(out[4], d);
            // TEMP2 - TEMP1 = A + F (mod 2^32)
            prop_assert_eq!(out[0].wrapping_sub(out[5]), a.wrapping_add(f));
        }
    }
}
