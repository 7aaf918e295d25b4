//! SHA-1: five working registers, 80 steps per block.

use super::{expand_schedule, ft, kt};
use crate::engine::Engine;
use crate::word::{rotl, serialize_digest, words_from_block, Block, ByteOrder, LengthEncoding, Word};
use crate::DigestError;

pub const DIGEST_BYTES: usize = 20;

pub type Sha1State = [Word; 5];

pub const IV: Sha1State = [0x67452301, 0xEFCDAB89, 0x98BADCFE, 0x10325476, 0xC3D2E1F0];

/// 80 steps of TEMP = rotl(A,5) + f_t(B,C,D) + E + W_t + K_t, then the
/// chaining addition.
pub fn compress(cv: Sha1State, block: &Block) -> Sha1State {
    let w = expand_schedule(&words_from_block(block, ByteOrder::BigEndian));
    let [mut a, mut b, mut c, mut d, mut e] = cv;
    for (t, &wt) in w.iter().enumerate() {
        let temp = rotl(a, 5)
            .wrapping_add(ft(t, b, c, d))
            .wrapping_add(e)
            .wrapping_add(wt)
            .wrapping_add(kt(t));
        e = d;
        d = c;
        c = rotl(b, 30);
        b = a;
        a = temp;
    }
    [
        cv[0].wrapping_add(a),
        cv[1].wrapping_add(b),
        cv[2].wrapping_add(c),
        cv[3].wrapping_add(d),
        cv[4].wrapping_add(e),
    ]
}

/// Streaming SHA-1 context.
#[derive(Debug, Clone)]
pub struct Sha1 {
    engine: Engine<5>,
}

impl Sha1 {
    pub fn new() -> Self {
        Sha1 { engine: Engine::new(IV) }
    }

    pub fn update(&mut self, data: &[u8]) -> Result<(), DigestError> {
        self.engine.update(data, compress)
    }

    pub fn finalize(&mut self) -> Result<[u8; DIGEST_BYTES], DigestError> {
        let state = self.engine.finalize(compress, LengthEncoding::BigEndian64)?;
        Ok(serialize_digest(&state, ByteOrder::BigEndian)
            .try_into()
            .expect("five words serialize to twenty bytes"))
    }
}

impl Default for Sha1 {
    fn default() -> Self {
        Sha1::new()
    }
}

/// One-shot digest.
pub fn digest(message: &[u8]) -> [u8; DIGEST_BYTES] {
    let mut ctx = Sha1::new();
    ctx.update(message).expect("in-memory message fits the bit counter");
    ctx.finalize().expect("fresh context")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_message_digest() {
        assert_eq!(
            hex::encode(digest(b"")),
            "da39a3ee5e6b4b0d3255bfef95601890afd80709"
        );
    }

    #[test]
    fn abc_digest() {
        assert_eq!(
            hex::encode(digest(b"abc")),
            "a9993e364706816aba3e25717850c26c9cd0d89d"
        );
    }

    #[test]
    fn two_block_digest() {
        assert_eq!(
            hex::encode(digest(b"abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq")),
            "84983e441c3bd26ebaae4aa1f95129e5e54670f1"
        );
    }

    #[test]
    fn compress_is_deterministic() {
        let block = [0xA5u8; 64];
        assert_eq!(compress(IV, &block), compress(IV, &block));
    }

    #[test]
    fn streaming_matches_one_shot() {
        let msg: Vec<u8> = (0u16..150).map(|i| i as u8).collect();
        let mut ctx = Sha1::new();
        ctx.update(&msg[..70]).unwrap();
        ctx.update(&msg[70..]).unwrap();
        assert_eq!(ctx.finalize().unwrap(), digest(&msg));
    }
}
