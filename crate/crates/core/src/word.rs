//! 32-bit word primitives, Merkle-Damgard padding and block/digest
//! serialization shared by every digest in this crate.
//!
//! All arithmetic is modulo 2^32. MD5 views block words and digest words
//! little-endian; the SHA family views both big-endian. The 64-bit length
//! field appended by padding follows the same split, captured by
//! [`LengthEncoding`].

use crate::DigestError;

/// 32-bit word; every register and message word is one of these.
pub type Word = u32;

/// Bytes per message block.
pub const BLOCK_BYTES: usize = 64;

/// One 512-bit message block.
pub type Block = [u8; BLOCK_BYTES];

/// Byte order used when converting between blocks/digests and words.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ByteOrder {
    /// MD5 convention: low-order bytes first.
    LittleEndian,
    /// SHA-family convention: high-order bytes first.
    BigEndian,
}

/// Encoding of the 64-bit message bit length appended by padding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LengthEncoding {
    /// MD5 appends the bit count little-endian.
    LittleEndian64,
    /// SHA-1 and SHA-192 append it big-endian.
    BigEndian64,
}

impl LengthEncoding {
    fn encode(self, bit_len: u64) -> [u8; 8] {
        match self {
            LengthEncoding::LittleEndian64 => bit_len.to_le_bytes(),
            LengthEncoding::BigEndian64 => bit_len.to_be_bytes(),
        }
    }
}

/// Circular left rotation by `n` bits, `0 <= n <= 31`.
#[inline(always)]
pub fn rotl(x: Word, n: u32) -> Word {
    debug_assert!(n < 32, "rotation count {n} out of range");
    x.rotate_left(n)
}

/// Sum of all terms modulo 2^32.
#[inline]
pub fn add32(terms: &[Word]) -> Word {
    debug_assert!(!terms.is_empty());
    terms.iter().fold(0u32, |acc, &t| acc.wrapping_add(t))
}

/// The bytes appended to a message of `byte_len` bytes: 0x80, the minimal
/// zero run, then the 64-bit bit length. Total message length afterwards is
/// a multiple of 64.
pub(crate) fn padding_suffix(byte_len: u64, bit_len: u64, enc: LengthEncoding) -> Vec<u8> {
    let rem = (byte_len % 64) as usize;
    let zeros = if rem < 56 { 55 - rem } else { 119 - rem };
    let mut suffix = Vec::with_capacity(1 + zeros + 8);
    suffix.push(0x80);
    suffix.resize(1 + zeros, 0);
    suffix.extend_from_slice(&enc.encode(bit_len));
    suffix
}

/// Pads `message` into whole blocks: message, 0x80, zero fill, 64-bit length.
///
/// Fails with [`DigestError::LengthOverflow`] if the message bit length does
/// not fit in 64 bits.
pub fn pad_message(message: &[u8], enc: LengthEncoding) -> Result<Vec<Block>, DigestError> {
    let byte_len = message.len() as u64;
    let bit_len = byte_len
        .checked_mul(8)
        .ok_or(DigestError::LengthOverflow)?;

    let mut padded = message.to_vec();
    padded.extend_from_slice(&padding_suffix(byte_len, bit_len, enc));
    debug_assert_eq!(padded.len() % BLOCK_BYTES, 0);

    Ok(padded
        .chunks_exact(BLOCK_BYTES)
        .map(|c| c.try_into().expect("chunk is exactly one block"))
        .collect())
}

/// Splits a block into 16 words under the given byte order.
pub fn words_from_block(block: &Block, order: ByteOrder) -> [Word; 16] {
    let mut words = [0u32; 16];
    for (w, chunk) in words.iter_mut().zip(block.chunks_exact(4)) {
        let bytes = chunk.try_into().expect("chunk is exactly four bytes");
        *w = match order {
            ByteOrder::LittleEndian => u32::from_le_bytes(bytes),
            ByteOrder::BigEndian => u32::from_be_bytes(bytes),
        };
    }
    words
}

/// Inverse of [`words_from_block`].
pub fn block_from_words(words: &[Word; 16], order: ByteOrder) -> Block {
    let mut block = [0u8; BLOCK_BYTES];
    for (chunk, &w) in block.chunks_exact_mut(4).zip(words.iter()) {
        chunk.copy_from_slice(&match order {
            ByteOrder::LittleEndian => w.to_le_bytes(),
            ByteOrder::BigEndian => w.to_be_bytes(),
        });
    }
    block
}

/// Serializes a chaining state (4, 5 or 6 words) into digest bytes.
pub fn serialize_digest(state: &[Word], order: ByteOrder) -> Vec<u8> {
    debug_assert!(matches!(state.len(), 4..=6));
    let mut out = Vec::with_capacity(state.len() * 4);
    for &w in state {
        out.extend_from_slice(&match order {
            ByteOrder::LittleEndian => w.to_le_bytes(),
            ByteOrder::BigEndian => w.to_be_bytes(),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rotl_identity_and_wraparound() {
        assert_eq!(rotl(0x00000001, 0), 0x00000001);
        assert_eq!(rotl(0x80000000, 1), 0x00000001);
        assert_eq!(rotl(0x12345678, 8), 0x34567812);
    }

    #[test]
    fn add32_examples() {
        assert_eq!(add32(&[0x00000000, 0xDEADBEEF]), 0xDEADBEEF);
        assert_eq!(add32(&[0xFFFFFFFF, 0x00000001]), 0x00000000);
        assert_eq!(add32(&[0x7FFFFFFF, 0x7FFFFFFF, 0x00000002]), 0x00000000);
    }

    #[test]
    fn empty_message_pads_to_one_block() {
        let blocks = pad_message(b"", LengthEncoding::BigEndian64).unwrap();
        assert_eq!(blocks.len(), 1);
        assert_eq!(blocks[0][0], 0x80);
        assert!(blocks[0][1..].iter().all(|&b| b == 0));
    }

    #[test]
    fn padding_block_boundary_at_56_bytes() {
        let blocks55 = pad_message(&[0xAA; 55], LengthEncoding::BigEndian64).unwrap();
        assert_eq!(blocks55.len(), 1);
        let blocks56 = pad_message(&[0xAA; 56], LengthEncoding::BigEndian64).unwrap();
        assert_eq!(blocks56.len(), 2);
    }

    #[test]
    fn md5_length_field_is_little_endian() {
        let blocks = pad_message(b"abc", LengthEncoding::LittleEndian64).unwrap();
        assert_eq!(blocks.len(), 1);
        assert_eq!(&blocks[0][56..], &[0x18, 0, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn sha_length_field_is_big_endian() {
        let blocks = pad_message(b"abc", LengthEncoding::BigEndian64).unwrap();
        assert_eq!(&blocks[0][56..], &[0, 0, 0, 0, 0, 0, 0, 0x18]);
    }

    #[test]
    fn block_count_matches_closed_form() {
        for len in 0..=200usize {
            let msg = vec![0x5Au8; len];
            let blocks = pad_message(&msg, LengthEncoding::BigEndian64).unwrap();
            assert_eq!(blocks.len(), (len + 9).div_ceil(64), "len {len}");
        }
    }

    #[test]
    fn word_extraction_byte_orders() {
        let mut block = [0u8; 64];
        block[0] = 0x01;
        assert_eq!(words_from_block(&block, ByteOrder::LittleEndian)[0], 0x00000001);
        assert_eq!(words_from_block(&block, ByteOrder::BigEndian)[0], 0x01000000);
    }

    #[test]
    fn digest_serialization_byte_orders() {
        let md5_state = [0x01234567u32, 0, 0, 0];
        assert_eq!(
            &serialize_digest(&md5_state, ByteOrder::LittleEndian)[..4],
            &[0x67, 0x45, 0x23, 0x01]
        );
        let sha_state = [0x67452301u32, 0, 0, 0, 0];
        assert_eq!(
            &serialize_digest(&sha_state, ByteOrder::BigEndian)[..4],
            &[0x67, 0x45, 0x23, 0x01]
        );
        for words in [4, 5, 6] {
            let state = vec![0u32; words];
            assert_eq!(serialize_digest(&state, ByteOrder::BigEndian).len(), words * 4);
        }
    }

    proptest! {
        #[test]
        fn rotl_inverse(x: u32, n in 0u32..32) {
            prop_assert_eq!(rotl(rotl(x, n), (32 - n) % 32), x);
        }

        #[test]
        fn rotl_preserves_popcount(x: u32, n in 0u32..32) {
            prop_assert_eq!(rotl(x, n).count_ones(), x.count_ones());
        }

        #[test]
        fn padding_layout(msg in proptest::collection::vec(any::<u8>(), 0..300)) {
            let blocks = pad_message(&msg, LengthEncoding::BigEndian64).unwrap();
            let flat: Vec<u8> = blocks.iter().flatten().copied().collect();
            prop_assert_eq!(flat.len() % 64, 0);
            prop_assert_eq!(&flat[..msg.len()], &msg[..]);
            prop_assert_eq!(flat[msg.len()], 0x80);
        }

        #[test]
        fn words_round_trip(words in proptest::array::uniform16(any::<u32>())) {
            for order in [ByteOrder::LittleEndian, ByteOrder::BigEndian] {
                let block = block_from_words(&words, order);
                prop_assert_eq!(words_from_block(&block, order), words);
            }
        }
    }
}
