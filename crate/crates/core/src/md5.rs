//! MD5: four rounds of sixteen steps over little-endian block words, driven
//! by the sine-derived T-table, per-round word permutations and shift
//! schedule of RFC 1321.

use std::sync::LazyLock;

use crate::engine::Engine;
use crate::word::{rotl, serialize_digest, words_from_block, Block, ByteOrder, LengthEncoding, Word};
use crate::DigestError;

/// Digest size in bytes.
pub const DIGEST_BYTES: usize = 16;

/// Registers A, B, C, D.
pub type Md5State = [Word; 4];

/// Initial chaining value.
pub const IV: Md5State = [0x67452301, 0xEFCDAB89, 0x98BADCFE, 0x10325476];

/// Per-step circular shift amounts; each round cycles four values.
pub const SHIFTS: [u32; 64] = [
    7, 12, 17, 22, 7, 12, 17, 22, 7, 12, 17, 22, 7, 12, 17, 22, // round 1
    5, 9, 14, 20, 5, 9, 14, 20, 5, 9, 14, 20, 5, 9, 14, 20, // round 2
    4, 11, 16, 23, 4, 11, 16, 23, 4, 11, 16, 23, 4, 11, 16, 23, // round 3
    6, 10, 15, 21, 6, 10, 15, 21, 6, 10, 15, 21, 6, 10, 15, 21, // round 4
];

// Frozen T[i] = floor(2^32 * |sin(i)|), i = 1..=64. The runtime table is
// recomputed from the sine formula and must agree with this, or we abort.
const T_FROZEN: [Word; 64] = [
    0xD76AA478, 0xE8C7B756, 0x242070DB, 0xC1BDCEEE, 0xF57C0FAF, 0x4787C62A, 0xA8304613, 0xFD469501,
    0x698098D8, 0x8B44F7AF, 0xFFFF5BB1, 0x895CD7BE, 0x6B901122, 0xFD987193, 0xA679438E, 0x49B40821,
    0xF61E2562, 0xC040B340, 0x265E5A51, 0xE9B6C7AA, 0xD62F105D, 0x02441453, 0xD8A1E681, 0xE7D3FBC8,
    0x21E1CDE6, 0xC33707D6, 0xF4D50D87, 0x455A14ED, 0xA9E3E905, 0xFCEFA3F8, 0x676F02D9, 0x8D2A4C8A,
    0xFFFA3942, 0x8771F681, 0x6D9D6122, 0xFDE5380C, 0xA4BEEA44, 0x4BDECFA9, 0xF6BB4B60, 0xBEBFBC70,
    0x289B7EC6, 0xEAA127FA, 0xD4EF3085, 0x04881D05, 0xD9D4D039, 0xE6DB99E5, 0x1FA27CF8, 0xC4AC5665,
    0xF4292244, 0x432AFF97, 0xAB9423A7, 0xFC93A039, 0x655B59C3, 0x8F0CCC92, 0xFFEFF47D, 0x85845DD1,
    0x6FA87E4F, 0xFE2CE6E0, 0xA3014314, 0x4E0811A1, 0xF7537E82, 0xBD3AF235, 0x2AD7D2BB, 0xEB86D391,
];

static T_TABLE: LazyLock<[Word; 64]> = LazyLock::new(|| {
    let mut table = [0u32; 64];
    for (i, entry) in table.iter_mut().enumerate() {
        *entry = t_entry(i + 1);
    }
    assert_eq!(
        table, T_FROZEN,
        "sine-derived T-table disagrees with the frozen constants"
    );
    table
});

/// T[i] = floor(2^32 * |sin(i)|) with `i` in radians, `1 <= i <= 64`.
pub fn t_entry(i: usize) -> Word {
    debug_assert!((1..=64).contains(&i));
    ((i as f64).sin().abs() * 4294967296.0).floor() as Word
}

/// The verified 64-entry T-table.
pub fn t_table() -> &'static [Word; 64] {
    &T_TABLE
}

/// Auxiliary function of the given round (1..=4).
#[inline(always)]
pub fn aux(round: usize, x: Word, y: Word, z: Word) -> Word {
    match round {
        1 => (x & y) | (!x & z),
        2 => (x & z) | (y & !z),
        3 => x ^ y ^ z,
        4 => y ^ (x | !z),
        _ => panic!("round {round} out of range"),
    }
}

/// Block-word index used at `step` (0..=15) of `round` (1..=4).
#[inline(always)]
pub fn msg_index(round: usize, step: usize) -> usize {
    debug_assert!(step < 16);
    match round {
        1 => step,
        2 => (1 + 5 * step) % 16,
        3 => (5 + 3 * step) % 16,
        4 => (7 * step) % 16,
        _ => panic!("round {round} out of range"),
    }
}

/// One step: (A', B', C', D') = (D, B + ((A + aux + x + t) <<< s), B, C).
#[inline(always)]
pub fn step(state: Md5State, x: Word, t: Word, s: u32, round: usize) -> Md5State {
    let [a, b, c, d] = state;
    let sum = a
        .wrapping_add(aux(round, b, c, d))
        .wrapping_add(x)
        .wrapping_add(t);
    [d, b.wrapping_add(rotl(sum, s)), b, c]
}

/// Runs all 64 steps over one block and adds the incoming chaining value.
pub fn compress(cv: Md5State, block: &Block) -> Md5State {
    let x = words_from_block(block, ByteOrder::LittleEndian);
    let t = t_table();
    let mut state = cv;
    for i in 0..64 {
        let round = i / 16 + 1;
        state = step(state, x[msg_index(round, i % 16)], t[i], SHIFTS[i], round);
    }
    [
        cv[0].wrapping_add(state[0]),
        cv[1].wrapping_add(state[1]),
        cv[2].wrapping_add(state[2]),
        cv[3].wrapping_add(state[3]),
    ]
}

/// Streaming MD5 context.
#[derive(Debug, Clone)]
pub struct Md5 {
    engine: Engine<4>,
}

impl Md5 {
    pub fn new() -> Self {
        Md5 { engine: Engine::new(IV) }
    }

    pub fn update(&mut self, data: &[u8]) -> Result<(), DigestError> {
        self.engine.update(data, compress)
    }

    pub fn finalize(&mut self) -> Result<[u8; DIGEST_BYTES], DigestError> {
        let state = self.engine.finalize(compress, LengthEncoding::LittleEndian64)?;
        Ok(serialize_digest(&state, ByteOrder::LittleEndian)
            .try_into()
            .expect("four words serialize to sixteen bytes"))
    }
}

impl Default for Md5 {
    fn default() -> Self {
        Md5::new()
    }
}

/// One-shot digest.
pub fn digest(message: &[u8]) -> [u8; DIGEST_BYTES] {
    let mut ctx = Md5::new();
    ctx.update(message).expect("in-memory message fits the bit counter");
    ctx.finalize().expect("fresh context")
}
