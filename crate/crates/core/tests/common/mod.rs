//! Shared test helpers: an independent straight-line SHA-192 reference used
//! as a differential oracle, plus small utilities.

#![allow(dead_code)]
// The reference deliberately spells out rotation and indexing instead of
// using the library idioms it is checking.
#![allow(clippy::manual_rotate, clippy::needless_range_loop)]

/// Straight-line SHA-192 written sequentially and kept apart from the
/// library's compression path: explicit padding loop, growing schedule
/// vector, full seven-term second accumulator and one-by-one register
/// assignments.
pub fn sha192_reference(message: &[u8]) -> [u8; 24] {
    fn rot(x: u32, n: u32) -> u32 {
        (x << n) | (x >> (32 - n))
    }
    fn func(t: usize, b: u32, c: u32, d: u32) -> u32 {
        if t <= 19 {
            (b & c) | (!b & d)
        } else if t <= 39 {
            b ^ c ^ d
        } else if t <= 59 {
            (b & c) | (b & d) | (c & d)
        } else {
            b ^ c ^ d
        }
    }
    fn konst(t: usize) -> u32 {
        if t <= 19 {
            0x5A827999
        } else if t <= 39 {
            0x6ED9EBA1
        } else if t <= 59 {
            0x8F1BBCDC
        } else {
            0xCA62C1D6
        }
    }

    let mut h: [u32; 6] = [
        0x67452301, 0xEFCDAB89, 0x98BADCFE, 0x10325476, 0xC3D2E1F0, 0xF9B2D834,
    ];

    let mut m = message.to_vec();
    let bit_len = (message.len() as u64) * 8;
    m.push(0x80);
    while m.len() % 64 != 56 {
        m.push(0);
    }
    m.extend_from_slice(&bit_len.to_be_bytes());

    for block in m.chunks_exact(64) {
        let mut w: Vec<u32> = (0..16)
            .map(|i| u32::from_be_bytes(block[i * 4..i * 4 + 4].try_into().unwrap()))
            .collect();
        for t in 16..80 {
            w.push(rot(w[t - 3] ^ w[t - 8] ^ w[t - 14] ^ w[t - 16], 1));
        }

        let mut a = h[0];
        let mut b = h[1];
        let mut c = h[2];
        let mut d = h[3];
        let mut e = h[4];
        let mut f = h[5];

        for t in 0..80 {
            let temp1 = rot(a, 5)
                .wrapping_add(func(t, b, c, d))
                .wrapping_add(e)
                .wrapping_add(w[t])
                .wrapping_add(konst(t));
            let temp2 = rot(a, 5)
                .wrapping_add(a)
                .wrapping_add(func(t, b, c, d))
                .wrapping_add(e)
                .wrapping_add(w[t])
                .wrapping_add(konst(t))
                .wrapping_add(f);
            e = d;
            d = c;
            c = rot(b, 30);
            b = rot(a, 15);
            f = temp1;
            a = temp2;
        }

        h[0] = h[0].wrapping_add(a);
        h[1] = h[1].wrapping_add(b);
        h[2] = h[2].wrapping_add(c);
        h[3] = h[3].wrapping_add(d);
        h[4] = h[4].wrapping_add(e);
        h[5] = h[5].wrapping_add(f);
    }

    let mut out = [0u8; 24];
    for (chunk, word) in out.chunks_exact_mut(4).zip(h) {
        chunk.copy_from_slice(&word.to_be_bytes());
    }
    out
}

/// Bits differing between two equal-length digests.
pub fn hamming_distance(a: &[u8], b: &[u8]) -> u32 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x ^ y).count_ones()).sum()
}
