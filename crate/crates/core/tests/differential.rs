//! Differential checks against the straight-line reference and brute-force
//! recomputations, on top of the frozen vectors.

mod common;

use rand::rngs::StdRng;
use rand::{Rng, RngCore, SeedableRng};

use diu::sha::{expand_schedule, sha192};
use diu::vectors::default_vectors;
use diu::word::{words_from_block, ByteOrder};
use diu::Algorithm;

#[test]
fn sha192_engine_matches_reference_on_random_messages() {
    let mut rng = StdRng::seed_from_u64(0xD1FF_0001);
    let mut buf = vec![0u8; 512];
    for _ in 0..1_000 {
        let len = rng.random_range(0..=512);
        rng.fill_bytes(&mut buf[..len]);
        let msg = &buf[..len];
        assert_eq!(sha192::digest(msg), common::sha192_reference(msg), "len {len}");
    }
}

#[test]
fn sha192_reference_agrees_with_frozen_vectors() {
    for v in default_vectors() {
        if v.algorithm == Algorithm::Sha192 {
            assert_eq!(&common::sha192_reference(&v.message)[..], &v.digest[..]);
        }
    }
}

#[test]
fn schedule_recurrence_on_1000_random_blocks() {
    let mut rng = StdRng::seed_from_u64(0xD1FF_0002);
    for _ in 0..1_000 {
        let mut block = [0u8; 64];
        rng.fill_bytes(&mut block);
        let words = words_from_block(&block, ByteOrder::BigEndian);
        let w = expand_schedule(&words);

        let mut v: Vec<u32> = words.to_vec();
        for t in 16..80 {
            let x = v[t - 3] ^ v[t - 8] ^ v[t - 14] ^ v[t - 16];
            v.push(x.rotate_left(1));
        }
        assert_eq!(&w[..], &v[..]);
    }
}
