//! Test support shared by unit, integration, and acceptance tests: seeded
//! generators and law-preserving braid word rewrites. Not part of the stable
//! interface.

use rand::Rng;
use rand::RngCore;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::braid::BraidWord;

/// The deterministic RNG used across the test suites.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random word of exactly `len` letters with indices below `strands`.
pub fn random_braid_word(strands: usize, len: usize, rng: &mut dyn RngCore) -> BraidWord {
    assert!(strands >= 2);
    let letters = (0..len)
        .map(|_| {
            let idx = rng.gen_range(1..strands) as i32;
            if rng.gen::<bool>() {
                idx
            } else {
                -idx
            }
        })
        .collect();
    BraidWord::new(letters).expect("letters in range")
}

/// Apply one uniformly chosen legal rewrite, preserving the braid element:
/// insert or cancel an inverse pair, swap far commuting letters, or rotate a
/// Yang-Baxter triple. Always changes the word's letter sequence.
pub fn random_braid_rewrite(word: &BraidWord, strands: usize, rng: &mut dyn RngCore) -> BraidWord {
    #[derive(Clone, Copy)]
    enum Move {
        Insert(usize),
        Cancel(usize),
        Commute(usize),
        YangBaxter(usize),
    }

    let letters = word.letters();
    let mut moves: Vec<Move> = (0..=letters.len()).map(Move::Insert).collect();
    for i in 0..letters.len().saturating_sub(1) {
        let (a, b) = (letters[i], letters[i + 1]);
        if a == -b {
            moves.push(Move::Cancel(i));
        }
        if (a.unsigned_abs() as i64 - b.unsigned_abs() as i64).abs() >= 2 {
            moves.push(Move::Commute(i));
        }
    }
    for i in 0..letters.len().saturating_sub(2) {
        let (a, b, c) = (letters[i], letters[i + 1], letters[i + 2]);
        if a == c
            && a.signum() == b.signum()
            && (a.unsigned_abs() as i64 - b.unsigned_abs() as i64).abs() == 1
        {
            moves.push(Move::YangBaxter(i));
        }
    }

    let mut out = letters.to_vec();
    match moves[rng.gen_range(0..moves.len())] {
        Move::Insert(at) => {
            let idx = rng.gen_range(1..strands) as i32;
            let letter = if rng.gen::<bool>() { idx } else { -idx };
            out.splice(at..at, [letter, -letter]);
        }
        Move::Cancel(at) => {
            out.drain(at..at + 2);
        }
        Move::Commute(at) => out.swap(at, at + 1),
        Move::YangBaxter(at) => {
            // a b a -> b a b, same signs, adjacent indices.
            let (a, b) = (out[at], out[at + 1]);
            out[at] = b;
            out[at + 1] = a;
            out[at + 2] = b;
        }
    }
    BraidWord::new(out).expect("rewrites preserve letter bounds")
}
