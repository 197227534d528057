//! Left canonical (Garside) normal forms in the braid group on a fixed
//! strand count.
//!
//! Every braid on `n` strands factors uniquely as `D^inf A_1 A_2 ... A_k`
//! where `D` is the positive half twist, each `A_j` is a permutation braid
//! that is neither trivial nor `D`, and each adjacent pair is left weighted:
//! every generator that starts `A_(j+1)` already finishes `A_j`. Two words
//! denote the same braid exactly when these data agree, which is what
//! [`braid_equal`] decides.
//!
//! Permutation braids are identified with their permutations throughout. The
//! composition convention matches [`crate::perm`]: `a.then(b)` is the
//! permutation of the braid `A B`. Under it,
//!
//! - `sigma_i` left divides the permutation braid of `pi` iff `i` is a
//!   descent of `pi` (the strands starting at `i`, `i + 1` cross), and
//! - `sigma_i` right divides it iff `i` is a descent of `pi^-1` (the strands
//!   ending at `i`, `i + 1` cross).
//!
//! Those descent sets are the starting and finishing sets driving the
//! normalization sweep.

use crate::braid::word::BraidWord;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Strand cap; canonical encodings store one byte per strand image.
pub const MAX_BRAID_STRANDS: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    strands: usize,
    inf: i64,
    factors: Vec<Permutation>,
}

/// Compute the left canonical form of `word` on `strands` strands.
/// `strands` must cover the word's implied strand count.
pub fn normal_form(word: &BraidWord, strands: usize) -> Result<NormalForm> {
    if strands < word.implied_strands() {
        return Err(Error::Domain(format!(
            "word needs {} strands, got {strands}",
            word.implied_strands()
        )));
    }
    if strands > MAX_BRAID_STRANDS {
        return Err(Error::SizeLimit {
            what: "strand count",
            got: strands,
            cap: MAX_BRAID_STRANDS,
        });
    }
    let (mut inf, mut factors) = word_to_factors(word, strands);
    left_weight_sweep(&mut factors, strands);
    // After the sweep any half twist factors sit at the front; fold them
    // into the infimum.
    let w0 = half_twist(strands);
    let delta_prefix = factors.iter().take_while(|f| **f == w0).count();
    inf += delta_prefix as i64;
    factors.drain(..delta_prefix);
    debug_assert!(
        factors.iter().all(|f| !f.is_identity() && *f != w0),
        "word {word} inf {inf} factors {:?}",
        factors.iter().map(|f| f.images().to_vec()).collect::<Vec<_>>()
    );
    Ok(NormalForm {
        strands,
        inf,
        factors,
    })
}

/// Decide equality of two words as braids, on the smallest strand count
/// covering both.
pub fn braid_equal(x: &BraidWord, y: &BraidWord) -> Result<bool> {
    let strands = x.implied_strands().max(y.implied_strands());
    Ok(normal_form(x, strands)? == normal_form(y, strands)?)
}

impl NormalForm {
    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Exponent of the leading half twist power.
    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    /// Canonical length: the number of non-trivial factors.
    pub fn canonical_len(&self) -> usize {
        self.factors.len()
    }

    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    /// Re-express as a word: `|inf|` copies of the (possibly inverted) half
    /// twist followed by one deterministic positive word per factor.
    pub fn to_word(&self) -> BraidWord {
        let delta = BraidWord::delta(self.strands).expect("strand count validated");
        let mut word = BraidWord::identity();
        if self.inf >= 0 {
            for _ in 0..self.inf {
                word = word.mul(&delta);
            }
        } else {
            let delta_inv = delta.inverse();
            for _ in 0..-self.inf {
                word = word.mul(&delta_inv);
            }
        }
        for factor in &self.factors {
            word = word.mul(&perm_to_word(factor));
        }
        word
    }

    /// Byte encoding that is equal exactly for equal normal forms at the
    /// same strand count.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(14 + self.factors.len() * self.strands);
        out.push(self.strands as u8);
        out.extend(self.inf.to_be_bytes());
        out.extend((self.factors.len() as u32).to_be_bytes());
        for f in &self.factors {
            out.extend(f.images().iter().map(|&i| i as u8));
        }
        out
    }
}

/// `(strands; inf; factors)` with factors as one-line image arrays, or `e`
/// for the identity factor list.
impl std::fmt::Display for NormalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}; {}; ", self.strands, self.inf)?;
        if self.factors.is_empty() {
            f.write_str("e")?;
        } else {
            for (i, factor) in self.factors.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                f.write_str("[")?;
                for (j, img) in factor.images().iter().enumerate() {
                    if j > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{}", img + 1)?;
                }
                f.write_str("]")?;
            }
        }
        f.write_str(")")
    }
}

/// Deterministic positive word for a permutation braid: repeatedly cross the
/// leftmost inverted adjacent pair of destinations.
pub fn perm_to_word(perm: &Permutation) -> BraidWord {
    let n = perm.degree();
    let mut cur: Vec<u16> = perm.images().to_vec();
    let mut letters = Vec::with_capacity(perm.inversions());
    loop {
        let mut swapped = false;
        for i in 0..n.saturating_sub(1) {
            if cur[i] > cur[i + 1] {
                letters.push((i + 1) as i32);
                cur.swap(i, i + 1);
                swapped = true;
                break;
            }
        }
        if !swapped {
            break;
        }
    }
    BraidWord::new(letters).expect("positive letters within range")
}

fn half_twist(strands: usize) -> Permutation {
    Permutation::from_images((0..strands as u16).rev().collect()).expect("reversal is a bijection")
}

/// Conjugation by the half twist, an involution on permutation braids.
fn flip(perm: &Permutation, w0: &Permutation) -> Permutation {
    w0.then(perm).then(w0)
}

/// Positions `i` (zero-based, `i + 1` in generator indexing) where
/// `sigma_(i+1)` left divides the permutation braid.
fn starting_flags(perm: &Permutation) -> Vec<bool> {
    let images = perm.images();
    (0..images.len().saturating_sub(1))
        .map(|i| images[i] > images[i + 1])
        .collect()
}

fn finishing_flags(perm: &Permutation) -> Vec<bool> {
    starting_flags(&perm.inverse())
}

/// Decompose a word into an infimum and a stream of permutation braid
/// factors, migrating every half twist to the front.
///
/// Each positive letter stands for itself; each negative letter `-i` is
/// `D^-1 (D sigma_i^-1)` with `D sigma_i^-1` a permutation braid. Moving a
/// half twist power left across a factor conjugates the factor by the half
/// twist, so a factor is flipped once per negative letter to its right.
/// Adjacent positive letters are folded greedily into one factor while the
/// product stays a permutation braid.
fn word_to_factors(word: &BraidWord, strands: usize) -> (i64, Vec<Permutation>) {
    let w0 = half_twist(strands);
    let mut inf: i64 = 0;
    let mut parity = false;

    // Right-to-left pass: record each letter with its flip applied.
    enum Item {
        /// One-based generator index of a single positive crossing.
        Letter(usize),
        /// A full permutation braid factor.
        Block(Permutation),
    }
    let mut items: Vec<Item> = Vec::with_capacity(word.len());
    for &l in word.letters().iter().rev() {
        let i = l.unsigned_abs() as usize;
        if l > 0 {
            let idx = if parity { strands - i } else { i };
            items.push(Item::Letter(idx));
        } else {
            let mut factor = w0.then(&Permutation::transposition(strands, i - 1));
            if parity {
                factor = flip(&factor, &w0);
            }
            // On two strands the complement of a crossing is empty.
            if !factor.is_identity() {
                items.push(Item::Block(factor));
            }
            parity = !parity;
            inf -= 1;
        }
    }
    items.reverse();

    // Left-to-right fold: extend the current factor while the appended
    // crossing adds length, i.e. while the generator does not already
    // finish it.
    let mut factors: Vec<Permutation> = Vec::new();
    let mut current: Option<Permutation> = None;
    for item in items {
        match item {
            Item::Letter(i) => {
                let s = Permutation::transposition(strands, i - 1);
                match current.as_mut() {
                    Some(f) if !finishing_flags(f)[i - 1] => *f = f.then(&s),
                    Some(_) => {
                        factors.push(current.take().expect("checked above"));
                        current = Some(s);
                    }
                    None => current = Some(s),
                }
            }
            Item::Block(b) => {
                if let Some(f) = current.take() {
                    factors.push(f);
                }
                current = Some(b);
            }
        }
    }
    if let Some(f) = current.take() {
        factors.push(f);
    }
    (inf, factors)
}

/// Make one adjacent pair left weighted by sliding initial crossings of `b`
/// that do not yet finish `a` across the boundary. Returns whether anything
/// moved. The product `a b` is preserved at every step, `a` only gains
/// crossings, and `b` only loses them, so the loop terminates.
///
/// Sliding the single crossing `sigma_(i+1)` only touches positions `i`,
/// `i + 1` of `b` and of `a^-1`, so the descent masks driving the loop are
/// maintained in place and each slide costs O(1).
fn make_left_weighted(a: &mut Permutation, b: &mut Permutation, strands: usize) -> bool {
    debug_assert!(strands <= 128, "descent masks are u128");
    let mut av: Vec<u16> = a.images().to_vec();
    let mut ai: Vec<u16> = a.inverse().images().to_vec();
    let mut bv: Vec<u16> = b.images().to_vec();

    let descent_mask = |v: &[u16]| -> u128 {
        let mut m = 0u128;
        for i in 0..v.len() - 1 {
            if v[i] > v[i + 1] {
                m |= 1 << i;
            }
        }
        m
    };
    let mut fin = descent_mask(&ai);
    let mut start = descent_mask(&bv);

    let mut moved = false;
    loop {
        let need = start & !fin;
        if need == 0 {
            break;
        }
        let i = need.trailing_zeros() as usize;
        // a gains sigma_(i+1) on the right: swap the values i, i + 1 of a,
        // i.e. the entries of a^-1 at positions i, i + 1. b loses it on the
        // left: swap the entries of b at positions i, i + 1.
        let (p, q) = (ai[i] as usize, ai[i + 1] as usize);
        av.swap(p, q);
        ai.swap(i, i + 1);
        bv.swap(i, i + 1);
        for j in i.saturating_sub(1)..(i + 2).min(strands - 1) {
            let bit = 1 << j;
            if ai[j] > ai[j + 1] {
                fin |= bit;
            } else {
                fin &= !bit;
            }
            if bv[j] > bv[j + 1] {
                start |= bit;
            } else {
                start &= !bit;
            }
        }
        moved = true;
    }
    if moved {
        *a = Permutation::from_images(av).expect("swaps preserve bijectivity");
        *b = Permutation::from_images(bv).expect("swaps preserve bijectivity");
    }
    moved
}

/// Left weight the whole sequence by appending one factor at a time to an
/// already weighted prefix and bubbling it leftward while crossings move.
/// Weighting a pair only removes crossings from its right member, which
/// cannot disturb the weighted pairs further right, so each bubble stops at
/// the first boundary where nothing moves. The prefix stays close to its
/// canonical length throughout, keeping bubbles short. Factors emptied by a
/// slide are dropped on the spot.
fn left_weight_sweep(factors: &mut Vec<Permutation>, strands: usize) {
    let mut out: Vec<Permutation> = Vec::with_capacity(factors.len());
    for f in factors.drain(..) {
        if f.is_identity() {
            continue;
        }
        out.push(f);
        let mut i = out.len() - 1;
        while i > 0 {
            let (head, tail) = out.split_at_mut(i);
            let moved = make_left_weighted(&mut head[i - 1], &mut tail[0], strands);
            if tail[0].is_identity() {
                out.remove(i);
            }
            if !moved {
                break;
            }
            i -= 1;
        }
    }
    #[cfg(debug_assertions)]
    for pair in out.windows(2) {
        let fin = finishing_flags(&pair[0]);
        let start = starting_flags(&pair[1]);
        debug_assert!(
            (0..strands - 1).all(|i| !start[i] || fin[i]),
            "sweep left a pair that is not left weighted"
        );
    }
    *factors = out;
}
