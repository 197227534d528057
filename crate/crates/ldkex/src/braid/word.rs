//! Braid words: sequences of signed Artin generator indices.
//!
//! The letter `i > 0` is the generator crossing strands `i` and `i + 1`
//! positively; `-i` is its inverse. A word on letters of absolute value at
//! most `m` lives in every braid group with at least `m + 1` strands; the
//! smallest such group is the word's implied strand count. Words multiply by
//! concatenation and carry no relations; semantic equality lives in
//! [`crate::braid::normal`].

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Largest admissible generator index, so implied strand counts fit in
/// [`crate::braid::MAX_BRAID_STRANDS`].
pub const MAX_BRAID_LETTER: u32 = 127;

/// Cap on letters per word at validated boundaries.
pub const MAX_BRAID_WORD_LEN: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BraidWord {
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(letters: Vec<i32>) -> Result<Self> {
        if letters.len() > MAX_BRAID_WORD_LEN {
            return Err(Error::SizeLimit {
                what: "braid word length",
                got: letters.len(),
                cap: MAX_BRAID_WORD_LEN,
            });
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() > MAX_BRAID_LETTER {
                return Err(Error::Invalid {
                    what: "braid word",
                    reason: format!("letter {l} outside +-1..={MAX_BRAID_LETTER}"),
                });
            }
        }
        Ok(BraidWord { letters })
    }

    /// The empty word.
    pub fn identity() -> Self {
        BraidWord::default()
    }

    /// The single letter `sigma_i` (`i > 0`) or its inverse (`i < 0`).
    pub fn sigma(i: i32) -> Result<Self> {
        BraidWord::new(vec![i])
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Smallest strand count this word lives on, never below 2.
    pub fn implied_strands(&self) -> usize {
        self.letters
            .iter()
            .map(|l| l.unsigned_abs() as usize + 1)
            .max()
            .unwrap_or(0)
            .max(2)
    }

    /// Concatenation; relations are not applied.
    pub fn mul(&self, other: &BraidWord) -> BraidWord {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        BraidWord { letters }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    /// The shift endomorphism applied `by` times: every index grows by `by`.
    pub fn shifted(&self, by: u32) -> Result<BraidWord> {
        let letters = self
            .letters
            .iter()
            .map(|&l| {
                let idx = l.unsigned_abs() + by;
                if idx > MAX_BRAID_LETTER {
                    return Err(Error::SizeLimit {
                        what: "shifted letter index",
                        got: idx as usize,
                        cap: MAX_BRAID_LETTER as usize,
                    });
                }
                Ok(if l > 0 { idx as i32 } else { -(idx as i32) })
            })
            .collect::<Result<Vec<i32>>>()?;
        Ok(BraidWord { letters })
    }

    /// Cancel adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { letters: out }
    }

    /// Signed letter count, invariant under the braid relations.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// Image in the symmetric group on `strands` points: the permutation
    /// sending each starting position to its ending position.
    pub fn permutation(&self, strands: usize) -> Result<Permutation> {
        if strands < self.implied_strands() {
            return Err(Error::Domain(format!(
                "word needs {} strands, got {strands}",
                self.implied_strands()
            )));
        }
        let mut p = Permutation::identity(strands);
        for &l in &self.letters {
            p = p.then(&Permutation::transposition(strands, l.unsigned_abs() as usize - 1));
        }
        Ok(p)
    }

    /// The positive half twist on `strands` strands:
    /// `(s1)(s2 s1)(s3 s2 s1)...`.
    pub fn delta(strands: usize) -> Result<BraidWord> {
        if strands < 2 || strands > MAX_BRAID_LETTER as usize + 1 {
            return Err(Error::Domain(format!(
                "half twist needs 2..={} strands, got {strands}",
                MAX_BRAID_LETTER as usize + 1
            )));
        }
        let mut letters = Vec::with_capacity(strands * (strands - 1) / 2);
        for j in 1..strands {
            for i in (1..=j).rev() {
                letters.push(i as i32);
            }
        }
        Ok(BraidWord { letters })
    }

    /// The braid `tau(p, q)`: the product
    /// `d * shift(d) * ... * shift^(q-1)(d)` of shifted copies of the
    /// descending generator run `d = s_p s_(p-1) ... s_1`.
    pub fn tau(p: usize, q: usize) -> Result<BraidWord> {
        if p < 1 || q < 1 {
            return Err(Error::Domain(format!("tau({p}, {q}) needs p, q >= 1")));
        }
        if p + q - 1 > MAX_BRAID_LETTER as usize {
            return Err(Error::SizeLimit {
                what: "tau letter index",
                got: p + q - 1,
                cap: MAX_BRAID_LETTER as usize,
            });
        }
        let mut letters = Vec::with_capacity(p * q);
        for k in 0..q {
            for i in (1..=p).rev() {
                letters.push((i + k) as i32);
            }
        }
        Ok(BraidWord { letters })
    }

    /// Parse a whitespace-separated list of signed indices; `e`, the empty
    /// string, and pure whitespace all mean the identity.
    pub fn parse(s: &str) -> Result<BraidWord> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return Ok(BraidWord::identity());
        }
        let letters = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad braid letter {tok:?}")))
            })
            .collect::<Result<Vec<i32>>>()?;
        BraidWord::new(letters)
    }
}

/// Space-separated letters; the identity prints `e`.
impl std::fmt::Display for BraidWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}
