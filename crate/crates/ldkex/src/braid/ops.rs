//! Left distributive operations on the infinite braid group built from the
//! shift endomorphism, and the platform wrapping them.
//!
//! Writing `sh` for the shift (every generator index grows by one) and
//! `sh^p` for its `p`-th power, the operations are
//!
//! ```text
//! shifted conjugacy          x * y    = sh(x)^-1 s1     sh(y) x
//! bar variant                x *bar y = sh(x)^-1 s1^-1  sh(y) x
//! generalized, one of i=1,2  x *i y   = sh^p(x)^-1 a_i  sh^p(y) x
//! ```
//!
//! with `a_i = a_i' tau(p,p)^(e_i) a_i''` for braids `a_i'`, `a_i''` on at
//! most `p` strands and signs `e_i`. The pair `(*, *bar)` is mutually left
//! distributive in both directions; the generalized pair `(*1, *2)` is when
//! `a_1'` commutes with `a_2''`, `a_2'` commutes with `a_1''`, and `a_1'`
//! commutes with `a_2'`. Shifted conjugacy is the special case `p = 1`,
//! `a_i' = a_i'' = e` with signs `+1` and `-1`.

use rand::Rng;
use rand::RngCore;

use crate::braid::normal::{braid_equal, normal_form, MAX_BRAID_STRANDS};
use crate::braid::word::BraidWord;
use crate::error::{Error, Result};
use crate::magma::{OpId, Platform, Pool};

/// Cap on the shift power of generalized shifted conjugacy.
pub const MAX_SHIFT_POWER: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftVariant {
    /// Middle letter `s1`.
    Plain,
    /// Middle letter `s1^-1`.
    Bar,
}

/// `x * y = sh(x)^-1 (s1)^(+-1) sh(y) x`, as a raw word.
pub fn shifted_conjugacy(x: &BraidWord, y: &BraidWord, variant: ShiftVariant) -> Result<BraidWord> {
    let middle = match variant {
        ShiftVariant::Plain => BraidWord::sigma(1)?,
        ShiftVariant::Bar => BraidWord::sigma(-1)?,
    };
    Ok(x.shifted(1)?
        .inverse()
        .mul(&middle)
        .mul(&y.shifted(1)?)
        .mul(x))
}

/// Parameters of the generalized operation pair `(*1, *2)`.
///
/// Each `a_i` factors as `left_i tau(p,p)^(sign_i) right_i`. The signs are
/// carried per operation so that the shifted conjugacy pair arises at
/// `p = 1` with signs `(+1, -1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenShiftedConjParams {
    shift: usize,
    left: [BraidWord; 2],
    right: [BraidWord; 2],
    signs: [i8; 2],
}

impl GenShiftedConjParams {
    /// Validate: `shift >= 1`, signs in `{-1, +1}`, and all four component
    /// braids on at most `shift` strands (letter indices below `shift`).
    pub fn new(
        shift: usize,
        left1: BraidWord,
        right1: BraidWord,
        left2: BraidWord,
        right2: BraidWord,
        sign1: i8,
        sign2: i8,
    ) -> Result<Self> {
        if !(1..=MAX_SHIFT_POWER).contains(&shift) {
            return Err(Error::SizeLimit {
                what: "shift power",
                got: shift,
                cap: MAX_SHIFT_POWER,
            });
        }
        for sign in [sign1, sign2] {
            if sign != 1 && sign != -1 {
                return Err(Error::Invalid {
                    what: "generalized shifted conjugacy sign",
                    reason: format!("{sign} is not +-1"),
                });
            }
        }
        for (name, word) in [
            ("left1", &left1),
            ("right1", &right1),
            ("left2", &left2),
            ("right2", &right2),
        ] {
            if !word.is_empty() && word.implied_strands() > shift {
                return Err(Error::Domain(format!(
                    "component {name} needs {} strands but must fit in {shift}",
                    word.implied_strands()
                )));
            }
        }
        Ok(GenShiftedConjParams {
            shift,
            left: [left1, left2],
            right: [right1, right2],
            signs: [sign1, sign2],
        })
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    /// The middle braid `a_i` (`which` is 0 or 1).
    pub fn middle(&self, which: usize) -> Result<BraidWord> {
        let tau = BraidWord::tau(self.shift, self.shift)?;
        let tau_signed = if self.signs[which] > 0 {
            tau
        } else {
            tau.inverse()
        };
        Ok(self.left[which].mul(&tau_signed).mul(&self.right[which]))
    }

    pub fn component(&self, which: usize) -> (&BraidWord, i8, &BraidWord) {
        (&self.left[which], self.signs[which], &self.right[which])
    }
}

/// `x *i y = sh^p(x)^-1 a_i sh^p(y) x`, as a raw word.
pub fn gen_shifted_conjugacy(
    params: &GenShiftedConjParams,
    which: usize,
    x: &BraidWord,
    y: &BraidWord,
) -> Result<BraidWord> {
    if which > 1 {
        return Err(Error::Domain(format!(
            "generalized shifted conjugacy has operations 0 and 1, got {which}"
        )));
    }
    let p = params.shift as u32;
    Ok(x.shifted(p)?
        .inverse()
        .mul(&params.middle(which)?)
        .mul(&y.shifted(p)?)
        .mul(x))
}

/// Commutation conditions on the components, decided by normal forms.
///
/// The first three make `(*1, *2)` mutually left distributive; the two
/// extras additionally make each operation distribute over itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AbcReport {
    pub left1_with_right2: bool,
    pub left2_with_right1: bool,
    pub left1_with_left2: bool,
    pub left1_with_right1: bool,
    pub left2_with_right2: bool,
}

impl AbcReport {
    pub fn mutually_ld(&self) -> bool {
        self.left1_with_right2 && self.left2_with_right1 && self.left1_with_left2
    }

    pub fn bi_ld(&self) -> bool {
        self.mutually_ld() && self.left1_with_right1 && self.left2_with_right2
    }
}

fn commute(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    braid_equal(&a.mul(b), &b.mul(a))
}

pub fn check_abc_conditions(params: &GenShiftedConjParams) -> Result<AbcReport> {
    let (l1, _, r1) = params.component(0);
    let (l2, _, r2) = params.component(1);
    Ok(AbcReport {
        left1_with_right2: commute(l1, r2)?,
        left2_with_right1: commute(l2, r1)?,
        left1_with_left2: commute(l1, l2)?,
        left1_with_right1: commute(l1, r1)?,
        left2_with_right2: commute(l2, r2)?,
    })
}

// --- platform ---

/// Sampling and encoding bounds for the braid platform.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BraidConfig {
    /// Strand count used for canonical encodings. Elements whose words
    /// outgrow it cannot be encoded and produce domain errors.
    pub ambient_strands: usize,
    /// Letters per sampled random element.
    pub random_word_len: usize,
    /// Largest generator index in sampled random elements.
    pub random_max_index: u32,
}

impl Default for BraidConfig {
    fn default() -> Self {
        BraidConfig {
            ambient_strands: 64,
            random_word_len: 3,
            random_max_index: 3,
        }
    }
}

impl BraidConfig {
    pub fn validate(&self) -> Result<()> {
        if self.ambient_strands < 2 || self.ambient_strands > MAX_BRAID_STRANDS {
            return Err(Error::Config(format!(
                "ambient strand count {} outside 2..={MAX_BRAID_STRANDS}",
                self.ambient_strands
            )));
        }
        if self.random_max_index == 0
            || self.random_max_index as usize >= self.ambient_strands
        {
            return Err(Error::Config(format!(
                "random letter index bound {} outside 1..{}",
                self.random_max_index, self.ambient_strands
            )));
        }
        Ok(())
    }
}

/// Which operation pair the platform exposes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BraidOpSet {
    /// Both pools are `{*, *bar}`.
    ShiftedPair,
    /// Pool A is `{*1}`, pool B is `{*2}`.
    Generalized(GenShiftedConjParams),
}

/// Platform over braid words. Operation results are freely reduced but kept
/// as words; full normal forms are computed only at comparison and encoding
/// boundaries. Re-expressing every intermediate result canonically would
/// expand the half twist power each time and blow word lengths up
/// exponentially across nested applications.
#[derive(Debug, Clone)]
pub struct BraidPlatform {
    ops: BraidOpSet,
    config: BraidConfig,
}

impl BraidPlatform {
    pub fn shifted(config: BraidConfig) -> Result<Self> {
        config.validate()?;
        Ok(BraidPlatform {
            ops: BraidOpSet::ShiftedPair,
            config,
        })
    }

    /// Build the generalized platform. The abc conditions are *not*
    /// enforced here; [`check_abc_conditions`] reports them, and running
    /// on parameters that fail them simply yields a platform whose laws
    /// fail.
    pub fn generalized(params: GenShiftedConjParams, config: BraidConfig) -> Result<Self> {
        config.validate()?;
        Ok(BraidPlatform {
            ops: BraidOpSet::Generalized(params),
            config,
        })
    }

    pub fn op_set(&self) -> &BraidOpSet {
        &self.ops
    }

    pub fn config(&self) -> &BraidConfig {
        &self.config
    }

    /// Free reduction: cancel adjacent inverse letter pairs.
    fn tidy(&self, word: BraidWord) -> Result<BraidWord> {
        Ok(word.free_reduce())
    }
}

impl Platform for BraidPlatform {
    type Elem = BraidWord;

    fn pool_size(&self, _pool: Pool) -> usize {
        match self.ops {
            BraidOpSet::ShiftedPair => 2,
            BraidOpSet::Generalized(_) => 1,
        }
    }

    fn apply(&self, op: OpId, x: &BraidWord, y: &BraidWord) -> Result<BraidWord> {
        self.validate_op(op)?;
        let raw = match &self.ops {
            BraidOpSet::ShiftedPair => {
                let variant = if op.index == 0 {
                    ShiftVariant::Plain
                } else {
                    ShiftVariant::Bar
                };
                shifted_conjugacy(x, y, variant)?
            }
            BraidOpSet::Generalized(params) => {
                let which = match op.pool {
                    Pool::A => 0,
                    Pool::B => 1,
                };
                gen_shifted_conjugacy(params, which, x, y)?
            }
        };
        self.tidy(raw)
    }

    fn random_element(&self, rng: &mut dyn RngCore) -> BraidWord {
        let letters = (0..self.config.random_word_len)
            .map(|_| {
                let idx = rng.gen_range(1..=self.config.random_max_index) as i32;
                if rng.gen::<bool>() {
                    idx
                } else {
                    -idx
                }
            })
            .collect();
        BraidWord::new(letters).expect("config validated the letter bound")
    }

    fn elems_equal(&self, x: &BraidWord, y: &BraidWord) -> Result<bool> {
        braid_equal(x, y)
    }

    fn canonical_bytes(&self, x: &BraidWord) -> Result<Vec<u8>> {
        if x.implied_strands() > self.config.ambient_strands {
            return Err(Error::Domain(format!(
                "word on {} strands exceeds the ambient {}",
                x.implied_strands(),
                self.config.ambient_strands
            )));
        }
        Ok(normal_form(x, self.config.ambient_strands)?.canonical_bytes())
    }

    fn display_elem(&self, x: &BraidWord) -> String {
        x.to_string()
    }

    fn op_name(&self, op: OpId) -> String {
        match self.ops {
            BraidOpSet::ShiftedPair => {
                if op.index == 0 {
                    "*".into()
                } else {
                    "*bar".into()
                }
            }
            BraidOpSet::Generalized(_) => match op.pool {
                Pool::A => "*1".into(),
                Pool::B => "*2".into(),
            },
        }
    }

    fn describe(&self) -> String {
        let c = &self.config;
        match &self.ops {
            BraidOpSet::ShiftedPair => format!(
                "braid shifted ambient={} len={} maxidx={}",
                c.ambient_strands, c.random_word_len, c.random_max_index
            ),
            BraidOpSet::Generalized(p) => {
                let (l1, s1, r1) = p.component(0);
                let (l2, s2, r2) = p.component(1);
                format!(
                    "braid generalized p={} a1=({}; {s1}; {}) a2=({}; {s2}; {}) \
                     ambient={} len={} maxidx={}",
                    p.shift(),
                    l1,
                    r1,
                    l2,
                    r2,
                    c.ambient_strands,
                    c.random_word_len,
                    c.random_max_index
                )
            }
        }
    }
}
