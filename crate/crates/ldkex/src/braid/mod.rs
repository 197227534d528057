//! Braid groups: words in the Artin generators, Garside left canonical
//! forms, and the shifted conjugacy operations built on the shift
//! endomorphism.

pub mod normal;
pub mod ops;
pub mod word;

pub use normal::{braid_equal, normal_form, NormalForm, MAX_BRAID_STRANDS};
pub use ops::{
    check_abc_conditions, gen_shifted_conjugacy, shifted_conjugacy, AbcReport, BraidConfig,
    BraidOpSet, BraidPlatform, GenShiftedConjParams, ShiftVariant,
};
pub use word::{BraidWord, MAX_BRAID_LETTER, MAX_BRAID_WORD_LEN};
