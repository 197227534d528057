//! Key establishment over mutually left distributive systems.
//!
//! Two parties work inside a pair of operation pools on a common carrier.
//! The pools are *mutually left distributive*: every operation of one pool
//! distributes over every operation of the other, in both directions. Each
//! party's secret is an iterated left multiplication built from one pool;
//! mutual distributivity makes those maps act as homomorphisms on the other
//! party's pool, which is exactly what lets both sides arrive at the same
//! element from publicly exchanged images.
//!
//! The crate provides:
//!
//! - binary tree vectors and uniform sampling over them ([`tree`]),
//! - tree-shaped term evaluation over operation pools ([`eval`]),
//! - machine checks of the distributivity laws ([`laws`]),
//! - concrete platforms: Laver tables ([`laver`]), groups under
//!   conjugacy-style operations ([`group`]), and braid groups under shifted
//!   conjugacy ([`braid`]),
//! - the key establishment protocol itself ([`kep`]),
//! - plain-text wire formats for records and transcripts ([`wire`]).

pub mod braid;
pub mod error;
pub mod eval;
pub mod group;
pub mod kep;
pub mod laver;
pub mod laws;
pub mod magma;
pub mod perm;
pub mod term;
pub mod testkit;
pub mod tree;
pub mod wire;

pub use braid::{
    braid_equal, check_abc_conditions, gen_shifted_conjugacy, normal_form, shifted_conjugacy,
    AbcReport, BraidConfig, BraidOpSet, BraidPlatform, BraidWord, GenShiftedConjParams,
    NormalForm, ShiftVariant,
};
pub use error::{Error, Result};
pub use eval::{evaluate_tree, iterated_left_mul, TreeWord};
pub use group::{Endomorphism, Group, GroupElement, GroupOp, GroupPlatform, Mat2};
pub use kep::{run_exchange, shared_key_digest, Exchange, ExchangeConfig, PublicParams};
pub use laver::{LaverPlatform, LaverTable};
pub use laws::{
    check_mutual_ld, exhaustive_campaign, random_campaign, CampaignReport, LdCheck, LdDirection,
    LdViolation,
};
pub use magma::{OpId, Platform, Pool};
pub use perm::Permutation;
pub use term::{SymbolicPlatform, Term};
pub use tree::{catalan, TreeVector};
pub use wire::{
    parse_transcript, parse_tree_word, render_laver_structured, render_transcript,
    render_tree_word, to_hex, RawTranscript,
};
