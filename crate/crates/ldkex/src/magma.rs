//! Carrier sets equipped with two pools of binary operations.
//!
//! The protocol layer never looks inside elements; everything it needs is
//! captured by [`Platform`]: apply a pooled operation, sample a random
//! element, test equality, and produce a canonical byte encoding. A platform
//! is expected to be *mutually left distributive*: every operation of pool A
//! distributes over every operation of pool B and vice versa,
//!
//! ```text
//! x *a (y *b z) = (x *a y) *b (x *a z)
//! x *b (y *a z) = (x *b y) *a (x *b z)
//! ```
//!
//! The law itself is checked by [`crate::laws`], not assumed here.

use rand::RngCore;

use crate::error::{Error, Result};

/// The two operation pools of a platform. Pool A backs one party's private
/// morphism, pool B the other's.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pool {
    A,
    B,
}

impl Pool {
    pub fn letter(self) -> char {
        match self {
            Pool::A => 'A',
            Pool::B => 'B',
        }
    }
}

impl std::fmt::Display for Pool {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Pool::A => "A",
            Pool::B => "B",
        })
    }
}

/// Identifier of one operation: a pool plus a zero-based index into it.
///
/// Displayed one-based (`A1`, `B2`, ...) to match the wire formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpId {
    pub pool: Pool,
    pub index: usize,
}

impl OpId {
    pub fn new(pool: Pool, index: usize) -> Self {
        OpId { pool, index }
    }

    /// Operation `index` (zero-based) of pool A.
    pub fn a(index: usize) -> Self {
        OpId::new(Pool::A, index)
    }

    /// Operation `index` (zero-based) of pool B.
    pub fn b(index: usize) -> Self {
        OpId::new(Pool::B, index)
    }

    /// Symbol used when rendering symbolic terms, e.g. `*a1`.
    pub fn term_symbol(&self) -> String {
        format!(
            "*{}{}",
            self.pool.letter().to_ascii_lowercase(),
            self.index + 1
        )
    }
}

impl std::fmt::Display for OpId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", self.pool.letter(), self.index + 1)
    }
}

/// Parse an operation id in wire form (`A1`, `b2`, ...).
impl std::str::FromStr for OpId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let pool = match chars.next() {
            Some('A') | Some('a') => Pool::A,
            Some('B') | Some('b') => Pool::B,
            _ => return Err(Error::Parse(format!("bad operation id {s:?}"))),
        };
        let index: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad operation index in {s:?}")))?;
        if index == 0 {
            return Err(Error::Parse(format!(
                "operation indices are one-based on the wire, got {s:?}"
            )));
        }
        Ok(OpId::new(pool, index - 1))
    }
}

/// A carrier with two pools of binary operations.
pub trait Platform {
    type Elem: Clone;

    /// Number of operations in the given pool. Both pools must be nonempty.
    fn pool_size(&self, pool: Pool) -> usize;

    /// Apply one pooled operation. Fails on an out-of-pool id or when the
    /// arguments fall outside the platform's domain.
    fn apply(&self, op: OpId, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem>;

    /// Sample an element. Platforms with a finite carrier sample uniformly;
    /// others sample from a bounded, configured distribution.
    fn random_element(&self, rng: &mut dyn RngCore) -> Self::Elem;

    /// Semantic equality. Defaults to structural equality via the canonical
    /// encoding; platforms with cheap structural `Eq` override this.
    fn elems_equal(&self, x: &Self::Elem, y: &Self::Elem) -> Result<bool> {
        Ok(self.canonical_bytes(x)? == self.canonical_bytes(y)?)
    }

    /// Canonical byte encoding: equal elements encode identically.
    fn canonical_bytes(&self, x: &Self::Elem) -> Result<Vec<u8>>;

    /// Human-readable rendering used in transcripts and reports.
    fn display_elem(&self, x: &Self::Elem) -> String;

    /// One-line platform description for transcripts and logs.
    fn describe(&self) -> String;

    /// Short label for the operation, used in reports (`*`, `*bar`, ...).
    fn op_name(&self, op: OpId) -> String {
        op.to_string()
    }

    /// The full carrier, when small enough to enumerate. Enables exhaustive
    /// law checks.
    fn carrier(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    /// All operation ids of one pool, in index order.
    fn pool_ops(&self, pool: Pool) -> Vec<OpId> {
        (0..self.pool_size(pool))
            .map(|i| OpId::new(pool, i))
            .collect()
    }

    /// Check that `op` belongs to one of this platform's pools.
    fn validate_op(&self, op: OpId) -> Result<()> {
        let size = self.pool_size(op.pool);
        if op.index >= size {
            return Err(Error::UnknownOp {
                op: op.to_string(),
                pool_size: size,
            });
        }
        Ok(())
    }
}
