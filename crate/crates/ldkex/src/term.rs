//! Free symbolic carrier: terms record which operation combined which
//! arguments instead of computing anything. Useful for checking tree
//! evaluation order and for rendering examples; the symbolic platform
//! satisfies no laws, so it never backs an actual exchange.

use rand::Rng;
use rand::RngCore;

use crate::error::Result;
use crate::magma::{OpId, Platform, Pool};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Leaf(String),
    Node(OpId, Box<Term>, Box<Term>),
}

impl Term {
    pub fn leaf(name: impl Into<String>) -> Self {
        Term::Leaf(name.into())
    }

    fn fmt_at(&self, f: &mut std::fmt::Formatter<'_>, top: bool) -> std::fmt::Result {
        match self {
            Term::Leaf(name) => f.write_str(name),
            Term::Node(op, l, r) => {
                if !top {
                    f.write_str("(")?;
                }
                l.fmt_at(f, false)?;
                write!(f, " {} ", op.term_symbol())?;
                r.fmt_at(f, false)?;
                if !top {
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }
}

/// Fully parenthesized infix rendering; the outermost parentheses are
/// omitted.
impl std::fmt::Display for Term {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.fmt_at(f, true)
    }
}

/// Platform over [`Term`] with configurable pool sizes.
pub struct SymbolicPlatform {
    pub pool_a: usize,
    pub pool_b: usize,
}

impl SymbolicPlatform {
    pub fn new(pool_a: usize, pool_b: usize) -> Self {
        SymbolicPlatform { pool_a, pool_b }
    }
}

impl Platform for SymbolicPlatform {
    type Elem = Term;

    fn pool_size(&self, pool: Pool) -> usize {
        match pool {
            Pool::A => self.pool_a,
            Pool::B => self.pool_b,
        }
    }

    fn apply(&self, op: OpId, x: &Term, y: &Term) -> Result<Term> {
        self.validate_op(op)?;
        Ok(Term::Node(op, Box::new(x.clone()), Box::new(y.clone())))
    }

    fn random_element(&self, rng: &mut dyn RngCore) -> Term {
        Term::Leaf(format!("g{}", rng.gen_range(1..=26)))
    }

    fn elems_equal(&self, x: &Term, y: &Term) -> Result<bool> {
        Ok(x == y)
    }

    fn canonical_bytes(&self, x: &Term) -> Result<Vec<u8>> {
        Ok(x.to_string().into_bytes())
    }

    fn display_elem(&self, x: &Term) -> String {
        x.to_string()
    }

    fn describe(&self) -> String {
        format!("symbolic pools=({},{})", self.pool_a, self.pool_b)
    }
}
