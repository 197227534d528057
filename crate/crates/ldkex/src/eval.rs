//! Evaluation of tree-shaped products and iterated left multiplication.

use crate::error::{Error, Result};
use crate::magma::{OpId, Platform};
use crate::tree::TreeVector;

/// Evaluate the product described by `tree` over `leaves`, consuming one
/// operation per internal node.
///
/// The working sequence starts as the leaf sequence. For `j = n` down to `1`,
/// step `j` reads the merge position `p = tree[j]` from the original vector,
/// replaces the sequence entries at `p` and `p + 1` by their product under
/// the next unconsumed operation (operations are consumed front to back), and
/// deletes entry `p + 1`. Positions are one-based and always in range: after
/// step `j` the sequence has length `j`, and `tree[j-1] <= j - 1 < j` keeps
/// the next read valid.
pub fn evaluate_tree<P: Platform + ?Sized>(
    platform: &P,
    tree: &TreeVector,
    ops: &[OpId],
    leaves: &[P::Elem],
) -> Result<P::Elem> {
    let n = tree.len();
    if ops.len() != n {
        return Err(Error::LengthMismatch {
            what: "operation list",
            expected: n,
            got: ops.len(),
        });
    }
    if leaves.len() != n + 1 {
        return Err(Error::LengthMismatch {
            what: "leaf sequence",
            expected: n + 1,
            got: leaves.len(),
        });
    }
    let mut seq: Vec<P::Elem> = leaves.to_vec();
    let mut next_op = ops.iter();
    for j in (1..=n).rev() {
        let p = tree.entries()[j - 1] as usize;
        let op = *next_op.next().expect("one op per step");
        let merged = platform.apply(op, &seq[p - 1], &seq[p])?;
        seq[p - 1] = merged;
        seq.remove(p);
    }
    Ok(seq.pop().expect("single root remains"))
}

/// Fold `y` under left multiplication: returns
/// `x[k] op[k] ( ... (x[2] op[2] (x[1] op[1] y)) ... )`.
///
/// This is the map written `phi` in the protocol layer: a composition of
/// left-multiplication maps, applied innermost first.
pub fn iterated_left_mul<P: Platform + ?Sized>(
    platform: &P,
    multipliers: &[P::Elem],
    ops: &[OpId],
    y: &P::Elem,
) -> Result<P::Elem> {
    if multipliers.len() != ops.len() {
        return Err(Error::LengthMismatch {
            what: "left multiplication ops",
            expected: multipliers.len(),
            got: ops.len(),
        });
    }
    let mut acc = y.clone();
    for (x, op) in multipliers.iter().zip(ops.iter()) {
        acc = platform.apply(*op, x, &acc)?;
    }
    Ok(acc)
}

/// A tree vector bundled with its operation list and leaf indices into some
/// generator vector: the private data each party derives its morphism from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeWord {
    pub tree: TreeVector,
    pub ops: Vec<OpId>,
    pub leaf_indices: Vec<usize>,
}

impl TreeWord {
    /// Structural validation: one op per internal node, one index per leaf.
    /// Index range is checked against the generator vector at evaluation.
    pub fn new(tree: TreeVector, ops: Vec<OpId>, leaf_indices: Vec<usize>) -> Result<Self> {
        if ops.len() != tree.len() {
            return Err(Error::LengthMismatch {
                what: "tree word ops",
                expected: tree.len(),
                got: ops.len(),
            });
        }
        if leaf_indices.len() != tree.leaf_count() {
            return Err(Error::LengthMismatch {
                what: "tree word leaf indices",
                expected: tree.leaf_count(),
                got: leaf_indices.len(),
            });
        }
        Ok(TreeWord {
            tree,
            ops,
            leaf_indices,
        })
    }

    /// Evaluate over `generators`, substituting `generators[i]` for leaf
    /// index `i` (zero-based).
    pub fn evaluate<P: Platform + ?Sized>(
        &self,
        platform: &P,
        generators: &[P::Elem],
    ) -> Result<P::Elem> {
        let leaves = self
            .leaf_indices
            .iter()
            .map(|&i| {
                generators.get(i).cloned().ok_or_else(|| {
                    Error::Domain(format!(
                        "leaf index {i} outside generator vector of length {}",
                        generators.len()
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        evaluate_tree(platform, &self.tree, &self.ops, &leaves)
    }
}
