//! Integer-vector encoding of planted binary trees.
//!
//! A tree with `n` internal nodes (hence `n + 1` leaves) is encoded as a
//! vector `T` of length `n` with one-based entries satisfying
//!
//! ```text
//! T[1] <= T[2] <= ... <= T[n]    and    T[i] <= i.
//! ```
//!
//! The entry `T[j]` is the merge position consumed at step `j` of
//! [`crate::eval::evaluate_tree`], read from last to first: starting from the
//! leaf sequence, step `j = n, n-1, ..., 1` combines the subtrees at
//! positions `T[j]` and `T[j] + 1` of the current sequence. Equivalently,
//! reading the vector backwards replays the merge schedule that always joins
//! the rightmost available sibling pair, which is why the entries are
//! nondecreasing. The number of valid vectors of length `n` is the Catalan
//! number `C(2n, n) / (n + 1)`.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

/// Largest `n` accepted by [`TreeVector::enumerate`] by default; Catalan
/// growth makes larger enumerations impractical to hold in memory.
pub const DEFAULT_ENUMERATION_CAP: usize = 12;

/// Largest `n` accepted anywhere a tree vector is built.
pub const MAX_TREE_SIZE: usize = 1 << 16;

/// A validated tree vector. Entries are the one-based merge positions
/// described in the module docs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TreeVector {
    entries: Vec<u32>,
}

impl TreeVector {
    /// Validate and wrap a vector of one-based entries.
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.len() > MAX_TREE_SIZE {
            return Err(Error::SizeLimit {
                what: "tree vector length",
                got: entries.len(),
                cap: MAX_TREE_SIZE,
            });
        }
        if let Some(reason) = Self::violation(&entries) {
            return Err(Error::Invalid {
                what: "tree vector",
                reason,
            });
        }
        Ok(TreeVector { entries })
    }

    /// The single tree with one leaf and no internal node.
    pub fn empty() -> Self {
        TreeVector { entries: vec![] }
    }

    /// Check the defining constraints without constructing.
    pub fn is_valid(entries: &[u32]) -> bool {
        entries.len() <= MAX_TREE_SIZE && Self::violation(entries).is_none()
    }

    fn violation(entries: &[u32]) -> Option<String> {
        for (i, &e) in entries.iter().enumerate() {
            let position = i + 1;
            if e == 0 || e as usize > position {
                return Some(format!(
                    "entry {e} at position {position} outside 1..={position}"
                ));
            }
            if i > 0 && entries[i - 1] > e {
                return Some(format!("entries decrease at position {position}"));
            }
        }
        None
    }

    /// Number of internal nodes.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of leaves, always `len() + 1`.
    pub fn leaf_count(&self) -> usize {
        self.entries.len() + 1
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// All tree vectors of length `n` in lexicographic order. Errors above
    /// `cap` rather than attempting a Catalan-sized allocation.
    pub fn enumerate_with_cap(n: usize, cap: usize) -> Result<Vec<TreeVector>> {
        if n > cap {
            return Err(Error::SizeLimit {
                what: "tree enumeration size",
                got: n,
                cap,
            });
        }
        let mut out = Vec::new();
        let mut partial = Vec::with_capacity(n);
        enumerate_rec(n, &mut partial, &mut out);
        Ok(out)
    }

    /// [`Self::enumerate_with_cap`] with [`DEFAULT_ENUMERATION_CAP`].
    pub fn enumerate(n: usize) -> Result<Vec<TreeVector>> {
        Self::enumerate_with_cap(n, DEFAULT_ENUMERATION_CAP)
    }

    /// Sample uniformly among all `Catalan(n)` vectors of length `n`.
    ///
    /// Uses the cycle lemma: a uniformly shuffled arrangement of `n + 1`
    /// up-steps and `n` down-steps has exactly one rotation that stays
    /// strictly positive, and dropping its leading up-step yields a uniform
    /// Dyck word of semilength `n`. The Dyck word is parsed as a tree by
    /// first-return decomposition and the tree replayed into merge positions.
    pub fn sample<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<TreeVector> {
        if n > MAX_TREE_SIZE {
            return Err(Error::SizeLimit {
                what: "tree sample size",
                got: n,
                cap: MAX_TREE_SIZE,
            });
        }
        if n == 0 {
            return Ok(TreeVector::empty());
        }
        let mut steps = vec![true; n + 1];
        steps.extend(std::iter::repeat_n(false, n));
        steps.shuffle(rng);
        let start = dominating_rotation(&steps);
        // Rotation starting at `start` is the unique dominating one; its
        // first step is necessarily an up-step. Skip it.
        let dyck: Vec<bool> = (1..steps.len())
            .map(|k| steps[(start + k) % steps.len()])
            .collect();
        let shape = parse_dyck(&dyck)?;
        Ok(TreeVector {
            entries: shape.to_merge_positions(),
        })
    }

    /// Parse the wire form `[1,1,2]`; `[]` is the empty tree.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("tree vector must be bracketed, got {s:?}")))?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(TreeVector::empty());
        }
        let entries = inner
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad tree vector entry {tok:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        TreeVector::new(entries)
    }
}

impl std::fmt::Display for TreeVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

/// `Catalan(n) = C(2n, n) / (n + 1)` via the overflow-free product form.
pub fn catalan(n: u32) -> u128 {
    // catalan(k+1) = catalan(k) * 2(2k+1) / (k+2), exact at every step.
    let mut c: u128 = 1;
    for k in 0..n as u128 {
        c = c * (2 * (2 * k + 1)) / (k + 2);
    }
    c
}

fn enumerate_rec(n: usize, partial: &mut Vec<u32>, out: &mut Vec<TreeVector>) {
    if partial.len() == n {
        out.push(TreeVector {
            entries: partial.clone(),
        });
        return;
    }
    let position = partial.len() + 1;
    let low = partial.last().copied().unwrap_or(1);
    for e in low..=position as u32 {
        partial.push(e);
        enumerate_rec(n, partial, out);
        partial.pop();
    }
}

/// Index of the unique rotation of `steps` (+1 for `true`, -1 for `false`,
/// total sum +1) whose proper prefix sums are all positive: one past the
/// last minimum of the prefix sums.
fn dominating_rotation(steps: &[bool]) -> usize {
    let mut sum: i64 = 0;
    let mut min = i64::MAX;
    let mut argmin = 0;
    for (i, &up) in steps.iter().enumerate() {
        sum += if up { 1 } else { -1 };
        if sum <= min {
            min = sum;
            argmin = i;
        }
    }
    (argmin + 1) % steps.len()
}

/// Binary tree shape used only while converting sampled Dyck words.
enum Shape {
    Leaf,
    Node(Box<Shape>, Box<Shape>),
}

/// First-return decomposition: a nonempty word factors uniquely as
/// `U left D right` with `left`, `right` Dyck words.
fn parse_dyck(word: &[bool]) -> Result<Shape> {
    if word.is_empty() {
        return Ok(Shape::Leaf);
    }
    if !word[0] {
        return Err(Error::Invalid {
            what: "dyck word",
            reason: "leading down-step".into(),
        });
    }
    let mut depth = 0i64;
    for (i, &up) in word.iter().enumerate() {
        depth += if up { 1 } else { -1 };
        if depth == 0 {
            let left = parse_dyck(&word[1..i])?;
            let right = parse_dyck(&word[i + 1..])?;
            return Ok(Shape::Node(Box::new(left), Box::new(right)));
        }
    }
    Err(Error::Invalid {
        what: "dyck word",
        reason: "unbalanced".into(),
    })
}

impl Shape {
    /// Replay the merge schedule that always joins the rightmost available
    /// sibling pair; the one-based merge positions, reversed, are exactly the
    /// vector entries (positions recorded late sit early in the vector, so
    /// the nondecreasing constraint holds by construction).
    fn to_merge_positions(&self) -> Vec<u32> {
        // Arena of parent links; leaves collected left to right.
        let mut parents: Vec<usize> = Vec::new();
        let mut blocks: Vec<usize> = Vec::new();
        build_arena(self, usize::MAX, &mut parents, &mut blocks);
        let n = blocks.len() - 1;
        let mut positions = Vec::with_capacity(n);
        for _ in 0..n {
            let mut i = blocks.len() - 2;
            loop {
                let (a, b) = (blocks[i], blocks[i + 1]);
                if parents[a] != usize::MAX && parents[a] == parents[b] {
                    positions.push((i + 1) as u32);
                    blocks[i] = parents[a];
                    blocks.remove(i + 1);
                    break;
                }
                i -= 1;
            }
        }
        positions.reverse();
        positions
    }
}

fn build_arena(shape: &Shape, parent: usize, parents: &mut Vec<usize>, leaves: &mut Vec<usize>) {
    let id = parents.len();
    parents.push(parent);
    match shape {
        Shape::Leaf => leaves.push(id),
        Shape::Node(l, r) => {
            build_arena(l, id, parents, leaves);
            build_arena(r, id, parents, leaves);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn validation_accepts_known_good_vectors() {
        for good in [
            vec![],
            vec![1],
            vec![1, 1],
            vec![1, 2],
            vec![1, 1, 2, 2, 3, 6, 6],
        ] {
            assert!(TreeVector::is_valid(&good), "{good:?}");
            TreeVector::new(good).unwrap();
        }
    }

    #[test]
    fn validation_rejects_known_bad_vectors() {
        for bad in [
            vec![2],
            vec![0],
            vec![1, 3],
            vec![2, 1],
            vec![1, 2, 1],
            vec![1, 1, 2, 2, 3, 7, 7],
        ] {
            assert!(!TreeVector::is_valid(&bad), "{bad:?}");
            assert!(TreeVector::new(bad).is_err());
        }
    }

    #[test]
    fn enumeration_matches_frozen_small_cases() {
        let n2: Vec<Vec<u32>> = TreeVector::enumerate(2)
            .unwrap()
            .into_iter()
            .map(|t| t.entries().to_vec())
            .collect();
        assert_eq!(n2, vec![vec![1, 1], vec![1, 2]]);

        let n3: Vec<Vec<u32>> = TreeVector::enumerate(3)
            .unwrap()
            .into_iter()
            .map(|t| t.entries().to_vec())
            .collect();
        assert_eq!(
            n3,
            vec![
                vec![1, 1, 1],
                vec![1, 1, 2],
                vec![1, 1, 3],
                vec![1, 2, 2],
                vec![1, 2, 3],
            ]
        );
    }

    #[test]
    fn enumeration_counts_match_catalan_numbers() {
        // Frozen reference values, independent of the closed formula below.
        let expected: [u128; 9] = [1, 1, 2, 5, 14, 42, 132, 429, 1430];
        for (n, &want) in expected.iter().enumerate() {
            assert_eq!(catalan(n as u32), want, "catalan({n})");
            let trees = TreeVector::enumerate(n).unwrap();
            assert_eq!(trees.len() as u128, want, "enumeration count at n={n}");
            for t in &trees {
                assert!(TreeVector::is_valid(t.entries()));
            }
        }
    }

    #[test]
    fn enumeration_is_strictly_lexicographic_and_duplicate_free() {
        let trees = TreeVector::enumerate(6).unwrap();
        for w in trees.windows(2) {
            assert!(w[0].entries() < w[1].entries());
        }
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        assert!(TreeVector::enumerate(DEFAULT_ENUMERATION_CAP + 1).is_err());
        assert!(TreeVector::enumerate_with_cap(13, 13).is_ok());
    }

    #[test]
    fn catalan_large_values_stay_exact() {
        assert_eq!(catalan(20), 6_564_120_420);
        assert_eq!(catalan(30), 3_814_986_502_092_304);
    }

    #[test]
    fn sampler_outputs_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [0usize, 1, 2, 3, 5, 8, 20, 100] {
            for _ in 0..50 {
                let t = TreeVector::sample(n, &mut rng).unwrap();
                assert_eq!(t.len(), n);
                assert!(TreeVector::is_valid(t.entries()));
            }
        }
    }

    #[test]
    fn sampler_hits_every_tree_at_n4() {
        // 14 shapes; 5000 draws make a miss astronomically unlikely.
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let all = TreeVector::enumerate(4).unwrap();
        let mut seen = vec![0usize; all.len()];
        for _ in 0..5000 {
            let t = TreeVector::sample(4, &mut rng).unwrap();
            let idx = all.iter().position(|u| *u == t).unwrap();
            seen[idx] += 1;
        }
        assert!(seen.iter().all(|&c| c > 0), "counts {seen:?}");
    }

    #[test]
    fn dominating_rotation_prefixes_stay_positive() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1usize..=40 {
            let mut steps = vec![true; n + 1];
            steps.extend(std::iter::repeat_n(false, n));
            steps.shuffle(&mut rng);
            let start = dominating_rotation(&steps);
            let mut sum = 0i64;
            for k in 0..steps.len() {
                sum += if steps[(start + k) % steps.len()] { 1 } else { -1 };
                assert!(sum > 0, "prefix sum dropped at offset {k} (n={n})");
            }
        }
    }

    #[test]
    fn display_and_parse_round_trip() {
        for entries in [vec![], vec![1], vec![1, 1, 2, 2, 3, 6, 6]] {
            let t = TreeVector::new(entries).unwrap();
            assert_eq!(TreeVector::parse(&t.to_string()).unwrap(), t);
        }
        assert_eq!(TreeVector::parse(" [ 1 , 2 ] ").unwrap().entries(), &[1, 2]);
        assert!(TreeVector::parse("1,2").is_err());
        assert!(TreeVector::parse("[2,1]").is_err());
        assert!(TreeVector::parse("[1,x]").is_err());
    }

    proptest! {
        #[test]
        fn prop_sampled_vectors_satisfy_constraints(n in 0usize..64, seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let t = TreeVector::sample(n, &mut rng).unwrap();
            prop_assert_eq!(t.len(), n);
            prop_assert!(TreeVector::is_valid(t.entries()));
        }

        #[test]
        fn prop_parse_rejects_or_round_trips(s in "\\PC*") {
            if let Ok(t) = TreeVector::parse(&s) {
                let printed = t.to_string();
                prop_assert_eq!(TreeVector::parse(&printed).unwrap(), t);
            }
        }
    }
}
