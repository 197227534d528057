//! Laver tables: the finite left distributive tables on `{1, ..., 2^n}`.
//!
//! The table of level `n` is the unique binary operation `*` on
//! `{1, ..., 2^n}` satisfying `k * 1 = k + 1` (cyclically, so `2^n * 1 = 1`)
//! and the recurrence `k * (l * 1) = (k * l) * (k * 1)`, which pins down
//! `k * (l + 1) = (k * l) * (k + 1)` for `l < 2^n`. Left distributivity
//! `k * (l * m) = (k * l) * (k * m)` holds for every triple.
//!
//! Construction fills rows bottom up. Row `2^n` is the identity row, and for
//! `k < 2^n` every entry of row `k` lies in `{k + 1, ..., 2^n}`, so the
//! recurrence only consults rows strictly below the one being filled.

use rand::RngCore;

use crate::error::{Error, Result};
use crate::magma::{OpId, Platform, Pool};

/// Default cap on the level; `build` allocates `4^level` entries.
pub const DEFAULT_LAVER_LEVEL_CAP: u32 = 10;

/// Absolute cap, a 64 MiB allocation.
pub const MAX_LAVER_LEVEL: u32 = 12;

#[derive(Debug, Clone)]
pub struct LaverTable {
    level: u32,
    size: u32,
    /// Row-major, `entries[(k-1) * size + (l-1)] = k * l`, values one-based.
    entries: Vec<u32>,
}

impl LaverTable {
    /// Build the level-`n` table, refusing levels above
    /// [`DEFAULT_LAVER_LEVEL_CAP`].
    pub fn build(level: u32) -> Result<Self> {
        Self::build_with_cap(level, DEFAULT_LAVER_LEVEL_CAP)
    }

    /// Build with an explicit cap (still bounded by [`MAX_LAVER_LEVEL`]).
    pub fn build_with_cap(level: u32, cap: u32) -> Result<Self> {
        let cap = cap.min(MAX_LAVER_LEVEL);
        if level > cap {
            return Err(Error::SizeLimit {
                what: "laver table level",
                got: level as usize,
                cap: cap as usize,
            });
        }
        let size = 1u32 << level;
        let n = size as usize;
        let mut entries = vec![0u32; n * n];
        let idx = |k: u32, l: u32| ((k - 1) as usize) * n + (l - 1) as usize;
        for l in 1..=size {
            entries[idx(size, l)] = l;
        }
        for k in (1..size).rev() {
            entries[idx(k, 1)] = k + 1;
            for l in 1..size {
                let kl = entries[idx(k, l)];
                entries[idx(k, l + 1)] = entries[idx(kl, k + 1)];
            }
        }
        Ok(LaverTable {
            level,
            size,
            entries,
        })
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// Carrier size `2^level`.
    pub fn size(&self) -> u32 {
        self.size
    }

    /// `k * l` with one-based arguments.
    pub fn apply(&self, k: u32, l: u32) -> Result<u32> {
        if k == 0 || k > self.size || l == 0 || l > self.size {
            return Err(Error::Domain(format!(
                "laver arguments ({k}, {l}) outside 1..={}",
                self.size
            )));
        }
        Ok(self.entries[((k - 1) as usize) * self.size as usize + (l - 1) as usize])
    }

    /// Row `k` as a slice of `k * 1, k * 2, ...`.
    pub fn row(&self, k: u32) -> &[u32] {
        let n = self.size as usize;
        &self.entries[(k - 1) as usize * n..(k as usize) * n]
    }

    /// Plain text grid: one row per line, entries space separated and
    /// right-aligned.
    pub fn render_grid(&self) -> String {
        let width = self.size.to_string().len();
        let mut out = String::new();
        for k in 1..=self.size {
            let mut line = String::new();
            for (i, e) in self.row(k).iter().enumerate() {
                if i > 0 {
                    line.push(' ');
                }
                line.push_str(&format!("{e:>width$}"));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

/// Platform over one Laver table. Both pools consist of the single table
/// operation.
#[derive(Debug, Clone)]
pub struct LaverPlatform {
    table: LaverTable,
}

impl LaverPlatform {
    pub fn new(table: LaverTable) -> Self {
        LaverPlatform { table }
    }

    pub fn table(&self) -> &LaverTable {
        &self.table
    }
}

impl Platform for LaverPlatform {
    type Elem = u32;

    fn pool_size(&self, _pool: Pool) -> usize {
        1
    }

    fn apply(&self, op: OpId, x: &u32, y: &u32) -> Result<u32> {
        self.validate_op(op)?;
        self.table.apply(*x, *y)
    }

    fn random_element(&self, rng: &mut dyn RngCore) -> u32 {
        // Uniform over 1..=size via rejection-free masking: size is a power
        // of two.
        (rng.next_u64() % self.table.size as u64) as u32 + 1
    }

    fn elems_equal(&self, x: &u32, y: &u32) -> Result<bool> {
        Ok(x == y)
    }

    fn canonical_bytes(&self, x: &u32) -> Result<Vec<u8>> {
        Ok(x.to_be_bytes().to_vec())
    }

    fn display_elem(&self, x: &u32) -> String {
        x.to_string()
    }

    fn op_name(&self, op: OpId) -> String {
        format!("*{}", op.pool.letter().to_ascii_lowercase())
    }

    fn describe(&self) -> String {
        format!("laver level={}", self.table.level)
    }

    fn carrier(&self) -> Option<Vec<u32>> {
        Some((1..=self.table.size).collect())
    }
}
