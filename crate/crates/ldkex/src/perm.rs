//! Permutations on `{1, ..., d}`, stored as zero-based image arrays.
//!
//! Composition reads left to right: `a.then(b)` applies `a` first. This
//! matches braid word order, where the leftmost letter acts first.

use rand::RngCore;

use crate::error::{Error, Result};

pub const MAX_PERM_DEGREE: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    /// `images[i]` is the zero-based image of point `i`.
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// Validate that `images` is a bijection on `0..degree`.
    pub fn from_images(images: Vec<u16>) -> Result<Self> {
        if images.len() > MAX_PERM_DEGREE {
            return Err(Error::SizeLimit {
                what: "permutation degree",
                got: images.len(),
                cap: MAX_PERM_DEGREE,
            });
        }
        let mut seen = vec![false; images.len()];
        for &img in &images {
            let i = img as usize;
            if i >= images.len() || seen[i] {
                return Err(Error::Invalid {
                    what: "permutation",
                    reason: format!("image array {images:?} is not a bijection"),
                });
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// The adjacent transposition swapping zero-based points `i` and `i + 1`.
    pub fn transposition(degree: usize, i: usize) -> Self {
        debug_assert!(i + 1 < degree);
        let mut p = Permutation::identity(degree);
        p.images.swap(i, i + 1);
        p
    }

    /// Uniformly random permutation (Fisher-Yates).
    pub fn random(degree: usize, rng: &mut dyn RngCore) -> Self {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for i in (1..degree).rev() {
            let j = (rng.next_u64() % (i as u64 + 1)) as usize;
            images.swap(i, j);
        }
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Zero-based image of zero-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    /// `self` then `other`: `(self.then(other))(i) = other(self(i))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u16; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u16;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i as u16 == img)
    }

    /// Extend to a larger degree, fixing the new points.
    pub fn extended(&self, degree: usize) -> Permutation {
        debug_assert!(degree >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.images.len() as u16..degree as u16);
        Permutation { images }
    }

    /// Number of inversions, the Coxeter length.
    pub fn inversions(&self) -> usize {
        let mut count = 0;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Nontrivial cycles as zero-based point lists, each rotated to start at
    /// its smallest point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut cycles = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.apply(cur);
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Parse disjoint cycle notation with one-based points, e.g.
    /// `(1 3 2)(4 5)`; `()` is the identity. Points must not exceed
    /// `degree`.
    pub fn parse_cycles(s: &str, degree: usize) -> Result<Self> {
        if degree > MAX_PERM_DEGREE {
            return Err(Error::SizeLimit {
                what: "permutation degree",
                got: degree,
                cap: MAX_PERM_DEGREE,
            });
        }
        let s = s.trim();
        let mut images: Vec<u16> = (0..degree as u16).collect();
        let mut used = vec![false; degree];
        let mut rest = s;
        let mut any = false;
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in cycles {s:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {s:?}")))?;
            let body = &open[..close];
            rest = open[close + 1..].trim_start();
            any = true;
            let points = body
                .split_whitespace()
                .map(|tok| {
                    let p: usize = tok
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad cycle point {tok:?}")))?;
                    if p == 0 || p > degree {
                        return Err(Error::Parse(format!(
                            "cycle point {p} outside 1..={degree}"
                        )));
                    }
                    Ok(p - 1)
                })
                .collect::<Result<Vec<usize>>>()?;
            if points.is_empty() {
                continue;
            }
            if points.len() == 1 {
                return Err(Error::Parse("cycles of length one are not written".into()));
            }
            for &p in &points {
                if used[p] {
                    return Err(Error::Parse(format!("point {} repeated", p + 1)));
                }
                used[p] = true;
            }
            for w in 0..points.len() {
                images[points[w]] = points[(w + 1) % points.len()] as u16;
            }
        }
        if !any {
            return Err(Error::Parse("empty cycle expression".into()));
        }
        Ok(Permutation { images })
    }
}

/// Disjoint cycle notation with one-based points; identity prints `()`.
impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}
