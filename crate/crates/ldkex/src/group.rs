//! Group-based platforms: conjugacy-style left distributive operations on
//! symmetric groups, `GL(2, p)`, and direct products.
//!
//! Five operation families are provided. With `f` an endomorphism:
//!
//! ```text
//! conjugation            x * y = x^-1 y x
//! reverse conjugation    x * y = x y x^-1
//! symmetric conjugacy    x * y = x y^-1 x
//! ld conjugacy           x * y = f(x^-1 y) x       any endomorphism
//! f-symmetric conjugacy  x * y = f(x y^-1) x       f idempotent only
//! ```
//!
//! Each is left self-distributive; `f(x y^-1) x` genuinely requires
//! `f(f(v)) = f(v)`, which is why non-projector endomorphisms are rejected
//! for it at construction. Distinct operations from this menu are *not*
//! mutually distributive in general, so pool validation only accepts the
//! same single operation in both pools.

use rand::Rng;
use rand::RngCore;

use crate::error::{Error, Result};
use crate::magma::{OpId, Platform, Pool};
use crate::perm::Permutation;

/// Degree cap for symmetric group platforms.
pub const MAX_SYM_DEGREE: usize = 32;

/// Moduli for matrix platforms must be primes below this bound, keeping
/// products inside `u64`.
pub const MAX_GL2_PRIME: u64 = 1 << 31;

// --- elements ---

/// A 2x2 matrix of residues; the modulus lives in the owning [`Group`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat2 {
    /// Row major: `[[e[0], e[1]], [e[2], e[3]]]`.
    pub entries: [u64; 4],
}

impl Mat2 {
    pub fn new(a: u64, b: u64, c: u64, d: u64) -> Self {
        Mat2 {
            entries: [a, b, c, d],
        }
    }

    pub fn identity() -> Self {
        Mat2::new(1, 0, 0, 1)
    }

    pub fn mul(&self, other: &Mat2, p: u64) -> Mat2 {
        let [a, b, c, d] = self.entries;
        let [e, f, g, h] = other.entries;
        Mat2::new(
            (a * e + b * g) % p,
            (a * f + b * h) % p,
            (c * e + d * g) % p,
            (c * f + d * h) % p,
        )
    }

    pub fn det(&self, p: u64) -> u64 {
        let [a, b, c, d] = self.entries;
        // a*d + p^2 - b*c stays positive before reduction.
        (a * d % p + p - b * c % p) % p
    }

    /// Inverse modulo a prime `p`; errors on singular matrices.
    pub fn inverse(&self, p: u64) -> Result<Mat2> {
        let det = self.det(p);
        if det == 0 {
            return Err(Error::Domain("singular matrix has no inverse".into()));
        }
        let inv_det = mod_pow(det, p - 2, p);
        let [a, b, c, d] = self.entries;
        Ok(Mat2::new(
            d * inv_det % p,
            (p - b % p) % p * inv_det % p,
            (p - c % p) % p * inv_det % p,
            a * inv_det % p,
        ))
    }

    /// Parse `[[a,b],[c,d]]` with arbitrary whitespace.
    pub fn parse(s: &str) -> Result<Mat2> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix("[[")
            .and_then(|t| t.strip_suffix("]]"))
            .ok_or_else(|| Error::Parse(format!("matrix must look like [[a,b],[c,d]], got {s:?}")))?;
        let rows: Vec<&str> = inner.split("],[").collect();
        if rows.len() != 2 {
            return Err(Error::Parse(format!("matrix needs two rows, got {s:?}")));
        }
        let mut entries = [0u64; 4];
        for (r, row) in rows.iter().enumerate() {
            let cols: Vec<&str> = row.split(',').collect();
            if cols.len() != 2 {
                return Err(Error::Parse(format!("matrix rows need two entries, got {s:?}")));
            }
            for (c, tok) in cols.iter().enumerate() {
                entries[r * 2 + c] = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad matrix entry {tok:?}")))?;
            }
        }
        Ok(Mat2 { entries })
    }
}

impl std::fmt::Display for Mat2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let [a, b, c, d] = self.entries;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of a [`Group`]; the variant must match the group shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupElement {
    Perm(Permutation),
    Mat(Mat2),
    Pair(Box<GroupElement>, Box<GroupElement>),
}

impl GroupElement {
    pub fn pair(left: GroupElement, right: GroupElement) -> Self {
        GroupElement::Pair(Box::new(left), Box::new(right))
    }
}

impl std::fmt::Display for GroupElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupElement::Perm(p) => write!(f, "{p}"),
            GroupElement::Mat(m) => write!(f, "{m}"),
            GroupElement::Pair(l, r) => write!(f, "({l} ; {r})"),
        }
    }
}

// --- groups ---

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Group {
    /// Symmetric group on `degree` points.
    Sym { degree: usize },
    /// Invertible 2x2 matrices over the prime field `F_prime`.
    Gl2 { prime: u64 },
    /// Direct product; elements are pairs.
    Product(Box<Group>, Box<Group>),
}

impl Group {
    pub fn sym(degree: usize) -> Result<Group> {
        if !(1..=MAX_SYM_DEGREE).contains(&degree) {
            return Err(Error::SizeLimit {
                what: "symmetric group degree",
                got: degree,
                cap: MAX_SYM_DEGREE,
            });
        }
        Ok(Group::Sym { degree })
    }

    pub fn gl2(prime: u64) -> Result<Group> {
        if prime >= MAX_GL2_PRIME {
            return Err(Error::SizeLimit {
                what: "matrix modulus",
                got: prime as usize,
                cap: MAX_GL2_PRIME as usize,
            });
        }
        if !is_prime(prime) {
            return Err(Error::Invalid {
                what: "matrix modulus",
                reason: format!("{prime} is not prime"),
            });
        }
        Ok(Group::Gl2 { prime })
    }

    pub fn product(left: Group, right: Group) -> Group {
        Group::Product(Box::new(left), Box::new(right))
    }

    pub fn name(&self) -> String {
        match self {
            Group::Sym { degree } => format!("S{degree}"),
            Group::Gl2 { prime } => format!("GL2({prime})"),
            Group::Product(l, r) => format!("{} x {}", l.name(), r.name()),
        }
    }

    pub fn identity(&self) -> GroupElement {
        match self {
            Group::Sym { degree } => GroupElement::Perm(Permutation::identity(*degree)),
            Group::Gl2 { .. } => GroupElement::Mat(Mat2::identity()),
            Group::Product(l, r) => GroupElement::pair(l.identity(), r.identity()),
        }
    }

    /// Check that `x` has the right shape and canonical in-range content.
    pub fn validate(&self, x: &GroupElement) -> Result<()> {
        match (self, x) {
            (Group::Sym { degree }, GroupElement::Perm(p)) => {
                if p.degree() != *degree {
                    return Err(Error::Domain(format!(
                        "permutation degree {} in {}",
                        p.degree(),
                        self.name()
                    )));
                }
                Ok(())
            }
            (Group::Gl2 { prime }, GroupElement::Mat(m)) => {
                if m.entries.iter().any(|&e| e >= *prime) {
                    return Err(Error::Domain(format!(
                        "matrix entries not reduced mod {prime}"
                    )));
                }
                if m.det(*prime) == 0 {
                    return Err(Error::Domain("matrix not invertible".into()));
                }
                Ok(())
            }
            (Group::Product(gl, gr), GroupElement::Pair(l, r)) => {
                gl.validate(l)?;
                gr.validate(r)
            }
            _ => Err(Error::Domain(format!(
                "element shape does not match group {}",
                self.name()
            ))),
        }
    }

    pub fn mul(&self, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
        match (self, x, y) {
            (Group::Sym { .. }, GroupElement::Perm(a), GroupElement::Perm(b)) => {
                Ok(GroupElement::Perm(a.then(b)))
            }
            (Group::Gl2 { prime }, GroupElement::Mat(a), GroupElement::Mat(b)) => {
                Ok(GroupElement::Mat(a.mul(b, *prime)))
            }
            (Group::Product(gl, gr), GroupElement::Pair(xl, xr), GroupElement::Pair(yl, yr)) => {
                Ok(GroupElement::pair(gl.mul(xl, yl)?, gr.mul(xr, yr)?))
            }
            _ => Err(Error::Domain(format!(
                "element shape does not match group {}",
                self.name()
            ))),
        }
    }

    pub fn inverse(&self, x: &GroupElement) -> Result<GroupElement> {
        match (self, x) {
            (Group::Sym { .. }, GroupElement::Perm(p)) => Ok(GroupElement::Perm(p.inverse())),
            (Group::Gl2 { prime }, GroupElement::Mat(m)) => Ok(GroupElement::Mat(m.inverse(*prime)?)),
            (Group::Product(gl, gr), GroupElement::Pair(l, r)) => {
                Ok(GroupElement::pair(gl.inverse(l)?, gr.inverse(r)?))
            }
            _ => Err(Error::Domain(format!(
                "element shape does not match group {}",
                self.name()
            ))),
        }
    }

    pub fn random(&self, rng: &mut dyn RngCore) -> GroupElement {
        match self {
            Group::Sym { degree } => GroupElement::Perm(Permutation::random(*degree, rng)),
            Group::Gl2 { prime } => loop {
                let m = Mat2::new(
                    rng.gen_range(0..*prime),
                    rng.gen_range(0..*prime),
                    rng.gen_range(0..*prime),
                    rng.gen_range(0..*prime),
                );
                if m.det(*prime) != 0 {
                    break GroupElement::Mat(m);
                }
            },
            Group::Product(l, r) => GroupElement::pair(l.random(rng), r.random(rng)),
        }
    }

    /// Central elements commute with everything; used to decide whether an
    /// inner endomorphism is idempotent.
    pub fn is_central(&self, x: &GroupElement) -> Result<bool> {
        self.validate(x)?;
        match (self, x) {
            (Group::Sym { degree }, GroupElement::Perm(p)) => {
                Ok(*degree <= 2 || p.is_identity())
            }
            (Group::Gl2 { .. }, GroupElement::Mat(m)) => {
                let [a, b, c, d] = m.entries;
                Ok(b == 0 && c == 0 && a == d)
            }
            (Group::Product(gl, gr), GroupElement::Pair(l, r)) => {
                Ok(gl.is_central(l)? && gr.is_central(r)?)
            }
            _ => unreachable!("validate checked the shape"),
        }
    }

    pub fn canonical_bytes(&self, x: &GroupElement) -> Result<Vec<u8>> {
        self.validate(x)?;
        let mut out = Vec::new();
        encode_element(x, &mut out);
        Ok(out)
    }

    /// Parse an element in display form: cycles for permutations,
    /// `[[a,b],[c,d]]` for matrices, `(left ; right)` for pairs.
    pub fn parse_element(&self, s: &str) -> Result<GroupElement> {
        let elem = self.parse_shaped(s.trim())?;
        self.validate(&elem)?;
        Ok(elem)
    }

    fn parse_shaped(&self, s: &str) -> Result<GroupElement> {
        match self {
            Group::Sym { degree } => Ok(GroupElement::Perm(Permutation::parse_cycles(s, *degree)?)),
            Group::Gl2 { .. } => Ok(GroupElement::Mat(Mat2::parse(s)?)),
            Group::Product(gl, gr) => {
                let inner = s
                    .strip_prefix('(')
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or_else(|| {
                        Error::Parse(format!("pair must look like (left ; right), got {s:?}"))
                    })?;
                let mut depth = 0i32;
                let mut split = None;
                for (i, c) in inner.char_indices() {
                    match c {
                        '(' | '[' => depth += 1,
                        ')' | ']' => depth -= 1,
                        ';' if depth == 0 => {
                            split = Some(i);
                            break;
                        }
                        _ => {}
                    }
                }
                let split =
                    split.ok_or_else(|| Error::Parse(format!("pair lacks a top-level ';': {s:?}")))?;
                Ok(GroupElement::pair(
                    gl.parse_shaped(inner[..split].trim())?,
                    gr.parse_shaped(inner[split + 1..].trim())?,
                ))
            }
        }
    }
}

fn encode_element(x: &GroupElement, out: &mut Vec<u8>) {
    match x {
        GroupElement::Perm(p) => {
            out.push(0x01);
            out.push(p.degree() as u8);
            out.extend(p.images().iter().map(|&i| i as u8));
        }
        GroupElement::Mat(m) => {
            out.push(0x02);
            for e in m.entries {
                out.extend(e.to_be_bytes());
            }
        }
        GroupElement::Pair(l, r) => {
            out.push(0x03);
            encode_element(l, out);
            encode_element(r, out);
        }
    }
}

// --- endomorphisms and operations ---

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Endomorphism {
    Identity,
    /// `x -> g^-1 x g`.
    Inner(GroupElement),
    /// `(h, k) -> (h, e)`; product groups only.
    ProjectLeft,
    /// `(h, k) -> (e, k)`; product groups only.
    ProjectRight,
}

impl Endomorphism {
    pub fn validate(&self, group: &Group) -> Result<()> {
        match self {
            Endomorphism::Identity => Ok(()),
            Endomorphism::Inner(g) => group.validate(g),
            Endomorphism::ProjectLeft | Endomorphism::ProjectRight => match group {
                Group::Product(..) => Ok(()),
                _ => Err(Error::Config(format!(
                    "projection endomorphism needs a product group, got {}",
                    group.name()
                ))),
            },
        }
    }

    pub fn apply(&self, group: &Group, x: &GroupElement) -> Result<GroupElement> {
        match self {
            Endomorphism::Identity => Ok(x.clone()),
            Endomorphism::Inner(g) => {
                group.mul(&group.mul(&group.inverse(g)?, x)?, g)
            }
            Endomorphism::ProjectLeft => match (group, x) {
                (Group::Product(_, gr), GroupElement::Pair(l, _)) => {
                    Ok(GroupElement::pair(l.as_ref().clone(), gr.identity()))
                }
                _ => Err(Error::Domain("projection applied outside a product".into())),
            },
            Endomorphism::ProjectRight => match (group, x) {
                (Group::Product(gl, _), GroupElement::Pair(_, r)) => {
                    Ok(GroupElement::pair(gl.identity(), r.as_ref().clone()))
                }
                _ => Err(Error::Domain("projection applied outside a product".into())),
            },
        }
    }

    /// Idempotent endomorphisms only qualify for f-symmetric conjugacy.
    /// Inner endomorphisms are idempotent exactly when the conjugator is
    /// central (in which case they are the identity map).
    pub fn is_projector(&self, group: &Group) -> Result<bool> {
        match self {
            Endomorphism::Identity => Ok(true),
            Endomorphism::ProjectLeft | Endomorphism::ProjectRight => Ok(true),
            Endomorphism::Inner(g) => group.is_central(g),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Endomorphism::Identity => "id".into(),
            Endomorphism::Inner(g) => format!("inner({g})"),
            Endomorphism::ProjectLeft => "proj-left".into(),
            Endomorphism::ProjectRight => "proj-right".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupOp {
    /// `x^-1 y x`
    Conjugation,
    /// `x y x^-1`
    ConjugationRev,
    /// `x y^-1 x`
    SymmetricConjugacy,
    /// `f(x^-1 y) x`
    LdConjugacy(Endomorphism),
    /// `f(x y^-1) x`; `f` must be a projector.
    FSymmetricConjugacy(Endomorphism),
}

impl GroupOp {
    pub fn validate(&self, group: &Group) -> Result<()> {
        match self {
            GroupOp::Conjugation | GroupOp::ConjugationRev | GroupOp::SymmetricConjugacy => Ok(()),
            GroupOp::LdConjugacy(f) => f.validate(group),
            GroupOp::FSymmetricConjugacy(f) => {
                f.validate(group)?;
                if !f.is_projector(group)? {
                    return Err(Error::Config(format!(
                        "f-symmetric conjugacy needs an idempotent endomorphism, {} is not",
                        f.name()
                    )));
                }
                Ok(())
            }
        }
    }

    pub fn apply(&self, group: &Group, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
        match self {
            GroupOp::Conjugation => group.mul(&group.mul(&group.inverse(x)?, y)?, x),
            GroupOp::ConjugationRev => group.mul(&group.mul(x, y)?, &group.inverse(x)?),
            GroupOp::SymmetricConjugacy => group.mul(&group.mul(x, &group.inverse(y)?)?, x),
            GroupOp::LdConjugacy(f) => {
                let v = group.mul(&group.inverse(x)?, y)?;
                group.mul(&f.apply(group, &v)?, x)
            }
            GroupOp::FSymmetricConjugacy(f) => {
                let v = group.mul(x, &group.inverse(y)?)?;
                group.mul(&f.apply(group, &v)?, x)
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            GroupOp::Conjugation => "conj".into(),
            GroupOp::ConjugationRev => "conj-rev".into(),
            GroupOp::SymmetricConjugacy => "sym".into(),
            GroupOp::LdConjugacy(f) => format!("ld[{}]", f.name()),
            GroupOp::FSymmetricConjugacy(f) => format!("fsym[{}]", f.name()),
        }
    }
}

/// Platform over one group, one operation per pool.
///
/// Not every pair from the menu above is mutually distributive: conjugation
/// already fails against the symmetric variant. Construction is therefore
/// limited to combinations whose laws hold identically: the same operation
/// in both pools, or conjugation paired with reverse conjugation (both sides
/// of either law reduce to the same conjugate).
#[derive(Debug, Clone)]
pub struct GroupPlatform {
    group: Group,
    op_a: GroupOp,
    op_b: GroupOp,
}

fn pools_compatible(op_a: &GroupOp, op_b: &GroupOp) -> bool {
    op_a == op_b
        || matches!(
            (op_a, op_b),
            (GroupOp::Conjugation, GroupOp::ConjugationRev)
                | (GroupOp::ConjugationRev, GroupOp::Conjugation)
        )
}

impl GroupPlatform {
    /// The same operation in both pools.
    pub fn new(group: Group, op: GroupOp) -> Result<Self> {
        op.validate(&group)?;
        Ok(GroupPlatform {
            group,
            op_a: op.clone(),
            op_b: op,
        })
    }

    /// Build from explicit pools, rejecting unsupported combinations.
    pub fn with_pools(group: Group, pool_a: Vec<GroupOp>, pool_b: Vec<GroupOp>) -> Result<Self> {
        if pool_a.len() != 1 || pool_b.len() != 1 {
            return Err(Error::Config(
                "group pools hold exactly one operation each".into(),
            ));
        }
        let op_a = pool_a.into_iter().next().expect("length checked");
        let op_b = pool_b.into_iter().next().expect("length checked");
        if !pools_compatible(&op_a, &op_b) {
            return Err(Error::Config(format!(
                "operations {} and {} are not mutually distributive; supported pool \
                 pairs: any operation with itself, or conj with conj-rev (either order)",
                op_a.name(),
                op_b.name()
            )));
        }
        op_a.validate(&group)?;
        op_b.validate(&group)?;
        Ok(GroupPlatform { group, op_a, op_b })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    /// The operation backing the given pool.
    pub fn pool_op(&self, pool: Pool) -> &GroupOp {
        match pool {
            Pool::A => &self.op_a,
            Pool::B => &self.op_b,
        }
    }
}

impl Platform for GroupPlatform {
    type Elem = GroupElement;

    fn pool_size(&self, _pool: Pool) -> usize {
        1
    }

    fn apply(&self, op: OpId, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
        self.validate_op(op)?;
        self.pool_op(op.pool).apply(&self.group, x, y)
    }

    fn random_element(&self, rng: &mut dyn RngCore) -> GroupElement {
        self.group.random(rng)
    }

    fn elems_equal(&self, x: &GroupElement, y: &GroupElement) -> Result<bool> {
        Ok(x == y)
    }

    fn canonical_bytes(&self, x: &GroupElement) -> Result<Vec<u8>> {
        self.group.canonical_bytes(x)
    }

    fn display_elem(&self, x: &GroupElement) -> String {
        x.to_string()
    }

    fn op_name(&self, op: OpId) -> String {
        self.pool_op(op.pool).name()
    }

    fn describe(&self) -> String {
        if self.op_a == self.op_b {
            format!("group {} op={}", self.group.name(), self.op_a.name())
        } else {
            format!(
                "group {} ops=({},{})",
                self.group.name(),
                self.op_a.name(),
                self.op_b.name()
            )
        }
    }
}
