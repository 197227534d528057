//! Machine checks of the mutual left distributivity laws.
//!
//! For an operation pair `(*a, *b)` the two directions checked on a triple
//! `(x, y, z)` are
//!
//! ```text
//! x *a (y *b z) = (x *a y) *b (x *a z)
//! x *b (y *a z) = (x *b y) *a (x *b z)
//! ```
//!
//! Checks report violations instead of failing fast so that deliberately
//! broken configurations can be inspected.

use rand::RngCore;

use crate::error::Result;
use crate::magma::{OpId, Platform, Pool};

/// Which of the two distributivity directions failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LdDirection {
    /// `op_a` distributes over `op_b`: the first law above.
    AOverB,
    /// `op_b` distributes over `op_a`: the second law above.
    BOverA,
}

/// One failed triple, with both sides rendered for the report.
#[derive(Debug, Clone)]
pub struct LdViolation {
    pub op_a: OpId,
    pub op_b: OpId,
    pub direction: LdDirection,
    pub triple: [String; 3],
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of checking one operation pair over a set of triples. At most a
/// capped number of violations are recorded in full; the count is exact.
#[derive(Debug, Clone, Default)]
pub struct LdCheck {
    pub triples_checked: usize,
    pub violation_count: usize,
    pub recorded: Vec<LdViolation>,
}

impl LdCheck {
    pub fn holds(&self) -> bool {
        self.violation_count == 0
    }
}

/// Check both distributivity directions of `(op_a, op_b)` on the given
/// triples. At most `record_cap` violations are kept verbatim.
pub fn check_mutual_ld<P: Platform + ?Sized>(
    platform: &P,
    op_a: OpId,
    op_b: OpId,
    triples: impl Iterator<Item = (P::Elem, P::Elem, P::Elem)>,
    record_cap: usize,
) -> Result<LdCheck> {
    let mut check = LdCheck::default();
    for (x, y, z) in triples {
        check.triples_checked += 1;
        for direction in [LdDirection::AOverB, LdDirection::BOverA] {
            let (outer, inner) = match direction {
                LdDirection::AOverB => (op_a, op_b),
                LdDirection::BOverA => (op_b, op_a),
            };
            let lhs = platform.apply(outer, &x, &platform.apply(inner, &y, &z)?)?;
            let rhs = platform.apply(
                inner,
                &platform.apply(outer, &x, &y)?,
                &platform.apply(outer, &x, &z)?,
            )?;
            if !platform.elems_equal(&lhs, &rhs)? {
                check.violation_count += 1;
                if check.recorded.len() < record_cap {
                    check.recorded.push(LdViolation {
                        op_a,
                        op_b,
                        direction,
                        triple: [
                            platform.display_elem(&x),
                            platform.display_elem(&y),
                            platform.display_elem(&z),
                        ],
                        lhs: platform.display_elem(&lhs),
                        rhs: platform.display_elem(&rhs),
                    });
                }
            }
        }
    }
    Ok(check)
}

/// One line of a campaign report: a single operation pair.
#[derive(Debug, Clone)]
pub struct CampaignLine {
    pub op_a: OpId,
    pub op_b: OpId,
    pub label: String,
    pub triples_checked: usize,
    pub violations: usize,
    /// First recorded violation, rendered, if any.
    pub sample: Option<String>,
}

/// Results of checking every pair in `pool A x pool B`.
#[derive(Debug, Clone, Default)]
pub struct CampaignReport {
    pub lines: Vec<CampaignLine>,
}

impl CampaignReport {
    pub fn all_hold(&self) -> bool {
        self.lines.iter().all(|l| l.violations == 0)
    }

    pub fn total_violations(&self) -> usize {
        self.lines.iter().map(|l| l.violations).sum()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            out.push_str(&format!(
                "{}: {} triples, {} violations\n",
                line.label, line.triples_checked, line.violations
            ));
            if let Some(sample) = &line.sample {
                out.push_str(&format!("  first violation: {sample}\n"));
            }
        }
        out.push_str(if self.all_hold() {
            "all laws hold\n"
        } else {
            "LAW VIOLATIONS FOUND\n"
        });
        out
    }
}

fn violation_line(v: &LdViolation) -> String {
    let dir = match v.direction {
        LdDirection::AOverB => "first over second",
        LdDirection::BOverA => "second over first",
    };
    format!(
        "({}) on x={} y={} z={}: lhs={} rhs={}",
        dir, v.triple[0], v.triple[1], v.triple[2], v.lhs, v.rhs
    )
}

fn campaign_line<P: Platform + ?Sized>(
    platform: &P,
    op_a: OpId,
    op_b: OpId,
    check: &LdCheck,
) -> CampaignLine {
    CampaignLine {
        op_a,
        op_b,
        label: format!(
            "({}, {})",
            platform.op_name(op_a),
            platform.op_name(op_b)
        ),
        triples_checked: check.triples_checked,
        violations: check.violation_count,
        sample: check.recorded.first().map(violation_line),
    }
}

/// Check every operation pair on `triples` random triples per pair.
pub fn random_campaign<P: Platform + ?Sized>(
    platform: &P,
    triples: usize,
    rng: &mut dyn RngCore,
) -> Result<CampaignReport> {
    let mut report = CampaignReport::default();
    for op_a in platform.pool_ops(Pool::A) {
        for op_b in platform.pool_ops(Pool::B) {
            let batch: Vec<_> = (0..triples)
                .map(|_| {
                    (
                        platform.random_element(rng),
                        platform.random_element(rng),
                        platform.random_element(rng),
                    )
                })
                .collect();
            let check = check_mutual_ld(platform, op_a, op_b, batch.into_iter(), 3)?;
            report.lines.push(campaign_line(platform, op_a, op_b, &check));
        }
    }
    Ok(report)
}

/// Check every operation pair on the full carrier cubed. Requires a platform
/// that exposes its carrier.
pub fn exhaustive_campaign<P: Platform + ?Sized>(platform: &P) -> Result<CampaignReport> {
    let carrier = platform.carrier().ok_or_else(|| {
        crate::error::Error::Config("exhaustive law check needs an enumerable carrier".into())
    })?;
    let mut report = CampaignReport::default();
    for op_a in platform.pool_ops(Pool::A) {
        for op_b in platform.pool_ops(Pool::B) {
            let all = &carrier;
            let n = all.len();
            let triples = (0..n).flat_map(move |i| {
                (0..n).flat_map(move |j| {
                    (0..n).map(move |k| (all[i].clone(), all[j].clone(), all[k].clone()))
                })
            });
            let check = check_mutual_ld(platform, op_a, op_b, triples, 3)?;
            report.lines.push(campaign_line(platform, op_a, op_b, &check));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Result;
    use rand::Rng;
    use rand::RngCore;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Pool A: max. Pool B: op 0 is min (mutually distributive with max over
    /// a chain), op 1 is saturating addition, which fails distributivity.
    struct Lattice;

    impl Platform for Lattice {
        type Elem = u8;

        fn pool_size(&self, pool: Pool) -> usize {
            match pool {
                Pool::A => 1,
                Pool::B => 2,
            }
        }

        fn apply(&self, op: OpId, x: &u8, y: &u8) -> Result<u8> {
            self.validate_op(op)?;
            Ok(match (op.pool, op.index) {
                (Pool::A, 0) => (*x).max(*y),
                (Pool::B, 0) => (*x).min(*y),
                (Pool::B, 1) => x.saturating_add(*y),
                _ => unreachable!(),
            })
        }

        fn random_element(&self, rng: &mut dyn RngCore) -> u8 {
            rng.gen_range(0..16)
        }

        fn elems_equal(&self, x: &u8, y: &u8) -> Result<bool> {
            Ok(x == y)
        }

        fn canonical_bytes(&self, x: &u8) -> Result<Vec<u8>> {
            Ok(vec![*x])
        }

        fn display_elem(&self, x: &u8) -> String {
            x.to_string()
        }

        fn describe(&self) -> String {
            "lattice test platform".into()
        }

        fn carrier(&self) -> Option<Vec<u8>> {
            Some((0..16).collect())
        }
    }

    #[test]
    fn detects_law_and_violation_on_the_lattice() {
        let check = check_mutual_ld(
            &Lattice,
            OpId::a(0),
            OpId::b(0),
            (0..8u8).flat_map(|x| (0..8u8).flat_map(move |y| (0..8u8).map(move |z| (x, y, z)))),
            3,
        )
        .unwrap();
        assert_eq!(check.triples_checked, 512);
        assert!(check.holds());

        let broken = check_mutual_ld(
            &Lattice,
            OpId::a(0),
            OpId::b(1),
            (0..8u8).flat_map(|x| (0..8u8).flat_map(move |y| (0..8u8).map(move |z| (x, y, z)))),
            3,
        )
        .unwrap();
        assert!(!broken.holds());
        // Witness: x=2, y=z=0 gives 2 max (0+0) = 2 against (2 max 0) + (2 max 0) = 4.
        assert!(broken.violation_count >= 3);
        assert_eq!(broken.recorded.len(), 3);
        assert!(broken
            .recorded
            .iter()
            .all(|v| v.direction == LdDirection::AOverB));
    }

    #[test]
    fn violation_recording_caps_but_counting_continues() {
        let triples =
            (0..8u8).flat_map(|x| (0..8u8).flat_map(move |y| (0..8u8).map(move |z| (x, y, z))));
        let broken = check_mutual_ld(&Lattice, OpId::a(0), OpId::b(1), triples, 2).unwrap();
        assert!(broken.violation_count > 2);
        assert_eq!(broken.recorded.len(), 2);
    }

    #[test]
    fn campaigns_cover_all_pairs_and_flag_the_bad_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let report = random_campaign(&Lattice, 200, &mut rng).unwrap();
        assert_eq!(report.lines.len(), 2);
        assert!(!report.all_hold());
        assert_eq!(report.lines[0].violations, 0);
        assert!(report.lines[1].violations > 0);
        assert!(report.lines[1].sample.is_some());
        assert!(report.render().contains("LAW VIOLATIONS FOUND"));

        let exhaustive = exhaustive_campaign(&Lattice).unwrap();
        assert_eq!(exhaustive.lines[0].triples_checked, 16 * 16 * 16);
        assert_eq!(exhaustive.lines[0].violations, 0);
        assert!(exhaustive.lines[1].violations > 0);
    }
}
