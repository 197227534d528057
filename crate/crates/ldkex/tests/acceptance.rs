//! Acceptance gate. Each test is one release criterion: it runs the check,
//! prints a single PASS line with the measured time, and asserts the runtime
//! budget pinned next to it. Budgets and statistical tolerances live in the
//! constants below so a reviewer can see every threshold in one place.

use ldkex::testkit::seeded_rng;
use ldkex::*;
use rand::Rng;
use std::time::{Duration, Instant};

const BUDGET_TREE_GOLDEN: Duration = Duration::from_secs(1);
const BUDGET_CATALAN: Duration = Duration::from_secs(10);
const BUDGET_LAVER: Duration = Duration::from_secs(30);
const BUDGET_GROUP_LAWS: Duration = Duration::from_secs(10);
const BUDGET_BRAID_LAWS: Duration = Duration::from_secs(120);
const BUDGET_ROUND_TRIPS: Duration = Duration::from_secs(300);

/// Chi-square critical value: 13 degrees of freedom, significance 0.001.
const CHI_SQUARE_CRIT_DF13_P001: f64 = 34.53;

fn pass(name: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    assert!(
        elapsed < budget,
        "{name}: took {elapsed:?}, budget {budget:?}"
    );
    println!("acceptance {name}: PASS in {elapsed:?} (budget {budget:?})");
}

#[test]
fn a1_symbolic_tree_evaluation_golden() {
    let started = Instant::now();
    let platform = SymbolicPlatform::new(4, 0);
    let tree = TreeVector::new(vec![1, 1, 2, 2, 3, 6, 6]).unwrap();
    let ops: Vec<OpId> = [2, 3, 1, 4, 2, 1, 1]
        .iter()
        .map(|&i| OpId::a(i - 1))
        .collect();
    let leaves: Vec<Term> = ["s3", "s3", "s1", "s2", "s1", "s2", "s3", "s2"]
        .iter()
        .map(|s| Term::leaf(*s))
        .collect();
    let value = evaluate_tree(&platform, &tree, &ops, &leaves).unwrap();
    assert_eq!(
        value.to_string(),
        "(s3 *a1 ((s3 *a4 (s1 *a1 s2)) *a2 s1)) *a1 ((s2 *a2 s3) *a3 s2)"
    );
    pass("1 (tree evaluation golden)", started, BUDGET_TREE_GOLDEN);
}

/// `C(2n, n) / (n + 1)` computed here from scratch, sharing nothing with the
/// library's own counter.
fn catalan_closed_form(n: u64) -> u128 {
    let mut binom: u128 = 1;
    for k in 0..n {
        binom = binom * (2 * n - k) as u128 / (k as u128 + 1);
    }
    binom / (n as u128 + 1)
}

#[test]
fn a2_catalan_enumeration_and_uniform_sampling() {
    let started = Instant::now();

    let frozen: [u128; 9] = [1, 1, 2, 5, 14, 42, 132, 429, 1430];
    for (n, &expected) in frozen.iter().enumerate() {
        assert_eq!(catalan(n as u32), expected, "counter at n={n}");
        assert_eq!(catalan_closed_form(n as u64), expected, "formula at n={n}");
        let vectors = TreeVector::enumerate(n).unwrap();
        assert_eq!(vectors.len() as u128, expected, "enumeration at n={n}");
        let mut sorted: Vec<&TreeVector> = vectors.iter().collect();
        sorted.dedup();
        assert_eq!(sorted.len() as u128, expected, "enumeration must not repeat");
    }

    // Validity: every sampled vector passes the static predicate.
    let mut rng = seeded_rng(20_001);
    for draw in 0..10_000usize {
        let n = draw % 10 + 1;
        let t = TreeVector::sample(n, &mut rng).unwrap();
        assert!(TreeVector::is_valid(t.entries()), "draw {draw}: {t}");
    }

    // Uniformity at n = 4: fourteen shapes, one thousand expected hits each.
    let classes = TreeVector::enumerate(4).unwrap();
    let mut counts = vec![0u64; classes.len()];
    let mut rng = seeded_rng(20_002);
    let draws = 14_000u64;
    for _ in 0..draws {
        let t = TreeVector::sample(4, &mut rng).unwrap();
        let idx = classes.iter().position(|c| *c == t).expect("known shape");
        counts[idx] += 1;
    }
    let expected = draws as f64 / classes.len() as f64;
    let stat: f64 = counts
        .iter()
        .map(|&c| {
            let d = c as f64 - expected;
            d * d / expected
        })
        .sum();
    assert!(
        stat < CHI_SQUARE_CRIT_DF13_P001,
        "chi-square statistic {stat:.2} exceeds {CHI_SQUARE_CRIT_DF13_P001}"
    );

    pass("2 (catalan enumeration + sampling)", started, BUDGET_CATALAN);
}

#[test]
fn a3_laver_tables_exhaustive_and_large_build() {
    let started = Instant::now();

    for level in 0..=4u32 {
        let table = LaverTable::build(level).unwrap();
        let size = table.size();
        assert_eq!(size, 1 << level);

        // Successor column, wrapping at the top.
        for k in 1..=size {
            assert_eq!(table.apply(k, 1).unwrap(), k % size + 1, "level {level}");
        }

        // Exhaustive self-distributivity over all size^3 triples.
        let report = exhaustive_campaign(&LaverPlatform::new(table)).unwrap();
        assert!(report.all_hold(), "level {level}: {}", report.render());
        for line in &report.lines {
            assert_eq!(line.triples_checked, (size as usize).pow(3));
        }
    }

    let big = LaverTable::build(10).unwrap();
    assert_eq!(big.size(), 1024);
    assert_eq!(big.apply(1024, 1).unwrap(), 1);
    assert_eq!(big.apply(1, 1).unwrap(), 2);

    pass("3 (laver tables)", started, BUDGET_LAVER);
}

#[test]
fn a4_group_platform_laws() {
    let started = Instant::now();
    let triples = 1000usize;
    let mut seed = 40_000u64;

    let groups = [Group::sym(8).unwrap(), Group::gl2(1009).unwrap()];
    let inners = [
        groups[0].parse_element("(1 2 3)").unwrap(),
        groups[1].parse_element("[[2,3],[5,7]]").unwrap(),
    ];

    for (group, inner) in groups.iter().zip(inners.iter()) {
        let ops = [
            GroupOp::Conjugation,
            GroupOp::ConjugationRev,
            GroupOp::SymmetricConjugacy,
            GroupOp::LdConjugacy(Endomorphism::Identity),
            GroupOp::LdConjugacy(Endomorphism::Inner(inner.clone())),
            GroupOp::FSymmetricConjugacy(Endomorphism::Identity),
        ];
        for op in ops {
            let name = op.name();
            let platform = GroupPlatform::new(group.clone(), op).unwrap();
            seed += 1;
            let report = random_campaign(&platform, triples, &mut seeded_rng(seed)).unwrap();
            assert!(
                report.all_hold(),
                "{name} on {}: {}",
                group.name(),
                report.render()
            );
        }
    }

    // The projector variants need a product group to project on.
    let product = Group::product(Group::sym(8).unwrap(), Group::gl2(1009).unwrap());
    for endo in [Endomorphism::ProjectLeft, Endomorphism::ProjectRight] {
        let platform = GroupPlatform::new(
            product.clone(),
            GroupOp::FSymmetricConjugacy(endo),
        )
        .unwrap();
        seed += 1;
        let report = random_campaign(&platform, triples, &mut seeded_rng(seed)).unwrap();
        assert!(report.all_hold(), "{}", report.render());
    }

    pass("4 (group platform laws)", started, BUDGET_GROUP_LAWS);
}

fn law_check_braid_config() -> BraidConfig {
    BraidConfig {
        ambient_strands: 64,
        random_word_len: 8,
        random_max_index: 4,
    }
}

fn valid_gen_params() -> GenShiftedConjParams {
    GenShiftedConjParams::new(
        3,
        BraidWord::new(vec![1]).unwrap(),
        BraidWord::identity(),
        BraidWord::new(vec![1, 1]).unwrap(),
        BraidWord::identity(),
        1,
        1,
    )
    .unwrap()
}

fn invalid_gen_params() -> GenShiftedConjParams {
    GenShiftedConjParams::new(
        3,
        BraidWord::new(vec![1]).unwrap(),
        BraidWord::identity(),
        BraidWord::identity(),
        BraidWord::new(vec![2]).unwrap(),
        1,
        1,
    )
    .unwrap()
}

#[test]
fn a5_braid_laws() {
    let started = Instant::now();

    // Shifted pair: all four ordered operation pairs, both distributivity
    // directions each, over 200 random triples of words of length <= 8 on
    // generator indices <= 4.
    let platform = BraidPlatform::shifted(law_check_braid_config()).unwrap();
    let report = random_campaign(&platform, 200, &mut seeded_rng(50_001)).unwrap();
    assert!(report.all_hold(), "{}", report.render());
    assert_eq!(report.lines.len(), 4, "two ops per pool, four pairs");

    // Generalized, parameters passing every commutation requirement.
    let params = valid_gen_params();
    let abc = check_abc_conditions(&params).unwrap();
    assert!(abc.mutually_ld() && abc.bi_ld());
    let platform = BraidPlatform::generalized(params, law_check_braid_config()).unwrap();
    let report = random_campaign(&platform, 200, &mut seeded_rng(50_002)).unwrap();
    assert!(report.all_hold(), "{}", report.render());

    // Generalized, parameters failing a commutation requirement: the law
    // check must exhibit a violation within 500 triples.
    let params = invalid_gen_params();
    let abc = check_abc_conditions(&params).unwrap();
    assert!(!abc.left1_with_right2 && !abc.mutually_ld());
    let platform = BraidPlatform::generalized(params, law_check_braid_config()).unwrap();
    let report = random_campaign(&platform, 500, &mut seeded_rng(50_003)).unwrap();
    assert!(
        report.total_violations() > 0,
        "invalid parameters must produce a detected violation"
    );

    pass("5 (braid laws)", started, BUDGET_BRAID_LAWS);
}

fn tiny_cfg() -> ExchangeConfig {
    // Braid word length doubles per tree level, so the braid batches run at
    // reduced tree and multiplier sizes to keep fifty runs well inside the
    // budget. Key agreement is size-independent.
    ExchangeConfig {
        alice_generators: 2,
        bob_generators: 2,
        anchor_tree_size: 2,
        alice_multipliers: 2,
        bob_multipliers: 2,
        multiplier_tree_size: 2,
    }
}

fn assert_batch_agrees<P: Platform>(label: &str, make: impl Fn() -> P, cfg: &ExchangeConfig) {
    for seed in 0..50u64 {
        let ex = run_exchange(make(), cfg, seed, seed + 1000, seed + 2000).unwrap();
        assert!(ex.agreed(), "{label}: seed {seed} disagreed");
        assert_eq!(
            ex.key_alice_bytes, ex.key_bob_bytes,
            "{label}: encodings must be bit-identical"
        );
    }
}

fn assert_corruption_breaks<P: Platform>(
    label: &str,
    make: impl Fn() -> P,
    cfg: &ExchangeConfig,
    seed: u64,
    twist: impl Fn(&P, &P::Elem) -> P::Elem,
) {
    let ex = run_exchange(make(), cfg, seed, seed + 1, seed + 2).unwrap();
    assert!(ex.agreed(), "{label}: honest run must agree");
    // Corrupt an image the anchor word actually consumes.
    let used = ex.params.anchor_word.leaf_indices[0];
    let mut corrupt = ex.bob_msg.clone();
    corrupt.images_t[used] = twist(&ex.params.platform, &corrupt.images_t[used]);
    let key = ex.params.alice_key(&ex.alice, &corrupt).unwrap();
    let bytes = ex.params.platform.canonical_bytes(&key).unwrap();
    assert_ne!(
        bytes, ex.key_bob_bytes,
        "{label}: corrupted public key must yield a mismatch"
    );
}

#[test]
fn a6_protocol_round_trips() {
    let started = Instant::now();
    let default_cfg = ExchangeConfig::default();
    let tiny = tiny_cfg();

    let laver = || LaverPlatform::new(LaverTable::build(4).unwrap());
    assert_batch_agrees("laver L_4", laver, &default_cfg);
    assert_corruption_breaks("laver L_4", laver, &default_cfg, 0, |p, v| {
        v % p.table().size() + 1
    });

    let conj = || GroupPlatform::new(Group::sym(16).unwrap(), GroupOp::Conjugation).unwrap();
    assert_batch_agrees("conjugation S_16", conj, &default_cfg);
    assert_corruption_breaks("conjugation S_16", conj, &default_cfg, 0, |p, v| {
        let twist = p.group().parse_element("(1 2)").unwrap();
        p.group().mul(v, &twist).unwrap()
    });

    let sym = || {
        GroupPlatform::new(Group::gl2(1009).unwrap(), GroupOp::SymmetricConjugacy).unwrap()
    };
    assert_batch_agrees("symmetric conjugacy GL2(1009)", sym, &default_cfg);
    assert_corruption_breaks("symmetric conjugacy GL2(1009)", sym, &default_cfg, 0, |p, v| {
        let twist = p.group().parse_element("[[1,1],[0,1]]").unwrap();
        p.group().mul(v, &twist).unwrap()
    });

    let shifted = || BraidPlatform::shifted(BraidConfig::default()).unwrap();
    assert_batch_agrees("braid shifted", shifted, &tiny);
    assert_corruption_breaks("braid shifted", shifted, &tiny, 0, |_, v| {
        v.mul(&BraidWord::sigma(1).unwrap())
    });

    let gen = || {
        BraidPlatform::generalized(valid_gen_params(), BraidConfig::default()).unwrap()
    };
    assert_batch_agrees("braid generalized", gen, &tiny);
    assert_corruption_breaks("braid generalized", gen, &tiny, 0, |_, v| {
        v.mul(&BraidWord::sigma(1).unwrap())
    });

    pass("6 (protocol round trips)", started, BUDGET_ROUND_TRIPS);
}

#[test]
fn a7_transcripts_are_deterministic() {
    let started = Instant::now();
    let default_cfg = ExchangeConfig::default();
    let tiny = tiny_cfg();

    fn transcript_twice<P: Platform>(make: impl Fn() -> P, cfg: &ExchangeConfig, seeds: (u64, u64, u64)) {
        let one = render_transcript(
            &run_exchange(make(), cfg, seeds.0, seeds.1, seeds.2).unwrap(),
            seeds,
        )
        .unwrap();
        let two = render_transcript(
            &run_exchange(make(), cfg, seeds.0, seeds.1, seeds.2).unwrap(),
            seeds,
        )
        .unwrap();
        assert_eq!(one, two, "repeat run must be byte-identical");
    }

    transcript_twice(
        || LaverPlatform::new(LaverTable::build(4).unwrap()),
        &default_cfg,
        (1, 2, 3),
    );
    transcript_twice(
        || GroupPlatform::new(Group::sym(16).unwrap(), GroupOp::Conjugation).unwrap(),
        &default_cfg,
        (4, 5, 6),
    );
    transcript_twice(
        || GroupPlatform::new(Group::gl2(1009).unwrap(), GroupOp::SymmetricConjugacy).unwrap(),
        &default_cfg,
        (7, 8, 9),
    );
    transcript_twice(
        || BraidPlatform::shifted(BraidConfig::default()).unwrap(),
        &tiny,
        (10, 11, 12),
    );
    transcript_twice(
        || BraidPlatform::generalized(valid_gen_params(), BraidConfig::default()).unwrap(),
        &tiny,
        (13, 14, 15),
    );

    // Structured non-transcript renderings repeat byte-identically too.
    let dump_once = render_laver_structured(&LaverTable::build(3).unwrap());
    let dump_again = render_laver_structured(&LaverTable::build(3).unwrap());
    assert_eq!(dump_once, dump_again);

    // Seed-determinism extends to the raw sampler driving every draw.
    let mut a = seeded_rng(77);
    let mut b = seeded_rng(77);
    for _ in 0..100 {
        assert_eq!(a.gen::<u64>(), b.gen::<u64>());
    }

    pass("7 (deterministic transcripts)", started, Duration::from_secs(300));
}
