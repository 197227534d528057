//! End-to-end tests for the `ldkex` binary: exit codes, output streams,
//! and the exact text of the small fixed outputs. Every invocation here
//! runs the real executable, so these tests double as a check that the
//! documented exit-code contract (0 success, 1 law/agreement failure,
//! 2 configuration error) survives refactors.

use std::path::PathBuf;
use std::process::{Command, Output};

fn ldkex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ldkex"))
        .args(args)
        .env_remove("LDKEX_LAVER_CAP")
        .env_remove("LDKEX_ENUM_CAP")
        .output()
        .expect("binary runs")
}

fn ldkex_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ldkex"))
        .args(args)
        .env_remove("LDKEX_LAVER_CAP")
        .env_remove("LDKEX_ENUM_CAP")
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is utf-8")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

/// Fresh scratch directory for `--output` tests.
fn scratch_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ldkex-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("scratch dir");
    dir
}

const TINY_SIZES: [&str; 12] = [
    "--m-a", "2", "--m-b", "2", "--n-a0", "2", "--n-b", "2", "--k-a", "2", "--k-b", "2",
];

/// Generalized shifted conjugacy parameters whose cross laws hold.
const GEN_VALID: [&str; 10] = [
    "--gen-p",
    "3",
    "--gen-a1-left",
    "1",
    "--gen-a2-left",
    "1 1",
    "--gen-sign1",
    "1",
    "--gen-sign2",
    "1",
];

/// Same shape, but a1 and a2 fail the commutation requirements, so the
/// two operations are not mutually distributive and keys drift apart.
const GEN_INVALID: [&str; 10] = [
    "--gen-p",
    "3",
    "--gen-a1-left",
    "1",
    "--gen-a2-right",
    "2",
    "--gen-sign1",
    "1",
    "--gen-sign2",
    "1",
];

#[test]
fn exchange_laver_agrees_and_exits_zero() {
    let out = ldkex(&[
        "exchange",
        "--platform",
        "laver",
        "--n",
        "4",
        "--seed-a",
        "1",
        "--seed-b",
        "2",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.starts_with("ldkex-transcript v1\n"));
    assert!(text.contains("[verdict]\nagree: true\n"), "{text}");
}

#[test]
fn exchange_braid_shifted_word_len_six_agrees() {
    let mut args = vec![
        "exchange",
        "--platform",
        "braid-shifted",
        "--word-len",
        "6",
    ];
    args.extend(TINY_SIZES);
    let out = ldkex(&args);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("agree: true"));
}

#[test]
fn exchange_structured_output_is_bit_stable() {
    let args = [
        "exchange",
        "--platform",
        "group",
        "--group",
        "sym",
        "--degree",
        "9",
        "--seed-params",
        "7",
        "--seed-a",
        "8",
        "--seed-b",
        "9",
    ];
    let first = ldkex(&args);
    let second = ldkex(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
    assert!(stdout(&first).contains("seed.alice: 8"));
}

#[test]
fn exchange_rejects_incompatible_pool_pair() {
    let out = ldkex(&[
        "exchange",
        "--platform",
        "group",
        "--op",
        "conj",
        "--op-b",
        "sym",
    ]);
    assert_eq!(code(&out), 2);
    let err = stderr(&out);
    assert!(err.contains("not mutually distributive"), "{err}");
    assert!(err.contains("supported pool pairs"), "{err}");
}

#[test]
fn exchange_disagreement_exits_one() {
    let mut args = vec!["exchange", "--platform", "braid-gen", "--format", "text"];
    args.extend(GEN_INVALID);
    args.extend(TINY_SIZES);
    let out = ldkex(&args);
    assert_eq!(code(&out), 1, "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("agree: false"));
}

#[test]
fn exchange_braid_gen_valid_params_agree() {
    let mut args = vec!["exchange", "--platform", "braid-gen", "--format", "text"];
    args.extend(GEN_VALID);
    args.extend(TINY_SIZES);
    let out = ldkex(&args);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("agree: true"));
}

#[test]
fn exchange_text_format_reports_key_and_digest() {
    let out = ldkex(&["exchange", "--platform", "laver", "--n", "3", "--format", "text"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("platform: laver level=3"));
    assert!(text.contains("K_A: "));
    assert!(text.contains("K_B: "));
    assert!(text.contains("shared.digest: "));
    assert!(text.contains("agree: true"));
}

#[test]
fn laver_small_grids_are_exact() {
    let one = ldkex(&["laver", "--n", "1"]);
    assert_eq!(code(&one), 0);
    assert_eq!(stdout(&one), "2 2\n1 2\n");

    let zero = ldkex(&["laver", "--n", "0"]);
    assert_eq!(code(&zero), 0);
    assert_eq!(stdout(&zero), "1\n");
}

#[test]
fn laver_structured_dump_has_header_and_rows() {
    let out = ldkex(&["laver", "--n", "2", "--format", "structured"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("ldkex-laver v1\nlevel: 2\nsize: 4\n"));
    assert!(text.contains("row 1: 2 4 2 4\n"));
    assert!(text.contains("row 4: 1 2 3 4\n"));
}

#[test]
fn laver_above_default_cap_is_a_configuration_error() {
    let out = ldkex(&["laver", "--n", "11"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("above the cap of 10"));
}

#[test]
fn laver_cap_env_var_lowers_the_limit() {
    let out = ldkex_env(&["laver", "--n", "4"], "LDKEX_LAVER_CAP", "3");
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("above the cap of 3"));

    let ok = ldkex_env(&["laver", "--n", "3"], "LDKEX_LAVER_CAP", "3");
    assert_eq!(code(&ok), 0);
}

#[test]
fn malformed_cap_env_var_is_rejected_not_ignored() {
    let out = ldkex_env(&["laver", "--n", "2"], "LDKEX_LAVER_CAP", "zebra");
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("must be a number"));
}

#[test]
fn trees_enumerate_counts_and_lists() {
    let count_only = ldkex(&["trees", "enumerate", "--n", "3"]);
    assert_eq!(code(&count_only), 0);
    assert_eq!(stdout(&count_only), "count: 5\n");

    let listed = ldkex(&["trees", "enumerate", "--n", "3", "--list"]);
    let text = stdout(&listed);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[0], "[1,1,1]");
    assert_eq!(lines[5], "count: 5");
}

#[test]
fn trees_validate_accepts_and_rejects() {
    let good = ldkex(&["trees", "validate", "[1,1,2,2,3,6,6]"]);
    assert_eq!(code(&good), 0);
    assert_eq!(stdout(&good), "valid\n");

    let bad = ldkex(&["trees", "validate", "[1,3]"]);
    assert_eq!(code(&bad), 1);
    assert!(stdout(&bad).starts_with("invalid: "));
}

#[test]
fn trees_sample_is_seeded_and_valid() {
    let a = ldkex(&["trees", "sample", "--n", "5", "--seed", "11", "--count", "3"]);
    let b = ldkex(&["trees", "sample", "--n", "5", "--seed", "11", "--count", "3"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    for line in stdout(&a).lines() {
        let check = ldkex(&["trees", "validate", line]);
        assert_eq!(code(&check), 0, "sampled vector {line} failed validation");
    }
}

#[test]
fn trees_enumeration_cap_env_var_applies() {
    let out = ldkex_env(&["trees", "enumerate", "--n", "4"], "LDKEX_ENUM_CAP", "3");
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("above the cap of 3"));
}

#[test]
fn verify_laws_laver_exhaustive_holds() {
    let out = ldkex(&["verify-laws", "--platform", "laver", "--n", "3", "--exhaustive"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("512 triples, 0 violations"), "{text}");
    assert!(text.contains("all laws hold"));
}

#[test]
fn verify_laws_symmetric_group_holds() {
    let out = ldkex(&[
        "verify-laws",
        "--platform",
        "group",
        "--group",
        "sym",
        "--degree",
        "8",
        "--triples",
        "500",
        "--seed",
        "3",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("all laws hold"));
}

#[test]
fn verify_laws_reports_braid_gen_violations() {
    let mut args = vec![
        "verify-laws",
        "--platform",
        "braid-gen",
        "--triples",
        "40",
        "--word-len",
        "4",
        "--max-index",
        "3",
    ];
    args.extend(GEN_INVALID);
    let out = ldkex(&args);
    assert_eq!(code(&out), 1, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("abc commutation:"), "{text}");
    assert!(text.contains("LAW VIOLATIONS FOUND"), "{text}");
}

#[test]
fn output_flag_writes_the_file_and_leaves_no_temp() {
    let dir = scratch_dir("emit");
    let path = dir.join("enum.txt");
    let out = ldkex(&[
        "trees",
        "enumerate",
        "--n",
        "3",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "count: 5\n");
    let leftovers: Vec<_> = std::fs::read_dir(&dir)
        .unwrap()
        .filter_map(|e| e.ok())
        .filter(|e| e.file_name().to_string_lossy().contains("tmp"))
        .collect();
    assert!(leftovers.is_empty(), "temp files left behind: {leftovers:?}");
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn output_to_missing_directory_is_a_configuration_error() {
    let path = std::env::temp_dir().join("ldkex-no-such-dir").join("x.txt");
    let out = ldkex(&[
        "trees",
        "enumerate",
        "--n",
        "2",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("cannot write"));
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let out = ldkex(&["laver", "--frobnicate"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn help_names_every_subcommand() {
    let out = ldkex(&["--help"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    for name in ["exchange", "laver", "trees", "verify-laws"] {
        assert!(text.contains(name), "help is missing {name}");
    }
}
