//! Command line front end: seeded exchanges on any platform, Laver table
//! dumps, tree vector utilities, and distributivity law campaigns.
//!
//! Exit codes are a stable contract: 0 on success (keys agree, laws hold,
//! input valid), 1 on a negative verdict (key mismatch, law violation,
//! invalid vector), 2 on configuration or usage errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ldkex::braid::{BraidConfig, BraidPlatform, BraidWord, GenShiftedConjParams};
use ldkex::group::{Endomorphism, Group, GroupOp, GroupPlatform};
use ldkex::kep::{run_exchange, Exchange, ExchangeConfig};
use ldkex::laver::{LaverPlatform, LaverTable, DEFAULT_LAVER_LEVEL_CAP};
use ldkex::laws::{exhaustive_campaign, random_campaign, CampaignReport};
use ldkex::magma::Platform;
use ldkex::tree::{TreeVector, DEFAULT_ENUMERATION_CAP};
use ldkex::wire::{render_laver_structured, render_transcript, to_hex};
use ldkex::{check_abc_conditions, Error, Result};

#[derive(Parser)]
#[command(name = "ldkex", version, about = "Key establishment over mutually left distributive systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one seeded key exchange and emit a transcript
    Exchange(ExchangeArgs),
    /// Print a Laver table
    Laver(LaverArgs),
    /// Enumerate, validate, or sample tree vectors
    Trees(TreesArgs),
    /// Run distributivity law campaigns on a platform
    VerifyLaws(VerifyLawsArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PlatformKind {
    Laver,
    Group,
    BraidShifted,
    BraidGen,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GroupKind {
    Sym,
    Gl2,
    Product,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OpKind {
    Conj,
    ConjRev,
    Sym,
    Ld,
    Fsym,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EndoKind {
    Identity,
    Inner,
    ProjLeft,
    ProjRight,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Args)]
struct PlatformArgs {
    /// Platform family
    #[arg(long, value_enum, default_value = "laver")]
    platform: PlatformKind,

    /// Laver table level (carrier size 2^n)
    #[arg(long, default_value_t = 4)]
    n: u32,

    /// Group shape for --platform group; product is Sym(degree) x GL2(prime)
    #[arg(long, value_enum, default_value = "sym")]
    group: GroupKind,
    /// Symmetric group degree
    #[arg(long, default_value_t = 16)]
    degree: usize,
    /// Prime modulus for GL2
    #[arg(long, default_value_t = 1009)]
    prime: u64,
    /// Pool A group operation
    #[arg(long, value_enum, default_value = "conj")]
    op: OpKind,
    /// Pool B group operation (defaults to --op)
    #[arg(long, value_enum)]
    op_b: Option<OpKind>,
    /// Endomorphism for --op ld / fsym
    #[arg(long, value_enum, default_value = "identity")]
    endo: EndoKind,
    /// Group element for --endo inner, in the element syntax of the group
    #[arg(long)]
    endo_element: Option<String>,

    /// Braid: strand count for canonical encodings
    #[arg(long, default_value_t = 64)]
    ambient: usize,
    /// Braid: letters per sampled random element
    #[arg(long, default_value_t = 3)]
    word_len: usize,
    /// Braid: largest generator index in sampled random elements
    #[arg(long, default_value_t = 3)]
    max_index: u32,
    /// Generalized shifted conjugacy: shift power p
    #[arg(long, default_value_t = 3)]
    gen_p: usize,
    /// Generalized shifted conjugacy components, braid words ("e" = empty)
    #[arg(long, default_value = "e")]
    gen_a1_left: String,
    #[arg(long, default_value = "e")]
    gen_a1_right: String,
    #[arg(long, default_value = "e")]
    gen_a2_left: String,
    #[arg(long, default_value = "e")]
    gen_a2_right: String,
    /// Signs of the central twist factor, +1 or -1
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    gen_sign1: i8,
    #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
    gen_sign2: i8,
}

#[derive(Args)]
struct OutputArgs {
    /// Write here instead of stdout (atomic: temp file + rename)
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ExchangeArgs {
    #[command(flatten)]
    platform: PlatformArgs,

    /// mA: generators on Alice's side
    #[arg(long, default_value_t = 4)]
    m_a: usize,
    /// mB: generators on Bob's side
    #[arg(long, default_value_t = 4)]
    m_b: usize,
    /// Internal nodes of the public anchor tree word
    #[arg(long, default_value_t = 4)]
    n_a0: usize,
    /// Internal nodes of each private multiplier tree word
    #[arg(long, default_value_t = 4)]
    n_b: usize,
    /// kA: multipliers in Alice's morphism
    #[arg(long, default_value_t = 3)]
    k_a: usize,
    /// kB: multipliers in Bob's morphism
    #[arg(long, default_value_t = 3)]
    k_b: usize,

    /// Seed for the public parameter draw
    #[arg(long, default_value_t = 0)]
    seed_params: u64,
    /// Seed for Alice's private draw
    #[arg(long, default_value_t = 1)]
    seed_a: u64,
    /// Seed for Bob's private draw
    #[arg(long, default_value_t = 2)]
    seed_b: u64,

    #[arg(long, value_enum, default_value = "structured")]
    format: Format,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct LaverArgs {
    /// Table level (carrier size 2^n)
    #[arg(long, default_value_t = 4)]
    n: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct TreesArgs {
    #[command(subcommand)]
    action: TreesAction,
}

#[derive(Subcommand)]
enum TreesAction {
    /// Count (and optionally list) all vectors with n internal nodes
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Print every vector, one per line, before the count
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Check one vector written like [1,1,2,2,3,6,6]
    Validate { vector: String },
    /// Draw uniform random vectors
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args)]
struct VerifyLawsArgs {
    #[command(flatten)]
    platform: PlatformArgs,

    /// Random triples per operation pair
    #[arg(long, default_value_t = 200)]
    triples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Check the full carrier cubed instead of sampling (needs an
    /// enumerable carrier, i.e. the Laver platform)
    #[arg(long)]
    exhaustive: bool,
    #[command(flatten)]
    out: OutputArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = match cli.command {
        Command::Exchange(args) => cmd_exchange(&args),
        Command::Laver(args) => cmd_laver(&args),
        Command::Trees(args) => cmd_trees(&args),
        Command::VerifyLaws(args) => cmd_verify_laws(&args),
    };
    match run {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Numeric cap override from the environment; malformed values are
/// configuration errors, not silent fallbacks.
fn env_cap(name: &str, default: usize) -> Result<usize> {
    match std::env::var(name) {
        Ok(raw) => raw
            .trim()
            .parse()
            .map_err(|_| Error::Config(format!("{name} must be a number, got {raw:?}"))),
        Err(_) => Ok(default),
    }
}

fn emit(out: &OutputArgs, content: &str) -> Result<()> {
    let Some(path) = &out.output else {
        print!("{content}");
        return Ok(());
    };
    let file_name = path
        .file_name()
        .ok_or_else(|| Error::Config(format!("output path {} has no file name", path.display())))?;
    let mut tmp_name = std::ffi::OsString::from(".");
    tmp_name.push(file_name);
    tmp_name.push(format!(".tmp{}", std::process::id()));
    let tmp = path.with_file_name(tmp_name);
    let write = |p: &std::path::Path| -> std::io::Result<()> {
        std::fs::write(p, content)?;
        std::fs::rename(p, path)
    };
    write(&tmp).map_err(|e| {
        let _ = std::fs::remove_file(&tmp);
        Error::Config(format!("cannot write {}: {e}", path.display()))
    })
}

fn build_laver(args: &PlatformArgs) -> Result<LaverPlatform> {
    let cap = env_cap("LDKEX_LAVER_CAP", DEFAULT_LAVER_LEVEL_CAP as usize)? as u32;
    Ok(LaverPlatform::new(LaverTable::build_with_cap(args.n, cap)?))
}

fn build_group(args: &PlatformArgs) -> Result<GroupPlatform> {
    let group = match args.group {
        GroupKind::Sym => Group::sym(args.degree)?,
        GroupKind::Gl2 => Group::gl2(args.prime)?,
        GroupKind::Product => {
            Group::product(Group::sym(args.degree)?, Group::gl2(args.prime)?)
        }
    };
    let endo = match args.endo {
        EndoKind::Identity => Endomorphism::Identity,
        EndoKind::Inner => {
            let raw = args.endo_element.as_ref().ok_or_else(|| {
                Error::Config("--endo inner needs --endo-element".into())
            })?;
            Endomorphism::Inner(group.parse_element(raw)?)
        }
        EndoKind::ProjLeft => Endomorphism::ProjectLeft,
        EndoKind::ProjRight => Endomorphism::ProjectRight,
    };
    let to_op = |kind: OpKind| match kind {
        OpKind::Conj => GroupOp::Conjugation,
        OpKind::ConjRev => GroupOp::ConjugationRev,
        OpKind::Sym => GroupOp::SymmetricConjugacy,
        OpKind::Ld => GroupOp::LdConjugacy(endo.clone()),
        OpKind::Fsym => GroupOp::FSymmetricConjugacy(endo.clone()),
    };
    GroupPlatform::with_pools(
        group,
        vec![to_op(args.op)],
        vec![to_op(args.op_b.unwrap_or(args.op))],
    )
}

fn braid_config(args: &PlatformArgs) -> BraidConfig {
    BraidConfig {
        ambient_strands: args.ambient,
        random_word_len: args.word_len,
        random_max_index: args.max_index,
    }
}

fn build_braid_shifted(args: &PlatformArgs) -> Result<BraidPlatform> {
    BraidPlatform::shifted(braid_config(args))
}

fn gen_params(args: &PlatformArgs) -> Result<GenShiftedConjParams> {
    GenShiftedConjParams::new(
        args.gen_p,
        BraidWord::parse(&args.gen_a1_left)?,
        BraidWord::parse(&args.gen_a1_right)?,
        BraidWord::parse(&args.gen_a2_left)?,
        BraidWord::parse(&args.gen_a2_right)?,
        args.gen_sign1,
        args.gen_sign2,
    )
}

fn build_braid_gen(args: &PlatformArgs) -> Result<BraidPlatform> {
    BraidPlatform::generalized(gen_params(args)?, braid_config(args))
}

/// Run `body` with the platform selected by `args`.
macro_rules! with_platform {
    ($args:expr, |$p:ident| $body:expr) => {
        match $args.platform {
            PlatformKind::Laver => {
                let $p = build_laver($args)?;
                $body
            }
            PlatformKind::Group => {
                let $p = build_group($args)?;
                $body
            }
            PlatformKind::BraidShifted => {
                let $p = build_braid_shifted($args)?;
                $body
            }
            PlatformKind::BraidGen => {
                let $p = build_braid_gen($args)?;
                $body
            }
        }
    };
}

fn text_summary<P: Platform>(ex: &Exchange<P>, seeds: (u64, u64, u64)) -> String {
    let p = &ex.params.platform;
    let mut out = String::new();
    out.push_str(&format!("platform: {}\n", p.describe()));
    out.push_str(&format!(
        "seeds: params={} alice={} bob={}\n",
        seeds.0, seeds.1, seeds.2
    ));
    out.push_str(&format!("K_A: {}\n", p.display_elem(&ex.key_alice)));
    out.push_str(&format!("K_B: {}\n", p.display_elem(&ex.key_bob)));
    out.push_str(&format!("agree: {}\n", ex.agreed()));
    if ex.agreed() {
        out.push_str(&format!(
            "shared.digest: {}\n",
            to_hex(&ldkex::kep::shared_key_digest(&ex.key_alice_bytes))
        ));
    }
    out.push_str(&format!("elapsed: {:?}\n", ex.elapsed));
    out
}

fn cmd_exchange(args: &ExchangeArgs) -> Result<u8> {
    let cfg = ExchangeConfig {
        alice_generators: args.m_a,
        bob_generators: args.m_b,
        anchor_tree_size: args.n_a0,
        alice_multipliers: args.k_a,
        bob_multipliers: args.k_b,
        multiplier_tree_size: args.n_b,
    };
    let seeds = (args.seed_params, args.seed_a, args.seed_b);
    with_platform!(&args.platform, |p| {
        let ex = run_exchange(p, &cfg, seeds.0, seeds.1, seeds.2)?;
        let content = match args.format {
            Format::Structured => render_transcript(&ex, seeds)?,
            Format::Text => text_summary(&ex, seeds),
        };
        emit(&args.out, &content)?;
        Ok(if ex.agreed() { 0 } else { 1 })
    })
}

fn cmd_laver(args: &LaverArgs) -> Result<u8> {
    let cap = env_cap("LDKEX_LAVER_CAP", DEFAULT_LAVER_LEVEL_CAP as usize)? as u32;
    let table = LaverTable::build_with_cap(args.n, cap)?;
    let content = match args.format {
        Format::Text => table.render_grid(),
        Format::Structured => render_laver_structured(&table),
    };
    emit(&args.out, &content)?;
    Ok(0)
}

fn cmd_trees(args: &TreesArgs) -> Result<u8> {
    match &args.action {
        TreesAction::Enumerate { n, list, out } => {
            let cap = env_cap("LDKEX_ENUM_CAP", DEFAULT_ENUMERATION_CAP)?;
            let all = TreeVector::enumerate_with_cap(*n, cap)?;
            let mut content = String::new();
            if *list {
                for v in &all {
                    content.push_str(&format!("{v}\n"));
                }
            }
            content.push_str(&format!("count: {}\n", all.len()));
            emit(out, &content)?;
            Ok(0)
        }
        TreesAction::Validate { vector } => match TreeVector::parse(vector) {
            Ok(_) => {
                println!("valid");
                Ok(0)
            }
            Err(e) => {
                println!("invalid: {e}");
                Ok(1)
            }
        },
        TreesAction::Sample {
            n,
            count,
            seed,
            out,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let mut content = String::new();
            for _ in 0..*count {
                content.push_str(&format!("{}\n", TreeVector::sample(*n, &mut rng)?));
            }
            emit(out, &content)?;
            Ok(0)
        }
    }
}

fn cmd_verify_laws(args: &VerifyLawsArgs) -> Result<u8> {
    let mut content = String::new();
    if args.platform.platform == PlatformKind::BraidGen {
        let abc = check_abc_conditions(&gen_params(&args.platform)?)?;
        content.push_str(&format!(
            "abc commutation: l1~r2={} l2~r1={} l1~l2={} l1~r1={} l2~r2={} \
             (mutually-ld={}, bi-ld={})\n",
            abc.left1_with_right2,
            abc.left2_with_right1,
            abc.left1_with_left2,
            abc.left1_with_right1,
            abc.left2_with_right2,
            abc.mutually_ld(),
            abc.bi_ld(),
        ));
    }
    let report: CampaignReport = with_platform!(&args.platform, |p| {
        content.push_str(&format!("platform: {}\n", p.describe()));
        if args.exhaustive {
            exhaustive_campaign(&p)?
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            random_campaign(&p, args.triples, &mut rng)?
        }
    });
    content.push_str(&report.render());
    emit(&args.out, &content)?;
    Ok(if report.all_hold() { 0 } else { 1 })
}
