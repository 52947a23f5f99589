//! Command-line front end: one-shot transformations, exhaustive checks,
//! triangle tables, identity checks and statistics.
//!
//! Exit codes: 0 on success, 1 when a check fails or an operation's
//! precondition does not hold, 2 on usage or parse errors (including a
//! length above the enumeration cap).

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::ballot::{self, BallotError, BallotSequence, UglyToBad};
use crate::census::{
    distribution, run_check, triangle, CensusError, Check, CheckContext, IdentityReport, LengthCaps, Population, Stat,
    TriangleKind,
};
use crate::rootops::{self, RootOpError};
use crate::series::{self, SeriesError, DEFAULT_T_VALUES};
use crate::walks::{parse_step_set, parse_walk, parse_walk_nd, Alphabet, StepSet, WalkError};

#[derive(Debug, Parser)]
#[command(name = "walkbij", version, about = "Bijections between walks, ballot sequences and their counts")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply one operation to a walk or ballot sequence.
    Apply(ApplyArgs),
    /// Run a named exhaustive check for every size up to --max-len.
    Verify(VerifyArgs),
    /// Print a triangle of walk counts as TSV.
    Table(TableArgs),
    /// Check an identity at every index up to --max.
    Identity(IdentityArgs),
    /// Print the exact distribution of a statistic as TSV.
    Stats(StatsArgs),
}

#[derive(Debug, Args)]
pub struct ApplyArgs {
    #[arg(long)]
    pub op: String,
    #[arg(long, allow_hyphen_values = true)]
    pub walk: Option<String>,
    #[arg(long)]
    pub seq: Option<String>,
    /// Number of neutral step kinds.
    #[arg(long, default_value_t = 0)]
    pub t: u32,
    /// Visit index for reflect-k.
    #[arg(long)]
    pub k: Option<usize>,
    /// Second factor for concat.
    #[arg(long)]
    pub suffix: Option<String>,
    #[arg(long)]
    pub step_set: Option<PathBuf>,
    /// Dimension of the full step set {-1,0,1}^dim, when no step-set file is given.
    #[arg(long)]
    pub dim: Option<usize>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub what: String,
    #[arg(long)]
    pub max_len: usize,
    #[arg(long, default_value_t = 0)]
    pub t: u32,
    #[arg(long)]
    pub step_set: Option<PathBuf>,
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// pascal, trinomial, positive or trinomial-positive.
    #[arg(long)]
    pub kind: String,
    #[arg(long)]
    pub rows: usize,
    #[arg(long)]
    pub t: Option<u32>,
}

#[derive(Debug, Args)]
pub struct IdentityArgs {
    /// eq1, eq2, eq3, eq4, ballot or t2.
    #[arg(long)]
    pub which: String,
    #[arg(long)]
    pub max: usize,
    /// Values of t for eq2 and eq3; defaults to 0,1,2,3,5.
    #[arg(long, value_delimiter = ',')]
    pub t: Vec<u32>,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    #[arg(long)]
    pub stat: String,
    #[arg(long)]
    pub len: usize,
    #[arg(long, default_value_t = 0)]
    pub t: u32,
    #[arg(long, default_value = "all")]
    pub population: String,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Precondition(_) => 1,
        }
    }
}

impl From<WalkError> for CliError {
    fn from(e: WalkError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<RootOpError> for CliError {
    fn from(e: RootOpError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<BallotError> for CliError {
    fn from(e: BallotError) -> Self {
        match e {
            BallotError::EmptySequence | BallotError::UnknownVote(_) => CliError::Usage(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<CensusError> for CliError {
    fn from(e: CensusError) -> Self {
        match e {
            CensusError::TableMismatch { .. } => CliError::Precondition(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<SeriesError> for CliError {
    fn from(e: SeriesError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

/// Text for standard output and whether every check passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub text: String,
    pub success: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, success: true }
    }

    pub fn exit_code(&self) -> i32 {
        if self.success {
            0
        } else {
            1
        }
    }
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Apply(a) => cmd_apply(a).map(Report::ok),
        Command::Verify(a) => cmd_verify(a),
        Command::Table(a) => cmd_table(a).map(Report::ok),
        Command::Identity(a) => cmd_identity(a),
        Command::Stats(a) => cmd_stats(a).map(Report::ok),
    }
}

/// Parses `args` (including the program name), runs the command and prints
/// its output; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.text);
            report.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn read_step_set(path: &PathBuf) -> Result<StepSet, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read step set {}: {e}", path.display())))?;
    Ok(parse_step_set(&text)?)
}

fn input(a: &ApplyArgs) -> Result<&str, CliError> {
    a.walk
        .as_deref()
        .or(a.seq.as_deref())
        .ok_or_else(|| CliError::Usage(format!("--op {} needs --walk or --seq", a.op)))
}

pub fn cmd_apply(a: &ApplyArgs) -> Result<String, CliError> {
    let text = input(a)?;
    let alphabet = Alphabet::new(a.t);
    let walk = || parse_walk(text, alphabet);
    let seq = || text.parse::<BallotSequence>();
    let out = match a.op.as_str() {
        "raise" => rootops::raise(&walk()?)?.to_string(),
        "lower" => rootops::lower(&walk()?)?.to_string(),
        "theorem1" => rootops::theorem1_forward(&walk()?)?.to_string(),
        "theorem1-inv" => rootops::theorem1_inverse(&walk()?)?.to_string(),
        "reverse-negate" => rootops::reverse_negate(&walk()?).to_string(),
        "full-lower" => rootops::full_lower(&walk()?)?.to_string(),
        "theorem2" | "theorem2-inv" => {
            let set = match (&a.step_set, a.dim) {
                (Some(path), _) => read_step_set(path)?,
                (None, Some(dim)) => StepSet::full(dim),
                (None, None) => StepSet::full(text.split('.').next().map_or(0, |g| g.chars().count())),
            };
            let w = parse_walk_nd(text, &set)?;
            let image =
                if a.op == "theorem2" { rootops::theorem2_forward(&w)? } else { rootops::theorem2_inverse(&w)? };
            image.to_string()
        }
        "andre" => ballot::andre(&seq()?)?.to_string(),
        "andre-inv" => ballot::andre_inverse(&seq()?)?.to_string(),
        "andre-stripped" => ballot::andre_stripped(&walk()?)?.to_string(),
        "reflect-first" => ballot::reflect_first(&seq()?)?.to_string(),
        "reflect-k" => {
            let k = a.k.ok_or_else(|| CliError::Usage("reflect-k needs --k".into()))?;
            ballot::reflect_kth(&seq()?, k)?.to_string()
        }
        "reflect-last" => ballot::reflect_last(&seq()?)?.to_string(),
        "central" => ballot::central_first(&seq()?)?.to_string(),
        "raise-ballot" => ballot::raise_as_ugly_to_bad(&seq()?)?.to_string(),
        "footnote" => ballot::footnote_bijection(&seq()?)?.to_string(),
        "footnote-inv" => ballot::footnote_inverse(&seq()?)?.to_string(),
        "concat" => {
            let suffix = a.suffix.as_deref().ok_or_else(|| CliError::Usage("concat needs --suffix".into()))?;
            rootops::concat_with_upstep(&walk()?, &parse_walk(suffix, alphabet)?)?.to_string()
        }
        "split" => {
            let (prefix, suffix) = rootops::split_at_last_up_from_zero(&walk()?)?;
            format!("{prefix}|{suffix}")
        }
        op => match op.strip_prefix("lift:") {
            Some(name) => {
                let f: UglyToBad = name.parse().map_err(CliError::Usage)?;
                let outcome = ballot::lift(f, &seq()?)?;
                format!("{} ({} iterations)", outcome.sequence, outcome.iterations)
            }
            None => return Err(CliError::Usage(format!("unknown operation {op:?}"))),
        },
    };
    Ok(out + "\n")
}

pub fn cmd_verify(a: &VerifyArgs) -> Result<Report, CliError> {
    let check: Check = a.what.parse()?;
    let step_set = match &a.step_set {
        Some(path) => read_step_set(path)?,
        None => StepSet::full(a.dim),
    };
    let ctx = CheckContext { alphabet: Alphabet::new(a.t), step_set, caps: LengthCaps::default() };
    let cap = check.max_length(&ctx);
    ctx.caps.check(a.max_len, cap, format!("check {check}"))?;
    let mut text = String::new();
    let mut success = true;
    for len in 0..=a.max_len {
        let outcome = run_check(check, len, &ctx)?;
        success &= outcome.passed();
        writeln!(text, "{}", outcome.summary(len)).expect("writing to a String");
    }
    Ok(Report { text, success })
}

pub fn cmd_table(a: &TableArgs) -> Result<String, CliError> {
    let kind = match a.kind.as_str() {
        "pascal" => TriangleKind::Pascal,
        "trinomial" => TriangleKind::Trinomial(a.t.unwrap_or(1)),
        "positive" => TriangleKind::Positive(a.t.unwrap_or(0)),
        "trinomial-positive" => TriangleKind::Positive(a.t.unwrap_or(1)),
        other => return Err(CliError::Usage(format!("unknown table kind {other:?}"))),
    };
    Ok(triangle(kind, a.rows)?.to_tsv())
}

pub fn cmd_identity(a: &IdentityArgs) -> Result<Report, CliError> {
    let ts: Vec<u32> = if a.t.is_empty() { DEFAULT_T_VALUES.to_vec() } else { a.t.clone() };
    let caps = LengthCaps::default();
    let reports: Vec<IdentityReport> = match a.which.as_str() {
        "eq1" => vec![series::check_eq1(a.max)],
        "eq2" => {
            let mut v: Vec<IdentityReport> = ts.iter().map(|&t| series::check_eq2(t, a.max)).collect();
            for &t in ts.iter().filter(|&&t| t <= 1) {
                v.push(series::check_eq2_census(t, a.max.min(10), &caps)?);
            }
            v
        }
        "eq3" => ts.iter().map(|&t| series::check_eq3(t, a.max)).collect(),
        "eq4" => vec![ballot::check_eq4(a.max)],
        "ballot" => vec![ballot::check_ballot_counts(a.max, &caps)?],
        "t2" => vec![series::check_t2_coincidence(a.max)],
        other => return Err(CliError::Usage(format!("unknown identity {other:?}"))),
    };
    let mut text = String::new();
    for line in reports.iter().flat_map(|r| r.lines()) {
        writeln!(text, "{line}").expect("writing to a String");
    }
    Ok(Report { text, success: reports.iter().all(|r| r.passed()) })
}

pub fn cmd_stats(a: &StatsArgs) -> Result<String, CliError> {
    let stat: Stat = a.stat.parse()?;
    let population: Population = a.population.parse()?;
    let hist = distribution(stat, population, a.len, Alphabet::new(a.t), &LengthCaps::default())?;
    let mut text = String::from("value\tcount\n");
    for (value, count) in hist {
        writeln!(text, "{value}\t{count}").expect("writing to a String");
    }
    Ok(text)
}
