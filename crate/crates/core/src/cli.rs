//! The `ordmatch` command line.
//!
//! Documents (JSON or CSV) go to `--out` or standard output; a short
//! human-readable summary goes to standard error. Exit codes: 0 on success,
//! 1 on a validation error, 2 when a produced report contains a failed check.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::algorithms::{Algorithm, Model};
use crate::alpha::Alpha;
use crate::error::Error;
use crate::generators::{GenKind, GenSpec, LbVariant};
use crate::harness::{
    curve_csv, curve_over, lb_one_sided_ratio, lb_two_sided_optimal_mix, lemma_property_suite, run_trials,
    with_threads, CurvePoint, TrialConfig,
};
use crate::instance::{load_instance, Instance};
use crate::oracles::OracleReport;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_CHECK_FAILED: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "ordmatch",
    version,
    about = "Matching from ordinal preferences: generators, oracles and bound checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate an instance document.
    Gen(GenArgs),
    /// Report whether an instance is metric and its max/min weight ratio.
    Verify(InstanceArgs),
    /// Exact optimal and minimal matchings of an instance.
    Oracle(InstanceArgs),
    /// Monte-Carlo trials of one algorithm on one instance.
    Run(RunArgs),
    /// Family-averaged empirical ratio against the guarantee, per budget.
    Curve(CurveArgs),
    /// Randomised checks of the structural lemmas.
    Lemmas(LemmaArgs),
    /// Lower-bound instance families.
    Lowerbound(LowerBoundArgs),
}

#[derive(Debug, Args)]
struct Output {
    /// Write the document here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct Parallelism {
    /// Worker threads (defaults to the number of cores).
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long)]
    kind: String,
    #[arg(long, default_value_t = 8)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    dim: usize,
    #[arg(long, default_value_t = 0.5)]
    nu: f64,
    #[arg(long, default_value_t = 1e-3)]
    epsilon: f64,
    #[arg(long, default_value_t = 2.0)]
    beta: f64,
    /// Which weighting of the two-sided lower-bound pair: w1 or w2.
    #[arg(long, default_value = "w1")]
    variant: String,
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct InstanceArgs {
    #[arg(long)]
    instance: PathBuf,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct RunArgs {
    #[arg(long)]
    alg: String,
    #[arg(long)]
    instance: PathBuf,
    #[arg(long, default_value = "1")]
    alpha: String,
    #[arg(long, default_value_t = 10_000)]
    trials: usize,
    #[arg(long)]
    seed: u64,
    /// Judge against the guarantee for weights within a factor `beta`.
    #[arg(long)]
    beta: Option<f64>,
    #[command(flatten)]
    parallelism: Parallelism,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct CurveArgs {
    /// one-sided, two-sided or total-order; all three when omitted.
    #[arg(long)]
    model: Option<String>,
    #[arg(long, default_value = "euclidean")]
    kind: String,
    #[arg(long, default_value_t = 20)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    dim: usize,
    /// Number of instances in the family.
    #[arg(long, default_value_t = 10)]
    instances: usize,
    #[arg(long = "alpha-grid", default_value = "0,0.25,0.5,0.75,1")]
    alpha_grid: String,
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long)]
    seed: u64,
    #[command(flatten)]
    parallelism: Parallelism,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct LemmaArgs {
    #[arg(long)]
    seed: u64,
    #[command(flatten)]
    parallelism: Parallelism,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct LowerBoundArgs {
    /// lb-two-sided or lb-one-sided.
    #[arg(long)]
    kind: String,
    #[arg(long, default_value_t = 1e-6)]
    epsilon: f64,
    #[arg(long, default_value_t = 1000)]
    n: usize,
    #[arg(long, default_value_t = 0.618_033_988_749_894_9)]
    nu: f64,
    #[command(flatten)]
    output: Output,
}

/// A validation error attributed to the flag that caused it.
#[derive(Debug)]
struct Invalid {
    flag: &'static str,
    message: String,
}

type CliResult<T> = std::result::Result<T, Invalid>;

fn blame(flag: &'static str) -> impl FnOnce(Error) -> Invalid {
    move |e| Invalid { flag, message: e.to_string() }
}

fn invalid(flag: &'static str, message: impl Into<String>) -> Invalid {
    Invalid { flag, message: message.into() }
}

/// Entry point for the binary: parses the process arguments.
pub fn main() -> i32 {
    run(std::env::args_os())
}

/// Parses `args` (program name first) and executes the command.
pub fn run<I, A>(args: I) -> i32
where
    I: IntoIterator<Item = A>,
    A: Into<std::ffi::OsString> + Clone,
{
    init_logging();
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_CHECK_FAILED,
        Err(Invalid { flag, message }) => {
            eprintln!("error: --{flag}: {message}");
            EXIT_INVALID
        }
    }
}

fn init_logging() {
    let env = env_logger::Env::new().filter_or("ORDMATCH_LOG", "error");
    let _ = env_logger::Builder::from_env(env).format_timestamp(None).try_init();
}

/// Returns whether every check in the emitted document passed.
fn dispatch(command: Command) -> CliResult<bool> {
    match command {
        Command::Gen(args) => gen(args),
        Command::Verify(args) => verify(args),
        Command::Oracle(args) => oracle(args),
        Command::Run(args) => run_alg(args),
        Command::Curve(args) => curve(args),
        Command::Lemmas(args) => lemmas(args),
        Command::Lowerbound(args) => lowerbound(args),
    }
}

fn emit(output: &Output, document: &str) -> CliResult<()> {
    let write = |path: &Path| fs::write(path, document);
    match &output.out {
        Some(path) => write(path).map_err(|e| invalid("out", format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(document.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| invalid("out", e.to_string()))
        }
    }
}

fn emit_json(output: &Output, value: &impl Serialize) -> CliResult<()> {
    let mut doc = serde_json::to_string_pretty(value).expect("documents always serialize");
    doc.push('\n');
    emit(output, &doc)
}

fn load(path: &Path) -> CliResult<Instance<f64>> {
    let bytes = fs::read(path).map_err(|e| invalid("instance", format!("{}: {e}", path.display())))?;
    load_instance(&bytes).map_err(blame("instance"))
}

fn parse_alpha(text: &str, flag: &'static str) -> CliResult<Alpha> {
    text.parse().map_err(blame(flag))
}

fn threaded<R: Send>(p: &Parallelism, f: impl FnOnce() -> R + Send) -> CliResult<R> {
    match p.threads {
        Some(0) => Err(invalid("threads", "must be at least 1")),
        Some(t) => with_threads(t, f).map_err(blame("threads")),
        None => Ok(f()),
    }
}

fn gen(args: GenArgs) -> CliResult<bool> {
    let kind: GenKind = args.kind.parse().map_err(blame("kind"))?;
    let seeded = matches!(kind, GenKind::Euclidean | GenKind::MetricClosure | GenKind::BetaBounded);
    let seed = match (seeded, args.seed) {
        (true, None) => return Err(invalid("seed", format!("required for --kind {kind}"))),
        (_, seed) => seed.unwrap_or(0),
    };
    let variant = match args.variant.as_str() {
        "w1" | "W1" => LbVariant::W1,
        "w2" | "W2" => LbVariant::W2,
        other => return Err(invalid("variant", format!("expected w1 or w2, got '{other}'"))),
    };
    let spec =
        GenSpec { kind, n: args.n, seed, dim: args.dim, epsilon: args.epsilon, nu: args.nu, beta: args.beta, variant };
    let flag = match kind {
        GenKind::LbOneSided if !(0.0..=1.0).contains(&args.nu) => "nu",
        GenKind::LbTwoSided => "epsilon",
        GenKind::BetaBounded if args.beta < 1.0 => "beta",
        GenKind::Euclidean if args.dim == 0 => "dim",
        _ => "n",
    };
    let inst = spec.generate().map_err(blame(flag))?;
    log::info!("generated {}", spec.label());
    emit_json(&args.output, &inst.to_document())?;
    eprintln!("generated {} (n = {})", spec.label(), inst.n());
    Ok(true)
}

#[derive(Serialize)]
struct VerifyDocument {
    n: usize,
    metric: bool,
    beta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
}

fn verify(args: InstanceArgs) -> CliResult<bool> {
    let inst = load(&args.instance)?;
    let doc = VerifyDocument {
        n: inst.n(),
        metric: inst.is_metric(),
        beta: inst.beta_ratio(),
        name: inst.name().map(str::to_string),
    };
    emit_json(&args.output, &doc)?;
    let beta = doc.beta.map_or_else(|| "unbounded".to_string(), |b| b.to_string());
    eprintln!("n = {}, metric = {}, beta = {beta}", doc.n, doc.metric);
    Ok(true)
}

fn oracle(args: InstanceArgs) -> CliResult<bool> {
    let inst = load(&args.instance)?;
    let report = OracleReport::compute(&inst);
    let doc = report.to_document(&inst);
    emit_json(&args.output, &doc)?;
    eprintln!("opt = {}, min = {}", doc.opt_weight, doc.min_weight);
    Ok(true)
}

fn run_alg(args: RunArgs) -> CliResult<bool> {
    let algorithm: Algorithm = args.alg.parse().map_err(blame("alg"))?;
    let alpha = parse_alpha(&args.alpha, "alpha")?;
    if args.beta.is_some_and(|b| b.is_nan() || b < 1.0) {
        return Err(invalid("beta", "must be at least 1"));
    }
    let inst = load(&args.instance)?;
    let mut cfg = TrialConfig::new(algorithm, alpha, args.trials, args.seed);
    cfg.beta = args.beta;
    let report = threaded(&args.parallelism, || run_trials(&inst, &cfg))?.map_err(|e| {
        let flag = match e {
            Error::AlphaOutOfRange { .. } | Error::InvalidAlpha(_) | Error::KTooLarge { .. } => "alpha",
            _ => "trials",
        };
        blame(flag)(e)
    })?;
    emit_json(&args.output, &report)?;
    eprintln!(
        "{} at alpha {}: ratio {:.6} (bound {:.6}) over {} trials: {}",
        report.algorithm,
        report.alpha,
        report.empirical_ratio,
        report.theoretical_ratio,
        report.trials,
        if report.pass { "pass" } else { "FAIL" }
    );
    Ok(report.pass && report.audit.within_budget())
}

fn curve(args: CurveArgs) -> CliResult<bool> {
    let models: Vec<Model> = match &args.model {
        Some(m) => vec![m.parse().map_err(blame("model"))?],
        None => vec![Model::OneSided, Model::TwoSided, Model::TotalOrder],
    };
    let kind: GenKind = args.kind.parse().map_err(blame("kind"))?;
    let grid = args.alpha_grid.split(',').map(|a| parse_alpha(a, "alpha-grid")).collect::<CliResult<Vec<_>>>()?;
    if args.instances == 0 {
        return Err(invalid("instances", "must be at least 1"));
    }
    let family = (0..args.instances as u64)
        .map(|i| GenSpec { dim: args.dim, ..GenSpec::new(kind, args.n, args.seed.wrapping_add(i)) }.generate())
        .collect::<Result<Vec<_>, _>>()
        .map_err(blame("n"))?;

    let points: Vec<CurvePoint> = threaded(&args.parallelism, || {
        models.iter().map(|&m| curve_over(&family, m, &grid, args.trials, args.seed)).collect::<Result<Vec<_>, _>>()
    })?
    .map_err(blame("trials"))?
    .into_iter()
    .flatten()
    .collect();

    emit(&args.output, &curve_csv(&points))?;
    for p in &points {
        eprintln!(
            "{} alpha {}: ratio {:.6} (bound {:.6}, min {:.6}) {}",
            p.model,
            p.alpha,
            p.empirical_ratio,
            p.theoretical_bound,
            p.min_ratio,
            if p.pass() { "pass" } else { "FAIL" }
        );
    }
    Ok(points.iter().all(|p| p.pass() && p.reports.iter().all(|r| r.audit.within_budget())))
}

fn lemmas(args: LemmaArgs) -> CliResult<bool> {
    let ledger = threaded(&args.parallelism, || lemma_property_suite(args.seed))?;
    emit_json(&args.output, &ledger)?;
    for check in &ledger.checks {
        eprintln!("{}: {} of {} instances failed", check.lemma, check.failures.len(), check.instances);
    }
    Ok(ledger.all_pass())
}

#[derive(Serialize)]
struct OneSidedLowerBound {
    n: usize,
    nu: f64,
    approximation_factor: f64,
}

fn lowerbound(args: LowerBoundArgs) -> CliResult<bool> {
    let kind: GenKind = args.kind.parse().map_err(blame("kind"))?;
    match kind {
        GenKind::LbTwoSided => {
            let mix = lb_two_sided_optimal_mix(args.epsilon).map_err(blame("epsilon"))?;
            emit_json(&args.output, &mix)?;
            eprintln!("p* = {}, approximation factor {:.6}", mix.p_star, mix.approximation_factor);
        }
        GenKind::LbOneSided => {
            if args.n == 0 {
                return Err(invalid("n", "must be at least 1"));
            }
            if !(0.0..=1.0).contains(&args.nu) {
                return Err(invalid("nu", "must lie in [0, 1]"));
            }
            let doc = OneSidedLowerBound {
                n: args.n,
                nu: args.nu,
                approximation_factor: lb_one_sided_ratio(args.n, args.nu),
            };
            emit_json(&args.output, &doc)?;
            eprintln!("random matching: approximation factor {:.6}", doc.approximation_factor);
        }
        other => return Err(invalid("kind", format!("'{other}' is not a lower-bound family"))),
    }
    Ok(true)
}
