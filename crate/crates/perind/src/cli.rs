//! Command-line interface.
//!
//! Exit status: 0 success, 1 usage or input-format error, 2 domain error or
//! failed check, 3 search exhausted.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use perind_core::padic::{vp_binomial_kummer, vp_binomial_legendre, vp_integer};
use perind_core::planner::{
    plan_for_prime, plan_full_decomposition, salt_bounds, DEFAULT_SEARCH_BOUND,
};
use perind_core::schur::SchurModule;
use perind_core::tableaux::ssyt_count;
use perind_core::{
    Error, Integers, IntegersMod, PeriodFactorization, Prime, Rationals, RingMatrix, Strategy,
    YoungDiagram, DEFAULT_ENUMERATION_LIMIT,
};

use crate::checks::{
    check_hom, check_reduce, check_scalar, seeded, CheckReport, Property, RandomElem,
    DEFAULT_SAMPLES, DEFAULT_SEED,
};
use crate::factor::{approx, factor_small, render_factorization, DEFAULT_FACTOR_BOUND};
use crate::format::{format_matrix, parse_matrix, FormatError, ParseElem, RingKind};
use crate::json::{plan_to_json, plans_to_json};
use crate::selftest;

#[derive(Debug, Parser)]
#[command(
    name = "perind",
    version,
    about = "Certified numeric witnesses for period-index computations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// p-adic valuation of an integer or a binomial coefficient.
    Vp(VpArgs),
    /// Number of semistandard tableaux of a shape with entries in 1..=n.
    Count(CountArgs),
    /// Matrix of a Schur functor, or a randomized check of its laws.
    Schur(SchurArgs),
    /// Isolation plans for the primes of a period.
    Plan(PlanArgs),
    /// Divisibility bounds for the index of a multiple.
    Bounds(BoundsArgs),
    /// Run the full invariant suite.
    Selftest(SelftestArgs),
}

#[derive(Debug, Args)]
pub struct VpArgs {
    /// The integer, or the top of the binomial with --binom.
    pub n: BigUint,
    /// Bottom of the binomial.
    #[arg(requires = "binom")]
    pub m: Option<u64>,
    #[arg(short = 'p', long = "prime")]
    pub p: u64,
    /// Take the valuation of C(N, M).
    #[arg(long, requires = "m")]
    pub binom: bool,
    /// Cross-check Kummer's carry count against Legendre's formula.
    #[arg(long, requires = "binom")]
    pub verify: bool,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    /// Partition such as `9`, `260,1` or `1^9`.
    pub partition: YoungDiagram,
    #[arg(short = 'n', value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    /// Print a trial-division factorization.
    #[arg(long)]
    pub factor: bool,
    #[arg(long, default_value_t = DEFAULT_FACTOR_BOUND)]
    pub factor_bound: u64,
    /// Also print a three-digit magnitude.
    #[arg(long)]
    pub approx: bool,
}

#[derive(Debug, Args)]
pub struct SchurArgs {
    pub partition: YoungDiagram,
    #[arg(short = 'n', value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    /// `int`, `mod:<q>` or `rat`.
    #[arg(long, default_value = "int")]
    pub ring: RingKind,
    /// Matrix file, `-` for stdin. Read from stdin when omitted.
    #[arg(long)]
    pub matrix: Option<PathBuf>,
    /// Run `hom`, `scalar` or `reduce` instead of printing a matrix.
    #[arg(long)]
    pub check: Option<Property>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    pub samples: usize,
    /// Modulus for `--check reduce` (defaults to the ring's modulus).
    #[arg(long)]
    pub modulus: Option<u64>,
}

#[derive(Debug, Args)]
pub struct PlanArgs {
    /// Period as prime powers, e.g. `2^2,3^2`.
    pub period: PeriodFactorization,
    #[arg(short = 'm', value_parser = clap::value_parser!(u64).range(1..))]
    pub m: u64,
    /// Plan only this prime; prints a single object instead of an array.
    #[arg(short = 'p', long = "prime")]
    pub p: Option<u64>,
    /// `lemma` (default) or `minimal`.
    #[arg(long)]
    pub strategy: Option<Strategy>,
    #[arg(long, value_enum, default_value_t = Shape::Row)]
    pub shape: Shape,
    /// Search bound for minimal and hook searches.
    #[arg(long, default_value_t = DEFAULT_SEARCH_BOUND)]
    pub bound: u64,
    /// Print three-digit magnitudes of each N on stderr.
    #[arg(long)]
    pub approx: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Shape {
    Row,
    Hook,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct BoundsArgs {
    pub d: u64,
    pub m: i64,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
    NotFound(String),
    Io(io::Error),
    /// Output already written; only the status is left to report.
    Failed,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 1,
            CliError::Domain(_) | CliError::Failed => 2,
            CliError::NotFound(_) => 3,
        }
    }

    fn message(&self) -> Option<String> {
        match self {
            CliError::Usage(m) | CliError::Domain(m) | CliError::NotFound(m) => Some(m.clone()),
            CliError::Io(e) => Some(e.to_string()),
            CliError::Failed => None,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NotFound { .. } => CliError::NotFound(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult = Result<(), CliError>;

/// Parses `args` (including the program name) and runs the command.
/// Returns the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, stdin, out, err) {
        Ok(()) => 0,
        Err(e) => {
            if let Some(message) = e.message() {
                let _ = writeln!(err, "perind: error: {message}");
            }
            e.exit_code()
        }
    }
}

fn dispatch(
    command: Command,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult {
    match command {
        Command::Vp(a) => cmd_vp(a, out),
        Command::Count(a) => cmd_count(a, out),
        Command::Schur(a) => cmd_schur(a, stdin, out),
        Command::Plan(a) => cmd_plan(a, out, err),
        Command::Bounds(a) => cmd_bounds(a, out),
        Command::Selftest(a) => cmd_selftest(a, out),
    }
}

fn cmd_vp(a: VpArgs, out: &mut dyn Write) -> CliResult {
    let p = Prime::new(a.p)?;
    let Some(m) = a.m.filter(|_| a.binom) else {
        writeln!(out, "{}", vp_integer(&a.n, p)?)?;
        return Ok(());
    };
    let n = u64::try_from(&a.n)
        .map_err(|_| CliError::Usage(format!("binomial top {} exceeds u64", a.n)))?;
    let kummer = vp_binomial_kummer(n, m, p)?;
    if !a.verify {
        writeln!(out, "{kummer}")?;
        return Ok(());
    }
    let legendre = vp_binomial_legendre(n, m, p)?;
    if kummer == legendre {
        writeln!(out, "{kummer} (kummer=legendre: ok)")?;
        Ok(())
    } else {
        writeln!(
            out,
            "{kummer} (kummer=legendre: MISMATCH, legendre={legendre})"
        )?;
        Err(CliError::Failed)
    }
}

fn cmd_count(a: CountArgs, out: &mut dyn Write) -> CliResult {
    let count = ssyt_count(&a.partition, a.n);
    if a.factor && count != BigUint::ZERO {
        let f = factor_small(&count, a.factor_bound);
        writeln!(out, "{}", render_factorization(&count, &f))?;
    } else {
        writeln!(out, "{count}")?;
    }
    if a.approx {
        writeln!(out, "approx: {}", approx(&count))?;
    }
    Ok(())
}

fn read_matrix_text(source: Option<&PathBuf>, stdin: &mut dyn Read) -> Result<String, CliError> {
    match source {
        Some(path) if path.as_os_str() != "-" => fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display()))),
        _ => {
            let mut text = String::new();
            stdin.read_to_string(&mut text)?;
            Ok(text)
        }
    }
}

fn read_square<R: ParseElem>(
    text: &str,
    ring: &R,
    n: u32,
) -> Result<RingMatrix<R::Elem>, CliError> {
    let g = parse_matrix(text, ring)?;
    if g.rows() != n as usize || g.cols() != n as usize {
        return Err(Error::DimensionMismatch {
            expected: (n as usize, n as usize),
            found: (g.rows(), g.cols()),
        }
        .into());
    }
    Ok(g)
}

fn print_schur_matrix<R: ParseElem>(
    module: &SchurModule,
    ring: &R,
    text: &str,
    out: &mut dyn Write,
) -> CliResult {
    let g = read_square(text, ring, module.rank())?;
    write!(out, "{}", format_matrix(&module.matrix(&g, ring)?))?;
    Ok(())
}

fn law_check<R: ParseElem + RandomElem>(
    property: Property,
    module: &SchurModule,
    ring: &R,
    a: &SchurArgs,
    fixed: Option<&str>,
) -> Result<CheckReport, CliError> {
    let mut rng = seeded(a.seed);
    match property {
        Property::Hom => {
            let g = fixed.map(|t| read_square(t, ring, a.n)).transpose()?;
            Ok(check_hom(module, ring, a.samples, g.as_ref(), &mut rng)?)
        }
        Property::Scalar => {
            if fixed.is_some() {
                return Err(CliError::Usage(
                    "--check scalar samples its own scalars; drop --matrix".into(),
                ));
            }
            Ok(check_scalar(module, ring, a.samples, &mut rng)?)
        }
        Property::Reduce => unreachable!("handled by the caller"),
    }
}

fn cmd_schur(a: SchurArgs, stdin: &mut dyn Read, out: &mut dyn Write) -> CliResult {
    let module = SchurModule::new(&a.partition, a.n, DEFAULT_ENUMERATION_LIMIT)?;
    let Some(property) = a.check else {
        let text = read_matrix_text(a.matrix.as_ref(), stdin)?;
        return match a.ring {
            RingKind::Int => print_schur_matrix(&module, &Integers, &text, out),
            RingKind::Mod(q) => print_schur_matrix(&module, &IntegersMod::new(q)?, &text, out),
            RingKind::Rat => print_schur_matrix(&module, &Rationals, &text, out),
        };
    };
    let fixed = match &a.matrix {
        Some(path) => Some(read_matrix_text(Some(path), stdin)?),
        None => None,
    };
    let report = if property == Property::Reduce {
        let q = match (a.modulus, a.ring) {
            (Some(q), _) | (None, RingKind::Mod(q)) => IntegersMod::new(q)?,
            (None, _) => {
                return Err(CliError::Usage(
                    "--check reduce needs --modulus or --ring mod:<q>".into(),
                ))
            }
        };
        let g = fixed
            .as_deref()
            .map(|t| read_square(t, &Integers, a.n))
            .transpose()?;
        check_reduce(&module, &q, a.samples, g.as_ref(), &mut seeded(a.seed))?
    } else {
        match a.ring {
            RingKind::Int => law_check(property, &module, &Integers, &a, fixed.as_deref())?,
            RingKind::Mod(q) => law_check(
                property,
                &module,
                &IntegersMod::new(q)?,
                &a,
                fixed.as_deref(),
            )?,
            RingKind::Rat => law_check(property, &module, &Rationals, &a, fixed.as_deref())?,
        }
    };
    writeln!(out, "{report}")?;
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}

fn cmd_plan(a: PlanArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let strategy = match (a.shape, a.strategy) {
        (Shape::Row, s) => s.unwrap_or(Strategy::Lemma),
        (Shape::Hook, None | Some(Strategy::Hook)) => Strategy::Hook,
        (Shape::Hook, Some(s)) => {
            return Err(CliError::Usage(format!(
                "--shape hook cannot be combined with --strategy {s}"
            )))
        }
    };
    if let Some(p) = a.p {
        let plan = plan_for_prime(&a.period, a.m, Prime::new(p)?, strategy, a.bound)?;
        if a.approx {
            writeln!(err, "p={}: N ~ {}", plan.prime, approx(&plan.n))?;
        }
        writeln!(out, "{}", plan_to_json(&plan))?;
        return Ok(());
    }
    let decomposition = plan_full_decomposition(&a.period, a.m, strategy, a.bound)?;
    let mut plans = Vec::new();
    for (_, plan) in decomposition.plans.iter() {
        let plan = plan.clone()?;
        if a.approx {
            writeln!(err, "p={}: N ~ {}", plan.prime, approx(&plan.n))?;
        }
        plans.push(plan);
    }
    writeln!(out, "{}", plans_to_json(&plans))?;
    match decomposition.product_check() {
        Some(true) => {
            writeln!(err, "product check: ok")?;
            Ok(())
        }
        _ => {
            writeln!(err, "product check: FAILED")?;
            Err(CliError::Failed)
        }
    }
}

fn cmd_bounds(a: BoundsArgs, out: &mut dyn Write) -> CliResult {
    let b = salt_bounds(a.d, a.m)?;
    let mut parts = vec![format!("clause1: {}", b.binomial_bound)];
    if b.index_preserved {
        parts.push("clause2: index preserved (gcd(m,d)=1)".into());
    }
    parts.push(format!("clause3: {}", b.gcd_bound));
    writeln!(out, "{}", parts.join(", "))?;
    Ok(())
}

fn cmd_selftest(a: SelftestArgs, out: &mut dyn Write) -> CliResult {
    let outcomes = selftest::run(a.seed);
    for o in &outcomes {
        writeln!(out, "{o}")?;
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    writeln!(out, "{passed}/{} criteria passed", outcomes.len())?;
    if passed == outcomes.len() {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}
