//! The `braidkit` command line: check, act, verify.

use crate::actions::{
    check_c_two_paths, check_intertwining, check_spinorial, classical_limit_table, compare_example_table,
    verify_cross_relations, verify_gaussian, verify_metric_scaling, ActionError, Context, Generator,
};
use crate::hopf::{
    check_star_involution, verify_conjugation_identity, verify_hopf_axioms, verify_module_algebra_all,
    verify_relations,
};
use crate::ncalg::{check_confluence, parse_ncpoly, render, Orientation, RelationSet};
use crate::qcoeff::{QError, QRat};
use crate::report::VerificationReport;
use crate::rtensor::{
    build_euclidean_gauge, build_minkowski_gauge, check_hecke, check_metric, check_reality, check_ybe,
    find_metric, load_metric, load_rmatrix, FileError, Gauge, PairData, RError, RMatrix, Reality,
};
use clap::{Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "braidkit", version, about = "Exact checks for q-deformed conformal algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, clap::Args)]
pub struct Input {
    /// Built-in data set; su2-euclidean when no file is given.
    #[arg(long, value_enum)]
    pub preset: Option<Preset>,
    /// R-matrix file (JSON).
    #[arg(long, value_name = "FILE")]
    pub rmatrix: Option<PathBuf>,
    /// Separate R' file; defaults to the R-matrix itself.
    #[arg(long, value_name = "FILE")]
    pub rprime: Option<PathBuf>,
    /// Metric file (JSON); otherwise the metric is solved for.
    #[arg(long, value_name = "FILE")]
    pub metric: Option<PathBuf>,
    /// Treat the R-matrix file as a small Hecke R and build this gauge from it.
    #[arg(long, value_enum)]
    pub gauge: Option<GaugeArg>,
    /// Machine-readable output.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    Su2Euclidean,
    Su2Minkowski,
    Identity,
    Permutation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GaugeArg {
    Euclidean,
    Minkowski,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Relations,
    ModuleAlgebra,
    HopfAxioms,
    Metric,
    Gaussian,
    Conjugation,
    ClassicalLimit,
    CrossRelations,
    Intertwining,
    Spinorial,
    CTwoPaths,
    Star,
    ExampleTable,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Yang-Baxter, Hecke, reality, confluence and metric checks.
    Check {
        /// R-matrix file (same as --rmatrix).
        file: Option<PathBuf>,
        #[command(flatten)]
        input: Input,
    },
    /// Act with one generator on a polynomial and print the reduced result.
    Act {
        /// p<i>, c<i>, l+<i><j>, l-<i><j>, s or s^-1
        generator: String,
        /// Polynomial such as "x1.x2 + (q-q^-1)*x3".
        poly: String,
        #[command(flatten)]
        input: Input,
        /// Conjugate action (R_21^{-1} in place of R); c only.
        #[arg(long)]
        conjugate: bool,
        /// Spinorial generator formula; c only, Euclidean gauge.
        #[arg(long)]
        spinorial: bool,
        /// Print the q = 1 limit in the commutative algebra.
        #[arg(long)]
        q1: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        input: Input,
        /// Degree cap for operator sweeps.
        #[arg(long, default_value_t = 3)]
        degree: usize,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    File(#[from] FileError),
    #[error(transparent)]
    Matrix(#[from] RError),
    #[error(transparent)]
    Parse(#[from] QError),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::File(FileError::Io { .. } | FileError::Syntax { .. }) => EXIT_USAGE,
            CliError::Parse(QError::Parse { .. }) | CliError::Usage(_) => EXIT_USAGE,
            _ => EXIT_FAIL,
        }
    }
}

/// Loaded pair plus what the checks need to know about its origin.
struct Loaded {
    pair: PairData,
    label: String,
    /// Matrices to run the Yang-Baxter check on.
    ybe: Vec<RMatrix>,
    /// Matrix the Hecke condition applies to.
    hecke: RMatrix,
}

fn load(input: &Input, file: Option<&PathBuf>) -> Result<Loaded, CliError> {
    let path = file.or(input.rmatrix.as_ref());
    let mut loaded = match (input.preset, path) {
        (Some(_), Some(_)) => return Err(CliError::Usage("give either --preset or an R-matrix file".into())),
        (None, None) => preset(Preset::Su2Euclidean)?,
        (Some(p), None) => preset(p)?,
        (None, Some(path)) => from_file(path, input)?,
    };
    if let Some(m) = &input.metric {
        let m = load_metric(m)?;
        if m.n != loaded.pair.n() {
            return Err(CliError::Matrix(RError::Dimension(format!(
                "metric has n={}, R has n={}",
                m.n,
                loaded.pair.n()
            ))));
        }
        loaded.pair.metric = Some(m);
    }
    Ok(loaded)
}

fn preset(p: Preset) -> Result<Loaded, CliError> {
    let su2 = crate::rtensor::standard_su2();
    Ok(match p {
        Preset::Su2Euclidean | Preset::Su2Minkowski => {
            let (pair, label) = if p == Preset::Su2Euclidean {
                (build_euclidean_gauge(&su2)?, "su2-euclidean")
            } else {
                (build_minkowski_gauge(&su2)?, "su2-minkowski")
            };
            Loaded {
                ybe: vec![su2.clone(), pair.r.clone(), pair.r_prime.clone()],
                hecke: su2,
                label: label.into(),
                pair,
            }
        }
        Preset::Identity | Preset::Permutation => {
            let m = if p == Preset::Identity { RMatrix::identity(2) } else { RMatrix::permutation(2) };
            let pair = PairData::new(m.clone(), m.clone(), QRat::one(), Reality::None)?;
            Loaded {
                ybe: vec![m.clone()],
                hecke: m,
                label: if p == Preset::Identity { "identity" } else { "permutation" }.into(),
                pair,
            }
        }
    })
}

fn from_file(path: &std::path::Path, input: &Input) -> Result<Loaded, CliError> {
    let f = load_rmatrix(path)?;
    let label = path.display().to_string();
    if let Some(g) = input.gauge {
        let mut pair = match g {
            GaugeArg::Euclidean => build_euclidean_gauge(&f.matrix)?,
            GaugeArg::Minkowski => build_minkowski_gauge(&f.matrix)?,
        };
        if let Some(l) = f.lambda {
            pair.lambda = l;
        }
        return Ok(Loaded {
            ybe: vec![f.matrix.clone(), pair.r.clone(), pair.r_prime.clone()],
            hecke: f.matrix,
            label,
            pair,
        });
    }
    let r_prime = match &input.rprime {
        Some(p) => load_rmatrix(p)?.matrix,
        None => f.matrix.clone(),
    };
    let lambda = f.lambda.unwrap_or_else(QRat::one);
    let mut ybe = vec![f.matrix.clone()];
    if input.rprime.is_some() {
        ybe.push(r_prime.clone());
    }
    let pair = PairData::new(r_prime, f.matrix.clone(), lambda, f.reality)?;
    Ok(Loaded {
        ybe,
        hecke: f.matrix,
        label,
        pair,
    })
}

fn emit(out: &mut dyn Write, json: bool, reports: &[VerificationReport]) -> std::io::Result<()> {
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(reports).expect("reports serialize"))
    } else {
        for r in reports {
            writeln!(out, "{r}")?;
        }
        Ok(())
    }
}

fn exit_for(reports: &[VerificationReport]) -> i32 {
    if reports.iter().all(VerificationReport::passed) {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn cmd_check(input: &Input, file: Option<&PathBuf>) -> Result<Vec<VerificationReport>, CliError> {
    let mut l = load(input, file)?;
    let mut reports: Vec<VerificationReport> = l.ybe.iter().map(check_ybe).collect();
    reports.push(check_hecke(&l.hecke));
    let rels = RelationSet::build(&l.pair.r_prime, Orientation::Covector);
    if l.pair.metric.is_none() {
        l.pair.metric = find_metric(&l.pair, &rels).ok();
    }
    if l.pair.reality != Reality::None {
        reports.push(check_reality(&l.pair)?);
    }
    reports.push(check_confluence(&rels, 3));
    if let Some(m) = &l.pair.metric {
        reports.push(check_metric(&l.pair, &rels, m));
    }
    Ok(reports.into_iter().map(|r| r.param("input", &l.label)).collect())
}

fn cmd_act(
    input: &Input,
    generator: &str,
    poly: &str,
    conjugate: bool,
    spinorial: bool,
    q1: bool,
) -> Result<String, CliError> {
    let g: Generator = generator.parse().map_err(CliError::Usage)?;
    let l = load(input, None)?;
    let ctx = Context::new(l.pair)?;
    let m = parse_ncpoly(poly)?;
    if let Some(w) = m.terms().flat_map(|(w, _)| w.0.iter()).find(|&&i| i as usize > ctx.n()) {
        return Err(CliError::Usage(format!("x{w} is out of range for n={}", ctx.n())));
    }
    let m = ctx.reduce(&m);
    let res = match (g, conjugate, spinorial) {
        (_, true, true) => return Err(CliError::Usage("--conjugate and --spinorial exclude each other".into())),
        (Generator::C(i), true, false) => ctx.act_c_conjugate(i, &m)?,
        (Generator::C(i), false, true) => ctx.act_c_spinorial(i, &m)?,
        (_, true, _) | (_, _, true) => {
            return Err(CliError::Usage("--conjugate and --spinorial apply to c generators only".into()))
        }
        (g, false, false) => ctx.act(&g, &m)?,
    };
    if !q1 {
        return Ok(render(&res));
    }
    let at1 = res.map_coeffs(|c| c.eval_q1().map(|r| QRat::from_ratio(&r)))?;
    let comm = RelationSet::build(&RMatrix::identity(ctx.n()), Orientation::Covector);
    Ok(render(&comm.reduce(&at1)))
}

/// Suites `all` runs; `example-table` is compared separately.
const ALL: [Suite; 12] = [
    Suite::Relations,
    Suite::ModuleAlgebra,
    Suite::HopfAxioms,
    Suite::Metric,
    Suite::Gaussian,
    Suite::Conjugation,
    Suite::ClassicalLimit,
    Suite::CrossRelations,
    Suite::Intertwining,
    Suite::Spinorial,
    Suite::CTwoPaths,
    Suite::Star,
];

fn applicable(s: Suite, ctx: &Context) -> Result<(), String> {
    let needs_metric = matches!(s, Suite::Metric | Suite::Gaussian);
    let needs_star = matches!(s, Suite::Conjugation | Suite::Star);
    if needs_metric && ctx.metric.is_none() {
        return Err("no unique quantum metric".into());
    }
    if needs_star {
        match ctx.pair.reality {
            Reality::None => return Err("no reality type declared".into()),
            Reality::TypeI if ctx.metric.is_none() => return Err("Type I reality without a metric".into()),
            _ => {}
        }
    }
    if s == Suite::Spinorial && !matches!(ctx.pair.spinor, Some((_, Gauge::Euclidean))) {
        return Err("not a Euclidean-gauge pair".into());
    }
    Ok(())
}

pub fn run_suite(s: Suite, ctx: &Context, d: usize) -> VerificationReport {
    let start = Instant::now();
    match s {
        Suite::All => unreachable!("expanded by the caller"),
        Suite::Relations => verify_relations(ctx, d),
        Suite::ModuleAlgebra => verify_module_algebra_all(ctx, d),
        Suite::HopfAxioms => verify_hopf_axioms(ctx, d),
        Suite::Metric => {
            let m = ctx.metric.as_ref().expect("checked applicable");
            VerificationReport::combine(
                "metric",
                vec![check_metric(&ctx.pair, &ctx.rels, m), verify_metric_scaling(ctx, 3)],
            )
        }
        Suite::Gaussian => verify_gaussian(ctx, d),
        Suite::Conjugation => verify_conjugation_identity(ctx, d.min(2)),
        Suite::ClassicalLimit => match classical_limit_table(ctx) {
            Ok(t) => {
                let mut r = t.report(start);
                if let Ok(c) = compare_example_table(ctx) {
                    r = r.note(format!(
                        "q-deformed table vs golden: {}/{} (generator rows), {}/{} (coordinate rows)",
                        c.generator_rows, c.total, c.coordinate_rows, c.total
                    ));
                }
                r
            }
            Err(e) => VerificationReport::error("classical-limit", e.to_string()).timed(start),
        },
        Suite::CrossRelations => verify_cross_relations(ctx, d),
        Suite::Intertwining => check_intertwining(ctx, d),
        Suite::Spinorial => check_spinorial(ctx, d),
        Suite::CTwoPaths => check_c_two_paths(ctx, d + 1),
        Suite::Star => check_star_involution(ctx),
        Suite::ExampleTable => match compare_example_table(ctx) {
            Ok(c) => {
                let witness = (!c.passed()).then(|| match c.mismatches.first() {
                    Some((r, col, got, want)) => format!("entry ({r},{col}): computed {got}, table {want}"),
                    None => "table shape".into(),
                });
                VerificationReport::from_witness("example-table", witness)
                    .param("generator_rows", format!("{}/{}", c.generator_rows, c.total))
                    .param("coordinate_rows", format!("{}/{}", c.coordinate_rows, c.total))
                    .note(format!("{}/{} entries match", c.generator_rows.max(c.coordinate_rows), c.total))
                    .timed(start)
            }
            Err(e) => VerificationReport::error("example-table", e.to_string()).timed(start),
        },
    }
}

fn suite_name(s: Suite) -> String {
    s.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

fn cmd_verify(input: &Input, suite: Suite, d: usize, err: &mut dyn Write) -> Result<Vec<VerificationReport>, CliError> {
    let l = load(input, None)?;
    let label = l.label.clone();
    let ctx = Context::new(l.pair)?;
    let mut reports = Vec::new();
    let suites: Vec<Suite> = if suite == Suite::All { ALL.to_vec() } else { vec![suite] };
    for s in suites {
        match applicable(s, &ctx) {
            Ok(()) => reports.push(run_suite(s, &ctx, d).param("input", &label)),
            Err(why) if suite == Suite::All => {
                let _ = writeln!(err, "skipped {}: {why}", suite_name(s));
            }
            Err(why) => reports.push(VerificationReport::error(suite_name(s), why).param("input", &label)),
        }
    }
    let (calls, bad) = crate::qcoeff::division_stats();
    if bad > 0 {
        reports.push(VerificationReport::fail(
            "exact-division",
            format!("{bad} of {calls} divisions by q - q^-1 were not exact"),
        ));
    }
    Ok(reports)
}

/// Run a parsed command; returns the exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let res = match &cli.command {
        Command::Check { file, input } => cmd_check(input, file.as_ref()).map(|r| (input.json, r)),
        Command::Verify { suite, input, degree } => cmd_verify(input, *suite, *degree, err).map(|r| (input.json, r)),
        Command::Act {
            generator,
            poly,
            input,
            conjugate,
            spinorial,
            q1,
        } => {
            return match cmd_act(input, generator, poly, *conjugate, *spinorial, *q1) {
                Ok(s) if input.json => {
                    let v = serde_json::json!({ "generator": generator, "input": poly, "result": s });
                    let _ = writeln!(out, "{v}");
                    EXIT_PASS
                }
                Ok(s) => {
                    let _ = writeln!(out, "{s}");
                    EXIT_PASS
                }
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    e.exit_code()
                }
            }
        }
    };
    match res {
        Ok((json, reports)) => {
            let _ = emit(out, json, &reports);
            exit_for(&reports)
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Entry point for the binary.
pub fn main_entry() -> i32 {
    let cli = Cli::parse();
    run(cli, &mut std::io::stdout(), &mut std::io::stderr())
}

/// Parse arguments (without the program name) and run; clap errors map to exit 2.
pub fn run_args<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("braidkit")).chain(args.into_iter().map(Into::into));
    match Cli::try_parse_from(argv) {
        Ok(cli) => run(cli, out, err),
        Err(e) => {
            let _ = write!(err, "{e}");
            if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            }
        }
    }
}
