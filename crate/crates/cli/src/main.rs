//! Command-line front end: point evaluation, tables, and the identity suite.

mod functions;
mod output;
mod parse;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rayon::prelude::*;
use zetakit::fdbe::Strategy;
use zetakit::identity::{catalog, run_catalog, Backend, FaultTarget, GridSize};
use zetakit::numeric::debug_corrupt_bernoulli_table;
use zetakit::selftest::{run_selftest, SelftestOptions};
use zetakit::{EvalConfig, Error};

use crate::functions::{function_list, Function};
use crate::output::{Format, Row, Sink};

/// Environment variable overriding the series term budget.
const MAX_TERMS_ENV: &str = "ZETAKIT_MAX_TERMS";

#[derive(Parser, Debug)]
#[command(name = "zetakit", version, about = "Extended Fermi-Dirac / Bose-Einstein functions and the Hurwitz-Lerch zeta family")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one function at a single point.
    Eval(EvalArgs),
    /// Evaluate one function over a grid of points.
    Table(EvalArgs),
    /// Run the identity catalog.
    Check(CheckArgs),
    /// Run golden-value checks and the identity catalog on reduced grids.
    Selftest(SelftestArgs),
}

#[derive(Args, Debug)]
struct EvalArgs {
    /// Function name.
    #[arg(long = "fn", value_name = "NAME")]
    function: String,
    /// Order parameter ν (complex as a+bi; start:stop:count for tables).
    #[arg(long, allow_hyphen_values = true)]
    nu: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    /// Lerch/polylog argument.
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    /// Hurwitz/Lerch shift.
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// Evaluation strategy for ext_fd / ext_be.
    #[arg(long, default_value = "auto")]
    strategy: String,
    /// Relative tolerance for series.
    #[arg(long)]
    rel_tol: Option<f64>,
    /// Relative tolerance for quadrature.
    #[arg(long)]
    quad_tol: Option<f64>,
    /// Term budget for series (overrides ZETAKIT_MAX_TERMS).
    #[arg(long)]
    max_terms: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to a file instead of standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Comma-separated identity names or prefixes.
    #[arg(long)]
    only: Option<String>,
    /// Perturb one function's output by 1e-6 relative.
    #[arg(long, value_name = "FUNCTION")]
    inject_fault: Option<String>,
    #[arg(long, value_enum, default_value_t = GridArg::Full)]
    grid: GridArg,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// List catalog names and exit.
    #[arg(long)]
    list: bool,
}

#[derive(Args, Debug)]
struct SelftestArgs {
    /// Smallest grids only.
    #[arg(long)]
    quick: bool,
    #[arg(long, value_name = "FUNCTION")]
    inject_fault: Option<String>,
    /// Perturb the Bernoulli table before first use.
    #[arg(long, hide = true)]
    debug_corrupt_bernoulli: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GridArg {
    Full,
    Reduced,
    Quick,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Eval(Error),
    Io(std::io::Error),
    /// Identity or selftest failure; output has already been written.
    Check,
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) | Failure::Io(_) => 1,
            Failure::Eval(Error::Convergence(_)) => 3,
            Failure::Eval(_) => 2,
            Failure::Check => 4,
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn config(args: &EvalArgs) -> Result<EvalConfig, Failure> {
    let mut cfg = EvalConfig::default();
    if let Ok(v) = std::env::var(MAX_TERMS_ENV) {
        cfg.series.max_terms = v
            .trim()
            .parse()
            .map_err(|_| usage(format!("{MAX_TERMS_ENV}='{v}' is not a positive integer")))?;
    }
    if let Some(n) = args.max_terms {
        cfg.series.max_terms = n;
    }
    if let Some(t) = args.rel_tol {
        cfg.series.rel_tol = t;
    }
    if let Some(t) = args.quad_tol {
        cfg.quad.rel_tol = t;
    }
    cfg.series.validate().map_err(|e| usage(e.to_string()))?;
    cfg.quad.validate().map_err(|e| usage(e.to_string()))?;
    Ok(cfg)
}

/// Cartesian product of the function's parameter grids, first parameter slowest.
fn points(f: Function, args: &EvalArgs, single: bool) -> Result<Vec<BTreeMap<String, Complex64>>, Failure> {
    let given = [("nu", &args.nu), ("s", &args.s), ("x", &args.x), ("z", &args.z), ("a", &args.a)];
    for (name, value) in given {
        if value.is_some() && !f.params().contains(&name) {
            return Err(usage(format!("{} does not take --{name}", f.name())));
        }
    }
    let mut grids = Vec::new();
    for &name in f.params() {
        let text = given
            .iter()
            .find(|(n, _)| *n == name)
            .and_then(|(_, v)| v.as_deref())
            .ok_or_else(|| usage(format!("{} requires --{name}", f.name())))?;
        let grid = if single {
            vec![parse::parse_complex(text).map_err(|e| usage(format!("--{name}: {e}")))?]
        } else {
            parse::parse_grid(text).map_err(|e| usage(format!("--{name}: {e}")))?
        };
        grids.push((name, grid));
    }
    let mut out = vec![BTreeMap::new()];
    for (name, grid) in &grids {
        out = out
            .into_iter()
            .flat_map(|p| {
                grid.iter().map(move |&v| {
                    let mut q = p.clone();
                    q.insert(name.to_string(), v);
                    q
                })
            })
            .collect();
    }
    for p in &out {
        f.check_point(p).map_err(usage)?;
    }
    Ok(out)
}

fn resolve(args: &EvalArgs) -> Result<(Function, Strategy, EvalConfig), Failure> {
    let f = Function::lookup(&args.function)
        .ok_or_else(|| usage(format!("unknown function '{}'; available: {}", args.function, function_list())))?;
    let strategy: Strategy = args.strategy.parse().map_err(|e: Error| usage(e.to_string()))?;
    if strategy != Strategy::Auto && !f.takes_strategy() {
        return Err(usage(format!("{} does not take --strategy", f.name())));
    }
    Ok((f, strategy, config(args)?))
}

fn cmd_eval(args: &EvalArgs) -> Result<(), Failure> {
    let (f, strategy, cfg) = resolve(args)?;
    let point = points(f, args, true)?.remove(0);
    let result = f.evaluate(&point, strategy, &cfg).map_err(Failure::Eval)?;
    let mut sink = Sink::open(args.output.as_deref())?;
    output::write_rows(&mut sink, args.format, f, &[Row::new(point, Ok(result))], true)?;
    Ok(())
}

fn cmd_table(args: &EvalArgs) -> Result<(), Failure> {
    let (f, strategy, cfg) = resolve(args)?;
    let pts = points(f, args, false)?;
    let rows: Vec<Row> = pts
        .into_par_iter()
        .map(|p| {
            let r = f.evaluate(&p, strategy, &cfg);
            Row::new(p, r)
        })
        .collect();
    let mut sink = Sink::open(args.output.as_deref())?;
    output::write_rows(&mut sink, args.format, f, &rows, false)?;
    Ok(())
}

fn backend(fault: Option<&str>) -> Result<Backend, Failure> {
    let fault = fault
        .map(|t| t.parse::<FaultTarget>())
        .transpose()
        .map_err(|e| usage(format!("{e}; targets: hurwitz_zeta, lerch_phi, ext_fd, ext_be, chi_ratio")))?;
    Ok(Backend::default().with_fault(fault))
}

fn cmd_check(args: &CheckArgs) -> Result<(), Failure> {
    let mut sink = Sink::open(args.output.as_deref())?;
    if args.list {
        for spec in catalog(GridSize::Quick) {
            sink.line(&format!("{}\t{}", spec.name, spec.description))?;
        }
        return Ok(());
    }
    let b = backend(args.inject_fault.as_deref())?;
    let size = match args.grid {
        GridArg::Full => GridSize::Full,
        GridArg::Reduced => GridSize::Reduced,
        GridArg::Quick => GridSize::Quick,
    };
    let reports = run_catalog(args.only.as_deref(), &b, size);
    if reports.is_empty() {
        return Err(usage(format!(
            "no identity matches '{}'",
            args.only.as_deref().unwrap_or_default()
        )));
    }
    output::write_reports(&mut sink, args.format, &reports)?;
    if reports.iter().all(|r| r.pass) {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn cmd_selftest(args: &SelftestArgs) -> Result<(), Failure> {
    if args.debug_corrupt_bernoulli && !debug_corrupt_bernoulli_table() {
        return Err(usage("Bernoulli table already initialised"));
    }
    let opts = SelftestOptions {
        quick: args.quick,
        backend: backend(args.inject_fault.as_deref())?,
    };
    let report = run_selftest(&opts);
    let mut sink = Sink::open(args.output.as_deref())?;
    output::write_selftest(&mut sink, args.format, &report)?;
    if report.pass {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = match &cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Table(a) => cmd_table(a),
        Command::Check(a) => cmd_check(a),
        Command::Selftest(a) => cmd_selftest(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(m) => eprintln!("error: {m}"),
                Failure::Eval(e) => eprintln!("error: {e}"),
                Failure::Io(e) => eprintln!("error: {e}"),
                Failure::Check => {}
            }
            ExitCode::from(f.code())
        }
    }
}
