use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use tau_nakayama::enumeration::{count_algebra, enumerate_chains, ChoiceChain};
use tau_nakayama::nakayama::{bongartz, AlgebraId, Indecomposable};
use tau_nakayama::perpendicular::{j_category, verify_bongartz_closed_form};
use tau_nakayama::verify::{run_suite, Suite};
use tau_nakayama::Error;

/// Counts and checks complete tau-exceptional sequences over Nakayama algebras.
#[derive(Debug, Parser)]
#[command(name = "taunak", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    /// Gamma(n, 2), linear with radical square zero.
    Gamma2,
    /// Lambda(n, 2), cyclic with radical square zero.
    Lambda2,
    /// Lambda(n, n).
    Lambdan,
    /// Gamma(n, n - 1); n = 1, 2 read as Gamma(1, 1) and Gamma(2, 1).
    Gamman1,
    /// Gamma(n, t) for the t given by --t.
    Gamma,
    /// Lambda(n, t) for the t given by --t.
    Lambda,
}

#[derive(Debug, Clone, clap::Args)]
struct AlgebraArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    n: usize,
    /// Nilpotency index, only for --family gamma|lambda.
    #[arg(long)]
    t: Option<usize>,
}

#[derive(Debug, Clone, clap::Args)]
struct ModuleArgs {
    #[arg(long)]
    top: usize,
    #[arg(long)]
    len: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of complete tau-exceptional sequences.
    Count {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        json: bool,
    },
    /// Counts for n = 1..=n-max.
    Table {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Compute rows in parallel (output is identical).
        #[arg(long)]
        parallel: bool,
    },
    /// The tau-perpendicular category J(M) as a direct sum.
    Jcat {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long)]
        json: bool,
    },
    /// Bongartz completion of a tau-rigid module.
    Bongartz {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[command(flatten)]
        module: ModuleArgs,
        /// Compare with the closed-form completion.
        #[arg(long)]
        check: bool,
        #[arg(long)]
        json: bool,
    },
    /// Stream complete tau-exceptional sequences.
    Enumerate {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        limit: Option<usize>,
        /// One JSON object per line.
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: Suite,
        /// Series order for the egf suite.
        #[arg(long)]
        order: Option<usize>,
        /// Size bound for the other suites.
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug)]
enum Failure {
    /// A verification reported a failing check.
    Check,
    Usage(String),
    Unsupported(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnsupportedFamily { .. } => Failure::Unsupported(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

type Outcome = Result<(), Failure>;

/// The algebra named on the command line, plus a note when a family
/// convention replaces the literal algebra.
fn resolve(family: FamilyArg, n: usize, t: Option<usize>) -> Result<(AlgebraId, Option<String>), Failure> {
    if t.is_some() && !matches!(family, FamilyArg::Gamma | FamilyArg::Lambda) {
        return Err(Failure::Usage("--t is only accepted with --family gamma|lambda".into()));
    }
    let need_n = |min: usize| {
        if n < min {
            Err(Failure::Usage(format!("this family needs n >= {min}")))
        } else {
            Ok(())
        }
    };
    let (a, note) = match family {
        FamilyArg::Gamma2 => {
            need_n(1)?;
            (AlgebraId::gamma(n, 2.min(n)), None)
        }
        FamilyArg::Lambda2 => {
            need_n(1)?;
            (AlgebraId::lambda(n, 2), None)
        }
        FamilyArg::Lambdan => {
            need_n(1)?;
            (AlgebraId::lambda(n, n), None)
        }
        FamilyArg::Gamman1 => {
            need_n(1)?;
            match n {
                1 => (AlgebraId::gamma(1, 1), Some("n = 1 is read as Gamma(1,1)".to_string())),
                2 => (
                    AlgebraId::gamma(2, 1),
                    Some("n = 2 is read as the semisimple Gamma(2,1)".to_string()),
                ),
                _ => (AlgebraId::gamma(n, n - 1), None),
            }
        }
        FamilyArg::Gamma | FamilyArg::Lambda => {
            let t = t.ok_or_else(|| Failure::Usage("--family gamma|lambda needs --t".into()))?;
            if family == FamilyArg::Gamma {
                (AlgebraId::gamma(n, t), None)
            } else {
                (AlgebraId::lambda(n, t), None)
            }
        }
    };
    a.validate()?;
    Ok((a, note))
}

fn resolve_module(a: &AlgebraId, m: &ModuleArgs) -> Result<Indecomposable, Failure> {
    let m = Indecomposable::new(m.top, m.len);
    a.check_module(&m)?;
    Ok(m)
}

#[derive(Serialize)]
struct CountOut<'a> {
    algebra: &'a AlgebraId,
    count: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

#[derive(Serialize)]
struct Row {
    n: usize,
    count: String,
}

#[derive(Serialize)]
struct Summand {
    top: usize,
    len: usize,
    label: String,
}

#[derive(Serialize)]
struct BongartzOut<'a> {
    algebra: &'a AlgebraId,
    module: &'a Indecomposable,
    summands: Vec<Summand>,
    #[serde(skip_serializing_if = "Option::is_none")]
    check: Option<&'static str>,
}

fn cmd_count(out: &mut impl Write, args: &AlgebraArgs, json: bool) -> Outcome {
    let (a, note) = resolve(args.family, args.n, args.t)?;
    let count = count_algebra(&a)?;
    if json {
        let v = CountOut {
            algebra: &a,
            count: count.to_string(),
            note,
        };
        serde_json::to_writer(&mut *out, &v)?;
        writeln!(out)?;
    } else {
        if let Some(note) = note {
            eprintln!("note: {note}");
        }
        writeln!(out, "{count}")?;
    }
    Ok(())
}

fn cmd_table(out: &mut impl Write, family: FamilyArg, n_max: usize, format: Format, parallel: bool) -> Outcome {
    if matches!(family, FamilyArg::Gamma | FamilyArg::Lambda) {
        return Err(Failure::Usage("table needs one of gamma2|lambda2|lambdan|gamman1".into()));
    }
    let row = |n: usize| -> Result<Row, Failure> {
        let (a, _) = resolve(family, n, None)?;
        Ok(Row {
            n,
            count: count_algebra(&a)?.to_string(),
        })
    };
    let rows: Vec<Row> = if parallel {
        (1..=n_max).into_par_iter().map(row).collect::<Result<_, _>>()?
    } else {
        (1..=n_max).map(row).collect::<Result<_, _>>()?
    };
    match format {
        Format::Csv => {
            writeln!(out, "n,count")?;
            for r in &rows {
                writeln!(out, "{},{}", r.n, r.count)?;
            }
        }
        Format::Json => {
            serde_json::to_writer(&mut *out, &rows)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

fn cmd_jcat(out: &mut impl Write, args: &AlgebraArgs, m: &ModuleArgs, json: bool) -> Outcome {
    let (a, _) = resolve(args.family, args.n, args.t)?;
    let m = resolve_module(&a, m)?;
    let shape = j_category(&a, &m)?;
    if json {
        serde_json::to_writer(&mut *out, &shape)?;
        writeln!(out)?;
    } else {
        writeln!(out, "{shape}")?;
    }
    Ok(())
}

fn cmd_bongartz(out: &mut impl Write, args: &AlgebraArgs, m: &ModuleArgs, check: bool, json: bool) -> Outcome {
    let (a, _) = resolve(args.family, args.n, args.t)?;
    let m = resolve_module(&a, m)?;
    let summands = bongartz(&a, &m)?;
    let verdict = if check {
        Some(if verify_bongartz_closed_form(&a, &m)? { "PASS" } else { "FAIL" })
    } else {
        None
    };
    if json {
        let v = BongartzOut {
            algebra: &a,
            module: &m,
            summands: summands
                .iter()
                .map(|s| Summand {
                    top: s.top,
                    len: s.len,
                    label: a.label(s),
                })
                .collect(),
            check: verdict,
        };
        serde_json::to_writer(&mut *out, &v)?;
        writeln!(out)?;
    } else {
        let labels: Vec<String> = summands.iter().map(|s| a.label(s)).collect();
        writeln!(out, "{}", labels.join(", "))?;
        if let Some(v) = verdict {
            writeln!(out, "{v}")?;
        }
    }
    match verdict {
        Some("FAIL") => Err(Failure::Check),
        _ => Ok(()),
    }
}

/// A chain as a sequence `(X_1, ..., X_n)`: the last step chosen comes first.
fn format_chain(chain: &ChoiceChain) -> String {
    chain
        .steps
        .iter()
        .rev()
        .map(|s| format!("{}@{}", s.module, s.algebra))
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_enumerate(out: &mut impl Write, args: &AlgebraArgs, limit: Option<usize>, json: bool) -> Outcome {
    let (a, _) = resolve(args.family, args.n, args.t)?;
    let shape = tau_nakayama::perpendicular::CategoryShape::single(a);
    for chain in enumerate_chains(&shape, limit) {
        let chain = chain?;
        if json {
            serde_json::to_writer(&mut *out, &chain)?;
            writeln!(out)?;
        } else {
            writeln!(out, "{}", format_chain(&chain))?;
        }
    }
    Ok(())
}

fn cmd_verify(out: &mut impl Write, suite: Suite, order: Option<usize>, n_max: Option<usize>, json: bool) -> Outcome {
    let bound = match suite {
        Suite::Egf => order.or(n_max),
        _ => n_max,
    }
    .unwrap_or(suite.default_n_max());
    let report = run_suite(suite, bound);
    if json {
        serde_json::to_writer(&mut *out, &report)?;
        writeln!(out)?;
    } else {
        for c in &report.checks {
            writeln!(out, "{c}")?;
        }
        let verdict = if report.passed() { "PASS" } else { "FAIL" };
        writeln!(out, "{suite}: {verdict}")?;
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn run(cli: Cli) -> Outcome {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match &cli.command {
        Command::Count { algebra, json } => cmd_count(&mut out, algebra, *json),
        Command::Table {
            family,
            n_max,
            format,
            parallel,
        } => cmd_table(&mut out, *family, *n_max, *format, *parallel),
        Command::Jcat { algebra, module, json } => cmd_jcat(&mut out, algebra, module, *json),
        Command::Bongartz {
            algebra,
            module,
            check,
            json,
        } => cmd_bongartz(&mut out, algebra, module, *check, *json),
        Command::Enumerate { algebra, limit, json } => cmd_enumerate(&mut out, algebra, *limit, *json),
        Command::Verify {
            suite,
            order,
            n_max,
            json,
        } => cmd_verify(&mut out, *suite, *order, *n_max, *json),
    };
    out.flush()?;
    result
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Unsupported(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

