//! `dd3`: run the verification suites, emit constructed objects, and spot-check
//! relations at rational points.
//!
//! Exit status is 0 when everything checked holds, 1 when a relation fails and
//! 2 on usage or input errors.

mod objects;
mod relations;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dd3_core::scalars::parse_rational;
use dd3_core::suites::{run_suite, Suite};
use dd3_core::{Rational, RelationReport, Symbol};
use num::Zero;

use objects::{emit, Format, Object};
use relations::{evaluate, EvalRelation};

#[derive(Parser)]
#[command(
    name = "dd3",
    version,
    about = "Exact verification of the Drinfeld double D(D3) and its Lax operators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and report every relation.
    Verify {
        /// Suite to run.
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        /// Print the reports as a JSON array.
        #[arg(long)]
        json: bool,
        /// Worker threads (defaults to the number of logical CPUs).
        #[arg(long, env = "DD3_JOBS", value_parser = clap::value_parser!(u16).range(1..))]
        jobs: Option<u16>,
    },
    /// Print a constructed object.
    Emit {
        /// R21, R3p, L2, L3, UR, c1, c2, rep:<label> or derivedL:<lax>:<label>.
        #[arg(long)]
        object: Object,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Symbol values such as `x=2` or `y=-3/4`.
        #[arg(long, num_args = 1.., value_delimiter = ',', value_parser = parse_binding)]
        subst: Vec<(Symbol, Rational)>,
    },
    /// Evaluate both sides of a relation at a rational point.
    Eval {
        /// ybe-parametric:<R21|R3p>, lax-universal:<2|3> or rll:<2|3>:<label>.
        #[arg(long)]
        relation: EvalRelation,
        /// Values for both `x` and `y`.
        #[arg(long, num_args = 1.., value_delimiter = ',', value_parser = parse_binding, required = true)]
        subst: Vec<(Symbol, Rational)>,
        /// Worker threads (defaults to the number of logical CPUs).
        #[arg(long, env = "DD3_JOBS", value_parser = clap::value_parser!(u16).range(1..))]
        jobs: Option<u16>,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|_| {
        format!(
            "unknown suite `{s}`; expected one of {}",
            Suite::names().join(", ")
        )
    })
}

fn parse_binding(s: &str) -> Result<(Symbol, Rational), String> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| format!("expected symbol=rational, got `{s}`"))?;
    let sym = match name.trim() {
        "x" => Symbol::X,
        "y" => Symbol::Y,
        other => return Err(format!("unknown symbol `{other}`; expected x or y")),
    };
    let q = parse_rational(value.trim()).map_err(|e| format!("bad value in `{s}`: {e}"))?;
    Ok((sym, q))
}

/// Symbol bindings in the order given; a later binding of a symbol wins.
#[derive(Default)]
pub struct Substitution {
    x: Option<Rational>,
    y: Option<Rational>,
}

impl Substitution {
    fn new(bindings: &[(Symbol, Rational)]) -> Self {
        let mut s = Substitution::default();
        for (sym, q) in bindings {
            match sym {
                Symbol::X => s.x = Some(q.clone()),
                Symbol::Y => s.y = Some(q.clone()),
            }
        }
        s
    }

    pub fn iter(&self) -> impl Iterator<Item = (Symbol, &Rational)> {
        [(Symbol::X, self.x.as_ref()), (Symbol::Y, self.y.as_ref())]
            .into_iter()
            .filter_map(|(s, q)| q.map(|q| (s, q)))
    }
}

enum Failure {
    Usage(String),
    Relation,
}

impl From<dd3_core::Error> for Failure {
    fn from(e: dd3_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn with_jobs<T: Send>(jobs: Option<u16>, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = jobs {
        builder = builder.num_threads(usize::from(n));
    }
    let pool = builder
        .build()
        .map_err(|e| Failure::Usage(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(f))
}

fn describe(report: &RelationReport) -> String {
    match &report.witness {
        None => format!("PASS {}", report.relation),
        Some(w) => format!(
            "FAIL {} at ({}, {}): lhs = {} rhs = {}",
            report.relation, w.row, w.col, w.lhs, w.rhs
        ),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let io = |e: std::io::Error| Failure::Usage(format!("cannot write output: {e}"));
    match cli.command {
        Command::Verify { suite, json, jobs } => {
            let reports = with_jobs(jobs, || run_suite(suite))??;
            if json {
                let text = serde_json::to_string(&reports).expect("reports serialize");
                writeln!(out, "{text}").map_err(io)?;
            } else {
                for report in &reports {
                    writeln!(out, "{}", describe(report)).map_err(io)?;
                }
                let failed = reports.iter().filter(|r| !r.passed()).count();
                eprintln!("{} relations checked, {} failed", reports.len(), failed);
            }
            if reports.iter().all(RelationReport::passed) {
                Ok(())
            } else {
                Err(Failure::Relation)
            }
        }
        Command::Emit {
            object,
            format,
            subst,
        } => {
            let text = emit(object, format, &Substitution::new(&subst))?;
            writeln!(out, "{text}").map_err(io)?;
            Ok(())
        }
        Command::Eval {
            relation,
            subst,
            jobs,
        } => {
            let subst = Substitution::new(&subst);
            let (Some(x), Some(y)) = (subst.x.clone(), subst.y.clone()) else {
                return Err(Failure::Usage("eval needs values for both x and y".into()));
            };
            if x.is_zero() || y.is_zero() {
                return Err(Failure::Usage(
                    "x and y must be nonzero: the relation involves x/y".into(),
                ));
            }
            let (equal, mut report) = with_jobs(jobs, || evaluate(relation, &x, &y))??;
            report["relation"] = relation.to_string().into();
            report["x"] = dd3_core::scalars::format_rational(&x).into();
            report["y"] = dd3_core::scalars::format_rational(&y).into();
            writeln!(out, "{report}").map_err(io)?;
            eprintln!("{}", if equal { "equal" } else { "unequal" });
            if equal {
                Ok(())
            } else {
                Err(Failure::Relation)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Relation) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
