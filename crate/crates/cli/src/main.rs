//! `pertinent`: counts pertinent binary matrices, emits probability curves and
//! runs the verification suites.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Number, Value};

use pertinent::dag::count_dags_by_edges_with;
use pertinent::discrete::{check_inclusion, omega_tilde_with, omega_with, ValueSet};
use pertinent::enumeration::{count_pertinent_with, CoefficientTable};
use pertinent::genfunc::h_table_gf;
use pertinent::matrix::parse_rational;
use pertinent::probability::{ChainScan, FamilyCurves};
use pertinent::report::{all_pass, CheckReport};
use pertinent::verify::{self, Suite};
use pertinent::{Error, Family, Parallelism, TypeSpec};

#[derive(Parser)]
#[command(name = "pertinent", version, about = "Exact counts of pertinent binary matrices")]
struct Cli {
    /// Worker threads for exhaustive scans (default: all cores).
    #[arg(long, global = true, env = "PERTINENT_WORKERS")]
    workers: Option<usize>,

    /// Run every scan on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficient table of one family at one dimension.
    Count {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = RouteArg::Enumeration)]
        route: RouteArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// CSV of P_A, P_B, P_C on the grid step, 2*step, ... inside (0, 1).
    Curve {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_rational_arg)]
        step: BigRational,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Runs a verification suite.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Least attainable determinant and the attaining set.
    Omega {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Discrete literal such as `0,1/2@1/2,2@1/2`, or an interval `[0,2]`.
        #[arg(long, value_parser = parse_value_set)]
        values: ValueSet,
        /// Binarized set instead.
        #[arg(long)]
        tilde: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compares the binarized attaining sets of a discrete and a continuous set.
    Inclusion {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_value_set)]
        dis: ValueSet,
        #[arg(long, value_parser = parse_value_set)]
        cnt: ValueSet,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Enumeration,
    Dag,
    Gf,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

fn parse_family(s: &str) -> Result<Family, String> {
    Family::from_str(s).map_err(|e| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    Suite::from_str(s).map_err(|e| e.to_string())
}

fn parse_rational_arg(s: &str) -> Result<BigRational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn parse_value_set(s: &str) -> Result<ValueSet, String> {
    ValueSet::parse(s).map_err(|e| e.to_string())
}

enum Failure {
    Mismatch(String),
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let par = if cli.sequential {
        Parallelism::Sequential
    } else {
        match cli.workers {
            Some(0) => {
                eprintln!("error: --workers must be at least 1");
                return ExitCode::from(2);
            }
            Some(w) => Parallelism::workers(w),
            None => Parallelism::default(),
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, par, &mut out).and_then(|()| out.flush().map_err(Failure::Io));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(msg)) => {
            let _ = out.flush();
            eprintln!("mismatch: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run<W: Write>(command: Command, par: Parallelism, out: &mut W) -> Outcome {
    match command {
        Command::Count { family, n, route, format } => cmd_count(family, n, route, format, par, out),
        Command::Curve { n, step, out: path } => cmd_curve(n, &step, path, par, out),
        Command::Verify { suite, n, format } => cmd_verify(suite, n, format, par, out),
        Command::Omega { family, n, values, tilde, format } => {
            cmd_omega(family, n, &values, tilde, format, par, out)
        }
        Command::Inclusion { family, n, dis, cnt } => cmd_inclusion(family, n, &dis, &cnt, out),
    }
}

fn big_number(x: &BigUint) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("integer literal"))
}

fn table_json(t: &CoefficientTable) -> Value {
    let spec = t.spec();
    json!({
        "family": spec.family().as_str(),
        "n": spec.n(),
        "m": spec.m(),
        "i_max": spec.i_max(),
        "route": t.route().as_str(),
        "coeffs": t.coeffs().iter().map(big_number).collect::<Vec<_>>(),
        "total": big_number(&t.total()),
    })
}

fn table_text(t: &CoefficientTable) -> String {
    format!(
        "{} {}: [{}] total {}",
        t.spec(),
        t.route().as_str(),
        t.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "),
        t.total()
    )
}

fn cmd_count<W: Write>(
    family: Family,
    n: usize,
    route: RouteArg,
    format: Format,
    par: Parallelism,
    out: &mut W,
) -> Outcome {
    let spec = TypeSpec::new(family, n)?;
    if family != Family::C && matches!(route, RouteArg::Dag | RouteArg::Gf) {
        return Err(Failure::Usage(format!(
            "route {} applies to family C only",
            if route == RouteArg::Dag { "dag" } else { "gf" }
        )));
    }
    let routes = match route {
        RouteArg::All if family == Family::C => {
            vec![RouteArg::Enumeration, RouteArg::Dag, RouteArg::Gf]
        }
        RouteArg::All => vec![RouteArg::Enumeration],
        r => vec![r],
    };
    let tables = routes
        .into_iter()
        .map(|r| match r {
            RouteArg::Enumeration => count_pertinent_with(&spec, par),
            RouteArg::Dag => count_dags_by_edges_with(n, par),
            RouteArg::Gf => h_table_gf(n),
            RouteArg::All => unreachable!(),
        })
        .collect::<Result<Vec<_>, _>>()?;
    match format {
        Format::Json => {
            let v = if route == RouteArg::All {
                Value::Array(tables.iter().map(table_json).collect())
            } else {
                table_json(&tables[0])
            };
            writeln!(out, "{v}")?;
        }
        Format::Text => {
            for t in &tables {
                writeln!(out, "{}", table_text(t))?;
            }
        }
        Format::Csv => {
            writeln!(out, "family,n,route,i,coeff")?;
            for t in &tables {
                for (i, c) in t.coeffs().iter().enumerate() {
                    writeln!(out, "{},{},{},{},{}", family, n, t.route().as_str(), i, c)?;
                }
            }
        }
    }
    if tables.windows(2).any(|w| !w[0].same_counts(&w[1])) {
        return Err(Failure::Mismatch(format!("routes disagree on {spec}")));
    }
    Ok(())
}

fn cmd_curve<W: Write>(
    n: usize,
    step: &BigRational,
    path: Option<PathBuf>,
    par: Parallelism,
    out: &mut W,
) -> Outcome {
    let curves = FamilyCurves::for_dimension(n, par)?;
    let samples = match &path {
        Some(p) => {
            let mut file = BufWriter::new(File::create(p)?);
            let s = curves.emit_curve(step, &mut file, par)?;
            file.flush()?;
            s
        }
        None => curves.emit_curve(step, out, par)?,
    };
    let scan = ChainScan {
        points: samples.iter().map(|s| (s.r.clone(), s.chain_holds())).collect(),
    };
    let summary = if scan.never_holds() {
        "chain holds at no grid point".to_string()
    } else if scan.always_holds() {
        "chain holds at every grid point".to_string()
    } else if let Some((lo, hi)) = scan.boundary() {
        format!("chain boundary ≈ [{}, {}]", to_f64(&lo), to_f64(&hi))
    } else {
        "chain fails at the last grid point".to_string()
    };
    if path.is_some() {
        writeln!(out, "{} rows written", samples.len())?;
        writeln!(out, "{summary}")?;
    } else {
        eprintln!("{summary}");
    }
    Ok(())
}

fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

fn cmd_verify<W: Write>(
    suite: Suite,
    n: Option<usize>,
    format: Format,
    par: Parallelism,
    out: &mut W,
) -> Outcome {
    let reports = verify::run(suite, n, par)?;
    write_reports(&reports, format, out)?;
    if !all_pass(&reports) {
        let failed = reports.iter().filter(|r| !r.pass).count();
        return Err(Failure::Mismatch(format!("{failed} of {} checks failed", reports.len())));
    }
    Ok(())
}

fn write_reports<W: Write>(reports: &[CheckReport], format: Format, out: &mut W) -> io::Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(reports).expect("serializable")),
        Format::Text | Format::Csv => {
            for r in reports {
                writeln!(out, "{r}")?;
            }
            writeln!(
                out,
                "{} / {} passed",
                reports.iter().filter(|r| r.pass).count(),
                reports.len()
            )
        }
    }
}

fn cmd_omega<W: Write>(
    family: Family,
    n: usize,
    values: &ValueSet,
    tilde: bool,
    format: Format,
    par: Parallelism,
    out: &mut W,
) -> Outcome {
    let spec = TypeSpec::new(family, n)?;
    let set = if tilde {
        omega_tilde_with(&spec, values, par)?
    } else {
        omega_with(&spec, values, par)?
    };
    let members = set.render();
    let sizes = set.partition_sizes();
    let probability = set.probability().render("r");
    match format {
        Format::Json => {
            let v = json!({
                "family": family.as_str(),
                "n": n,
                "values": values.to_string(),
                "tilde": tilde,
                "u": set.u.to_string(),
                "members": members,
                "partition_sizes": sizes,
                "probability": probability,
            });
            writeln!(out, "{v}")?;
        }
        Format::Text | Format::Csv => {
            writeln!(out, "u = {}", set.u)?;
            writeln!(out, "members: {}", members.len())?;
            for m in &members {
                writeln!(out, "  {m}")?;
            }
            writeln!(out, "partition sizes: {sizes:?}")?;
            writeln!(out, "probability: {probability}")?;
        }
    }
    Ok(())
}

fn cmd_inclusion<W: Write>(
    family: Family,
    n: usize,
    dis: &ValueSet,
    cnt: &ValueSet,
    out: &mut W,
) -> Outcome {
    let r = check_inclusion(family, n, dis, cnt)?;
    writeln!(out, "u~ discrete = {}, u~ continuous = {}", r.u_dis, r.u_cnt)?;
    writeln!(out, "discrete members: {}", r.dis.len())?;
    writeln!(out, "continuous members: {}", r.cnt.len())?;
    writeln!(out, "inclusion holds: {}", r.includes)?;
    writeln!(out, "disjoint: {}", r.disjoint)?;
    for m in &r.extra {
        writeln!(out, "  only discrete: {m}")?;
    }
    for m in &r.missing {
        writeln!(out, "  only continuous: {m}")?;
    }
    if !r.pass() {
        return Err(Failure::Mismatch(format!("inclusion fails for {}", r.spec)));
    }
    Ok(())
}
