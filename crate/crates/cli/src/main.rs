use std::fmt::{Display, Write as _};
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ogf_core::binet::{binet_s2, binet_y2, QuadraticRootData};
use ogf_core::catalog::{catalog_entries, CatalogEntry, EntryKind};
use ogf_core::transforms::{euler_inverse, euler_transform, lambert_partial};
use ogf_core::{
    catalog_lookup, parse_polynomial, run_suites, FamilySpec, Params, Polynomial, Rational, SpecDocument, Status, Suite,
    VerifyOptions,
};

#[derive(Parser)]
#[command(name = "ogf", version, about = "Exact expansion and checking of polynomial-coefficient generating functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a spec file: Y_n without Q, S_n with Q.
    Expand {
        #[arg(long)]
        spec: PathBuf,
        #[command(flatten)]
        format: Format,
    },
    /// Two-term closed form in Q(√D).
    Binet {
        #[arg(long, allow_hyphen_values = true)]
        p1: Rational,
        #[arg(long, allow_hyphen_values = true)]
        p2: Rational,
        #[arg(long, allow_hyphen_values = true, requires = "q1")]
        q0: Option<Rational>,
        #[arg(long, allow_hyphen_values = true, requires = "q0")]
        q1: Option<Rational>,
        #[arg(long)]
        n: u64,
    },
    /// Run cross-check suites; exits 1 if any check fails.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long)]
        seed: Option<u64>,
        /// Random inputs per randomized check.
        #[arg(long)]
        samples: Option<usize>,
        /// Print only FLAGGED and FAIL lines.
        #[arg(long)]
        quiet: bool,
    },
    #[command(subcommand)]
    Catalog(CatalogCommand),
    #[command(subcommand)]
    Transform(TransformCommand),
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// Entry names, kinds and parameters.
    List,
    Eval {
        #[arg(long)]
        name: String,
        /// `K=V` pairs; missing parameters take their defaults.
        #[arg(long, num_args = 1..)]
        params: Vec<String>,
        /// Inclusive range `A..B`.
        #[arg(long, default_value = "0..10")]
        n_range: String,
        /// Use the corrected parameters of an entry with a known erratum.
        #[arg(long)]
        corrected: bool,
        #[command(flatten)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum TransformCommand {
    /// Euler transform of a spec's expansion.
    Euler {
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
        #[arg(long)]
        spec: PathBuf,
        /// Apply T^(-theta) instead.
        #[arg(long)]
        inverse: bool,
        #[command(flatten)]
        format: Format,
    },
    /// Partial sum of the Lambert series sum x^j/(1-x^j).
    Lambert {
        #[arg(long, allow_hyphen_values = true)]
        x: Rational,
        #[arg(long, default_value = "1/1000000000000")]
        tol: Rational,
    },
}

#[derive(Args, Clone, Copy)]
#[group(multiple = false)]
struct Format {
    #[arg(long)]
    json: bool,
    #[arg(long)]
    csv: bool,
}

/// Input problems exit 2; failed checks exit 1.
enum Failure {
    Input(String),
    Checks,
}

impl<E: Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    // a closed pipe is not an error worth reporting
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command, out: &mut String) -> Outcome {
    match cmd {
        Command::Expand { spec, format } => {
            let doc = read_spec(&spec)?;
            let label = if doc.has_numerator { "S" } else { "Y" };
            let values: Vec<String> = doc.coefficients()?.iter().map(Polynomial::to_string).collect();
            print_values(out, label, 0, &values, format);
            Ok(())
        }
        Command::Binet { p1, p2, q0, q1, n } => binet(out, p1, p2, q0.zip(q1), n),
        Command::Verify { suite, n_max, seed, samples, quiet } => verify(out, &suite, n_max, seed, samples, quiet),
        Command::Catalog(CatalogCommand::List) => {
            for e in catalog_entries() {
                print_entry(out, e);
            }
            Ok(())
        }
        Command::Catalog(CatalogCommand::Eval { name, params, n_range, corrected, format }) => {
            let entry = catalog_lookup(&name)?;
            let params = Params::from_assignments(&params)?;
            let range = parse_range(&n_range)?;
            let start = *range.start();
            let values = if corrected {
                if entry.erratum.is_none() {
                    return Err(Failure::Input(format!("'{name}' has no correction")));
                }
                entry.corrected_values(&params, range)?
            } else {
                entry.values(&params, range)?
            };
            let values: Vec<String> = values.iter().map(ToString::to_string).collect();
            if format.json || format.csv {
                print_values(out, &name, start, &values, format);
            } else {
                let _ = writeln!(out, "{}", values.join(" "));
            }
            Ok(())
        }
        Command::Transform(TransformCommand::Euler { theta, spec, inverse, format }) => {
            let theta = parse_polynomial(&theta)?;
            let doc = read_spec(&spec)?;
            let series = doc.expand();
            let mapped = if inverse { euler_inverse(&series, &theta) } else { euler_transform(&series, &theta) };
            let coeffs = match &doc.eval {
                Some(point) => mapped.eval(point)?.into_iter().map(Polynomial::constant).collect(),
                None => mapped.into_coeffs(),
            };
            let values: Vec<String> = coeffs.iter().map(Polynomial::to_string).collect();
            print_values(out, "T", 0, &values, format);
            Ok(())
        }
        Command::Transform(TransformCommand::Lambert { x, tol }) => {
            if tol.signum() <= 0 {
                return Err(Failure::Input("--tol must be positive".into()));
            }
            let sum = lambert_partial(x.to_f64(), tol.to_f64())?;
            let _ = writeln!(out, "L({x}) = {:.15}", sum.value);
            let _ = writeln!(out, "terms = {}", sum.terms_used);
            let _ = writeln!(out, "last term = {:e}", sum.last_term_magnitude);
            Ok(())
        }
    }
}

fn read_spec(path: &Path) -> Result<SpecDocument, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    SpecDocument::parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn parse_range(text: &str) -> Result<std::ops::RangeInclusive<usize>, Failure> {
    let bad = || Failure::Input(format!("--n-range expects A..B with A <= B, got '{text}'"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok(a..=b)
}

fn print_values(out: &mut String, label: &str, start: usize, values: &[String], format: Format) {
    if format.json {
        let rows: Vec<serde_json::Value> = values
            .iter()
            .enumerate()
            .map(|(i, v)| serde_json::json!({ "n": start + i, "value": v }))
            .collect();
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&rows).expect("plain json"));
    } else if format.csv {
        let _ = writeln!(out, "n,value");
        for (i, v) in values.iter().enumerate() {
            let _ = writeln!(out, "{},{v}", start + i);
        }
    } else {
        for (i, v) in values.iter().enumerate() {
            let _ = writeln!(out, "{label}_{} = {v}", start + i);
        }
    }
}

fn print_entry(out: &mut String, e: &CatalogEntry) {
    let kind = match e.kind {
        EntryKind::Numbers => "numbers",
        EntryKind::Polynomials => "polynomials",
    };
    let mark = if e.erratum.is_some() { "  [erratum, see --corrected]" } else { "" };
    let _ = writeln!(out, "{} ({kind}){mark}", e.name);
    let _ = writeln!(out, "    {}", e.provenance);
    for p in e.params {
        let _ = writeln!(out, "    {p}");
    }
}

fn binet(out: &mut String, p1: Rational, p2: Rational, q: Option<(Rational, Rational)>, n: u64) -> Outcome {
    let roots = QuadraticRootData::new(p1.clone(), p2.clone())?;
    let (label, value) = match &q {
        None => ("Y", binet_y2(&p1, &p2, n)?),
        Some((q0, q1)) => ("S", binet_s2(&p1, &p2, q0, q1, n)?),
    };
    let numer = match &q {
        None => vec![],
        Some((q0, q1)) => vec![q0.clone().into(), q1.clone().into()],
    };
    let spec = FamilySpec::new(vec![p1.into(), p2.into()], numer.clone(), n as usize)?;
    let series = if numer.is_empty() { ogf_core::expand_y(&spec) } else { ogf_core::expand_s(&spec) };
    let oracle = &series.coeffs()[n as usize];

    let _ = writeln!(out, "D = {}", roots.discriminant);
    let _ = writeln!(out, "a1 = {}", roots.a1);
    let _ = writeln!(out, "a2 = {}", roots.a2);
    let _ = writeln!(out, "{label}_{n} = {value}");
    let _ = writeln!(out, "rational part = {}", value.rational_part());
    let _ = writeln!(out, "surd part = {}", value.surd_part());
    let _ = writeln!(out, "series value = {oracle}");
    Ok(())
}

fn verify(out: &mut String, suite: &str, n_max: usize, seed: Option<u64>, samples: Option<usize>, quiet: bool) -> Outcome {
    let suites: Vec<Suite> = if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse()?] };
    let mut opts = VerifyOptions { n_max, ..VerifyOptions::default() };
    if let Some(seed) = seed {
        opts.seed = seed;
    }
    if let Some(samples) = samples {
        opts.samples = samples;
    }
    let checks = run_suites(&suites, &opts);
    let count = |s: Status| checks.iter().filter(|c| c.status == s).count();
    for c in checks.iter().filter(|c| !quiet || c.status != Status::Pass) {
        let _ = writeln!(out, "{c}");
    }
    let _ = writeln!(out, 
        "{} checks: {} passed, {} flagged, {} failed",
        checks.len(),
        count(Status::Pass),
        count(Status::Flagged),
        count(Status::Fail)
    );
    if count(Status::Fail) > 0 {
        Err(Failure::Checks)
    } else {
        Ok(())
    }
}
