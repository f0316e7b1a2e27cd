//! Command-line front end: single-radius queries, parameter sweeps,
//! verification runs, and analytic reference radii, with machine-readable
//! output.
//!
//! Exit codes: 0 success, 2 usage or domain error, 3 solver error, 4 partial
//! sweep failure, 5 verification failure. Data goes to stdout (and to
//! `--out` byte-identically); diagnostics go to stderr.

// Negated comparisons like `!(start <= stop)` are deliberate NaN guards.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use bohr_rogosinski::analytic::AnalyticRadiusQuery;
use bohr_rogosinski_cli::{config, output};
use bohr_rogosinski::classes::{distance_lower_bound, ClassKind, ClassSpec};
use bohr_rogosinski::functional::{Convention, FunctionalParams};
use bohr_rogosinski::radius::{audit_monotone, solve_radius};
use bohr_rogosinski::verify::{check_root_and_sharpness, default_class_params, fuzz_admissible};
use bohr_rogosinski::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};
use output::{Cell, Format, Record, Table};
use std::collections::BTreeMap;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "bohrad",
    version,
    about = "Sharp refined Bohr-Rogosinski radii for classes of harmonic mappings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a single sharp radius for one class and parameter set.
    Radius(RadiusArgs),
    /// Solve radii over a parameter lattice and print one row per point.
    Sweep(SweepArgs),
    /// Run root-identity, sharpness, and fuzz verification over a lattice.
    Verify(VerifyArgs),
    /// Reference radii for the analytic (Schwarz) class.
    Analytic(AnalyticArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConventionArg {
    /// n = 1 terms use the exact normalized coefficient value.
    ExactA1,
    /// n = 1 terms use the literal class bound formulas (audit mode).
    PaperLiteral,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::ExactA1 => Convention::ExactA1,
            ConventionArg::PaperLiteral => Convention::PaperLiteral,
        }
    }
}

#[derive(Args)]
struct RadiusArgs {
    /// Harmonic class: ph0-alpha, ph0-m, or wh0-alpha.
    #[arg(long)]
    class: String,
    /// Class parameter for ph0-alpha / wh0-alpha.
    #[arg(long)]
    alpha: Option<f64>,
    /// Class parameter for ph0-m.
    #[arg(long = "M")]
    m_param: Option<f64>,
    /// Modulus exponent m >= 1.
    #[arg(long, default_value_t = 1)]
    m: u32,
    /// Start index N >= 1 of the linear coefficient sum.
    #[arg(long = "N", default_value_t = 1)]
    n: u32,
    /// Weight of the mu refinement term.
    #[arg(long, default_value_t = 0.0)]
    mu: f64,
    /// Weight of the lambda refinement term.
    #[arg(long, default_value_t = 0.0)]
    lambda: f64,
    /// Bisection tolerance, in (0, 1e-3].
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = ConventionArg::ExactA1)]
    convention: ConventionArg,
    /// Sample the majorant for strict monotonicity before solving.
    #[arg(long)]
    audit: bool,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Also write the output (same bytes as stdout) to this path.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// Flat key=value config file; flags override file values.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    class: Option<String>,
    /// First value of the class-parameter grid.
    #[arg(long = "param-start")]
    param_start: Option<f64>,
    /// Last value of the class-parameter grid (defaults to param-start).
    #[arg(long = "param-stop")]
    param_stop: Option<f64>,
    /// Number of grid points, >= 1.
    #[arg(long = "param-steps")]
    param_steps: Option<u32>,
    /// Comma-separated list of m values.
    #[arg(long)]
    m: Option<String>,
    /// Comma-separated list of N values.
    #[arg(long = "N")]
    n: Option<String>,
    /// Comma-separated list of mu values.
    #[arg(long)]
    mu: Option<String>,
    /// Comma-separated list of lambda values.
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_enum)]
    convention: Option<ConventionArg>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Restrict to one class (default: all three).
    #[arg(long)]
    class: Option<String>,
    /// Comma-separated class parameter values (default: three per class).
    #[arg(long)]
    param: Option<String>,
    #[arg(long, default_value = "1,2")]
    m: String,
    #[arg(long = "N", default_value = "1,2,3,4,5,6,7,8")]
    n: String,
    #[arg(long, default_value = "0,1")]
    mu: String,
    #[arg(long, default_value = "0,1")]
    lambda: String,
    /// Sharpness step above the root.
    #[arg(long, default_value_t = 1e-3)]
    delta: f64,
    /// Fuzz trials per lattice point (0 skips fuzzing).
    #[arg(long, default_value_t = 100)]
    trials: u32,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Fuzz evaluation radius as a fraction of the solved radius.
    #[arg(long = "r-fraction", default_value_t = 0.99)]
    r_fraction: f64,
    /// Root-identity acceptance tolerance.
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = ConventionArg::ExactA1)]
    convention: ConventionArg,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    /// Root of 2(1+r)r^N - (1-r)^2 = 0.
    Rn,
    /// Root of (1+r)r^N - (1-r)^2 = 0.
    RnPrime,
    /// Closed form 2/(3 + a0 + sqrt(5)(1 + a0)).
    Ra0,
    /// Root of (1-a0^3)r^3 - (1+2a0)r^2 - 2r + 1 = 0.
    Ra0Prime,
}

#[derive(Args)]
struct AnalyticArgs {
    #[arg(long, value_enum)]
    variant: Variant,
    /// Series start index for the rn / rn-prime variants.
    #[arg(long = "N")]
    n: Option<u32>,
    /// Base coefficient magnitude for the ra0 / ra0-prime variants.
    #[arg(long)]
    a0: Option<f64>,
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A failed command: exit code plus a message for stderr.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Domain(_)
            | Error::InvalidClass(_)
            | Error::Convention(_)
            | Error::InvalidArgument(_) => 2,
            _ => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Radius(args) => run_radius(args),
        Command::Sweep(args) => run_sweep(args),
        Command::Verify(args) => run_verify(args),
        Command::Analytic(args) => run_analytic(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), Failure> {
    print!("{text}");
    let _ = std::io::stdout().flush();
    if let Some(path) = out {
        std::fs::write(path, text)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn parse_class(name: &str) -> Result<ClassKind, Failure> {
    match name {
        "ph0-alpha" => Ok(ClassKind::PH0Alpha),
        "ph0-m" => Ok(ClassKind::PH0M),
        "wh0-alpha" => Ok(ClassKind::WH0Alpha),
        other => Err(Failure::usage(format!(
            "unknown class {other:?} (expected ph0-alpha, ph0-m, or wh0-alpha)"
        ))),
    }
}

fn resolve_spec(class: &str, alpha: Option<f64>, m_param: Option<f64>) -> Result<ClassSpec, Failure> {
    let kind = parse_class(class)?;
    let param = match kind {
        ClassKind::PH0Alpha | ClassKind::WH0Alpha => {
            if m_param.is_some() {
                return Err(Failure::usage(format!(
                    "--M conflicts with --class {class}; use --alpha"
                )));
            }
            alpha.ok_or_else(|| Failure::usage(format!("--class {class} requires --alpha")))?
        }
        ClassKind::PH0M => {
            if alpha.is_some() {
                return Err(Failure::usage(
                    "--alpha conflicts with --class ph0-m; use --M",
                ));
            }
            m_param.ok_or_else(|| Failure::usage("--class ph0-m requires --M"))?
        }
    };
    Ok(ClassSpec::new(kind, param)?)
}

fn run_radius(args: RadiusArgs) -> Result<(), Failure> {
    let spec = resolve_spec(&args.class, args.alpha, args.m_param)?;
    let params = FunctionalParams::new(args.m, args.n, args.mu, args.lambda)?;
    let conv: Convention = args.convention.into();
    if args.audit && !audit_monotone(&spec, &params, conv, 64)? {
        return Err(Error::NonMonotone(format!(
            "majorant failed the sampled monotonicity audit for {} = {}",
            spec.kind().name(),
            spec.param()
        ))
        .into());
    }
    let res = solve_radius(&spec, &params, conv, args.tol)?;
    let record = Record {
        fields: vec![
            ("class", Cell::Str(spec.kind().name().into())),
            ("param", Cell::Num(spec.param())),
            ("m", Cell::Int(params.m() as u64)),
            ("N", Cell::Int(params.n_start() as u64)),
            ("mu", Cell::Num(params.mu())),
            ("lambda", Cell::Num(params.lambda())),
            ("t", Cell::Int(params.t() as u64)),
            ("convention", Cell::Str(conv.name().into())),
            ("radius", Cell::Num(res.radius)),
            ("bracket_lo", Cell::Num(res.bracket_lo)),
            ("bracket_hi", Cell::Num(res.bracket_hi)),
            ("iterations", Cell::Int(res.iterations as u64)),
            ("residual", Cell::Num(res.residual)),
            ("d", Cell::Num(distance_lower_bound(&spec))),
        ],
    };
    emit(&record.render(args.format), &args.out)
}

fn run_analytic(args: AnalyticArgs) -> Result<(), Failure> {
    let query = match args.variant {
        Variant::Rn | Variant::RnPrime => {
            if args.a0.is_some() {
                return Err(Failure::usage("--a0 conflicts with the rn variants; use --N"));
            }
            let n = args
                .n
                .ok_or_else(|| Failure::usage("this variant requires --N"))?;
            match args.variant {
                Variant::Rn => AnalyticRadiusQuery::RogosinskiN { n },
                _ => AnalyticRadiusQuery::RogosinskiNPrime { n },
            }
        }
        Variant::Ra0 | Variant::Ra0Prime => {
            if args.n.is_some() {
                return Err(Failure::usage("--N conflicts with the ra0 variants; use --a0"));
            }
            let a0 = args
                .a0
                .ok_or_else(|| Failure::usage("this variant requires --a0"))?;
            match args.variant {
                Variant::Ra0 => AnalyticRadiusQuery::RefinedA0 { a0 },
                _ => AnalyticRadiusQuery::RefinedA0Prime { a0 },
            }
        }
    };
    let radius = query.evaluate(args.tol)?;
    let mut fields = vec![(
        "variant",
        Cell::Str(
            match args.variant {
                Variant::Rn => "rn",
                Variant::RnPrime => "rn-prime",
                Variant::Ra0 => "ra0",
                Variant::Ra0Prime => "ra0-prime",
            }
            .into(),
        ),
    )];
    match args.variant {
        Variant::Rn | Variant::RnPrime => fields.push(("N", Cell::Int(args.n.unwrap() as u64))),
        _ => fields.push(("a0", Cell::Num(args.a0.unwrap()))),
    }
    fields.push(("radius", Cell::Num(radius)));
    emit(&Record { fields }.render(args.format), &args.out)
}

/// Effective string option: flag wins over config file.
fn effective(
    flag: &Option<String>,
    file: &BTreeMap<String, String>,
    key: &str,
) -> Option<String> {
    flag.clone().or_else(|| file.get(key).cloned())
}

fn parse_from<T: std::str::FromStr>(s: &str, what: &str) -> Result<T, Failure>
where
    T::Err: std::fmt::Display,
{
    s.parse::<T>()
        .map_err(|e| Failure::usage(format!("invalid {what} value {s:?}: {e}")))
}

fn run_sweep(args: SweepArgs) -> Result<(), Failure> {
    let file = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
            config::parse_config(&text).map_err(Failure::usage)?
        }
        None => BTreeMap::new(),
    };
    let opt_num = |flag: &Option<f64>, key: &str| -> Result<Option<f64>, Failure> {
        match (flag, file.get(key)) {
            (Some(v), _) => Ok(Some(*v)),
            (None, Some(s)) => Ok(Some(parse_from::<f64>(s, key)?)),
            (None, None) => Ok(None),
        }
    };

    let class = effective(&args.class, &file, "class")
        .ok_or_else(|| Failure::usage("sweep requires --class (flag or config)"))?;
    let kind = parse_class(&class)?;
    let start = opt_num(&args.param_start, "param-start")?
        .ok_or_else(|| Failure::usage("sweep requires --param-start (flag or config)"))?;
    let stop = opt_num(&args.param_stop, "param-stop")?.unwrap_or(start);
    let steps = match (args.param_steps, file.get("param-steps")) {
        (Some(v), _) => v,
        (None, Some(s)) => parse_from::<u32>(s, "param-steps")?,
        (None, None) => 1,
    };
    if steps < 1 {
        return Err(Failure::usage("param-steps must be >= 1"));
    }
    if !(start <= stop) {
        return Err(Failure::usage(format!(
            "param grid must satisfy start <= stop, got [{start}, {stop}]"
        )));
    }

    let m_list = config::parse_list_u32(
        &effective(&args.m, &file, "m").unwrap_or_else(|| "1".into()),
        "m",
    )
    .map_err(Failure::usage)?;
    let n_list = config::parse_list_u32(
        &effective(&args.n, &file, "N").unwrap_or_else(|| "1".into()),
        "N",
    )
    .map_err(Failure::usage)?;
    let mu_list = config::parse_list_f64(
        &effective(&args.mu, &file, "mu").unwrap_or_else(|| "0".into()),
        "mu",
    )
    .map_err(Failure::usage)?;
    let lambda_list = config::parse_list_f64(
        &effective(&args.lambda, &file, "lambda").unwrap_or_else(|| "0".into()),
        "lambda",
    )
    .map_err(Failure::usage)?;
    if m_list.is_empty() || n_list.is_empty() || mu_list.is_empty() || lambda_list.is_empty() {
        return Err(Failure::usage("m, N, mu, and lambda lists must be nonempty"));
    }

    let tol = opt_num(&args.tol, "tol")?.unwrap_or(1e-12);
    let conv: Convention = match (&args.convention, file.get("convention")) {
        (Some(c), _) => (*c).into(),
        (None, Some(s)) => match s.as_str() {
            "exact-a1" => Convention::ExactA1,
            "paper-literal" => Convention::PaperLiteral,
            other => {
                return Err(Failure::usage(format!(
                    "invalid convention {other:?} in config"
                )))
            }
        },
        (None, None) => Convention::ExactA1,
    };
    let format = match (&args.format, file.get("format")) {
        (Some(f), _) => *f,
        (None, Some(s)) => match s.as_str() {
            "table" => Format::Table,
            "csv" => Format::Csv,
            "json" => Format::Json,
            other => return Err(Failure::usage(format!("invalid format {other:?} in config"))),
        },
        (None, None) => Format::Csv,
    };

    type SweepKey = (String, f64, u32, u32, f64, f64);

    // validate the whole grid before solving anything
    let mut grid = Vec::with_capacity(steps as usize);
    for i in 0..steps {
        let param = if steps == 1 {
            start
        } else {
            start + (stop - start) * i as f64 / (steps - 1) as f64
        };
        grid.push(ClassSpec::new(kind, param)?);
    }

    let mut keyed: Vec<(SweepKey, Result<Vec<Cell>, String>)> = Vec::new();
    for spec in &grid {
        for &m in &m_list {
            for &n in &n_list {
                for &mu in &mu_list {
                    for &lambda in &lambda_list {
                        let key = (
                            spec.kind().name().to_string(),
                            spec.param(),
                            m,
                            n,
                            mu,
                            lambda,
                        );
                        let row = solve_row(spec, m, n, mu, lambda, conv, tol);
                        keyed.push((key, row));
                    }
                }
            }
        }
    }
    keyed.sort_by(|(a, _), (b, _)| {
        a.0.cmp(&b.0)
            .then(a.1.total_cmp(&b.1))
            .then(a.2.cmp(&b.2))
            .then(a.3.cmp(&b.3))
            .then(a.4.total_cmp(&b.4))
            .then(a.5.total_cmp(&b.5))
    });

    let mut failures = Vec::new();
    let mut rows = Vec::new();
    for (key, row) in keyed {
        match row {
            Ok(cells) => rows.push(cells),
            Err(message) => failures.push(format!(
                "{}={} m={} N={} mu={} lambda={}: {message}",
                key.0, key.1, key.2, key.3, key.4, key.5
            )),
        }
    }
    let table = Table {
        columns: vec![
            "class", "param", "m", "N", "mu", "lambda", "t", "radius", "d", "residual",
        ],
        rows,
    };
    emit(&table.render(format), &args.out)?;
    if !failures.is_empty() {
        return Err(Failure {
            code: 4,
            message: format!("{} sweep row(s) failed:\n{}", failures.len(), failures.join("\n")),
        });
    }
    Ok(())
}

fn solve_row(
    spec: &ClassSpec,
    m: u32,
    n: u32,
    mu: f64,
    lambda: f64,
    conv: Convention,
    tol: f64,
) -> Result<Vec<Cell>, String> {
    let params = FunctionalParams::new(m, n, mu, lambda).map_err(|e| e.to_string())?;
    let res = solve_radius(spec, &params, conv, tol).map_err(|e| e.to_string())?;
    Ok(vec![
        Cell::Str(spec.kind().name().into()),
        Cell::Num(spec.param()),
        Cell::Int(m as u64),
        Cell::Int(n as u64),
        Cell::Num(mu),
        Cell::Num(lambda),
        Cell::Int(params.t() as u64),
        Cell::Num(res.radius),
        Cell::Num(distance_lower_bound(spec)),
        Cell::Num(res.residual),
    ])
}

fn run_verify(args: VerifyArgs) -> Result<(), Failure> {
    let conv: Convention = args.convention.into();
    let kinds = match &args.class {
        Some(name) => vec![parse_class(name)?],
        None => vec![ClassKind::PH0Alpha, ClassKind::PH0M, ClassKind::WH0Alpha],
    };
    let m_list = config::parse_list_u32(&args.m, "m").map_err(Failure::usage)?;
    let n_list = config::parse_list_u32(&args.n, "N").map_err(Failure::usage)?;
    let mu_list = config::parse_list_f64(&args.mu, "mu").map_err(Failure::usage)?;
    let lambda_list = config::parse_list_f64(&args.lambda, "lambda").map_err(Failure::usage)?;

    // the literal convention is undefined on part of this lattice; reject
    // up front as a usage error rather than failing rows midway
    if conv == Convention::PaperLiteral
        && kinds.contains(&ClassKind::PH0M)
        && n_list.iter().any(|&n| (n - 1) / 2 >= 1)
    {
        return Err(Failure::usage(
            "paper-literal is undefined for ph0-m with N >= 3 (singular mu-sum); \
             restrict --N or use exact-a1",
        ));
    }

    let mut cases = Vec::new();
    for &kind in &kinds {
        let params: Vec<f64> = match &args.param {
            Some(s) => config::parse_list_f64(s, "param").map_err(Failure::usage)?,
            None => default_class_params(kind).to_vec(),
        };
        for param in params {
            let spec = ClassSpec::new(kind, param)?;
            for &m in &m_list {
                for &n in &n_list {
                    for &mu in &mu_list {
                        for &lambda in &lambda_list {
                            cases.push((spec, FunctionalParams::new(m, n, mu, lambda)?));
                        }
                    }
                }
            }
        }
    }

    let mut rows = Vec::new();
    let mut failing = Vec::new();
    for (spec, params) in &cases {
        let report = check_root_and_sharpness(spec, params, conv, args.tol, args.delta)?;
        let (fuzz_margin, fuzz_ok) = if args.trials == 0 {
            (0.0, true)
        } else {
            match fuzz_admissible(spec, params, conv, args.trials, args.seed, args.r_fraction) {
                Ok(reports) => {
                    let min_margin = reports
                        .iter()
                        .map(|r| -r.identity_gap)
                        .fold(f64::INFINITY, f64::min);
                    (min_margin, true)
                }
                Err(Error::Counterexample(msg)) => {
                    failing.push(msg.clone());
                    (f64::NEG_INFINITY, false)
                }
                Err(e) => return Err(e.into()),
            }
        };
        let passed = report.passed && fuzz_ok;
        if !passed {
            failing.push(report.case_id.clone());
        }
        rows.push(vec![
            Cell::Str(report.case_id),
            Cell::Num(report.radius),
            Cell::Num(report.d),
            Cell::Num(report.s_at_root),
            Cell::Num(report.s_above_root),
            Cell::Num(report.delta),
            Cell::Num(report.identity_gap),
            Cell::Num(report.tail_budget),
            Cell::Int(args.trials as u64),
            Cell::Num(fuzz_margin),
            Cell::Bool(passed),
        ]);
    }

    let table = Table {
        columns: vec![
            "case_id",
            "radius",
            "d",
            "s_at_root",
            "s_above_root",
            "delta",
            "identity_gap",
            "tail_budget",
            "fuzz_trials",
            "fuzz_min_margin",
            "passed",
        ],
        rows,
    };
    emit(&table.render(args.format), &args.out)?;
    if !failing.is_empty() {
        failing.sort();
        failing.dedup();
        return Err(Failure {
            code: 5,
            message: format!(
                "{} verification case(s) failed:\n{}",
                failing.len(),
                failing.join("\n")
            ),
        });
    }
    Ok(())
}
