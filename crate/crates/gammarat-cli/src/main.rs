//! Command-line front end: exact sequence generation, identity verification
//! and convergence analysis, with reproducible CSV or JSON output.
//!
//! Exit codes: 0 — success / all checks passed; 1 — at least one identity
//! check failed; 2 — usage or parameter error.

mod output;
mod verify;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use gammarat::analysis::{self, AsymptoticConstants};
use gammarat::numerics::PrecisionContext;
use gammarat::recurrences::Builtin;
use gammarat::sequences::{self, ApproxParams};

use output::{csv_document, emit, json_document, RunManifest};

#[derive(Parser)]
#[command(
    name = "gammarat",
    version,
    about = "Exact rational approximations to Gamma-value quotients, digamma values and Euler's constant",
    propagate_version = true
)]
struct Cli {
    /// Size of the worker thread pool (default: one per core)
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the exact (n, p_n, q_n) rows of a sequence family
    Gen(GenArgs),
    /// Run an identity-verification suite and emit a JSON report
    Verify(VerifyArgs),
    /// Emit a convergence table with asymptotic normalizations
    Converge(ConvergeArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// q_n(a2,a1,b) / q_n(a1,a2,b) → [Γ(a2+1)/b^a2]/[Γ(a1+1)/b^a1]
    GammaQuotient,
    /// p_n(a,b) / q_n(a,b) → ln(b) − ψ(a+1)
    Psi,
    /// integer approximants of Euler's constant
    Euler,
    /// preset (a1,a2,b) = (−2/3, −1/2, 1)
    Cor1,
    /// preset (a1,a2,b) = (−3/4, −1/2, 1)
    Cor2,
    /// preset (a1,a2,b) = (0, a, 1)
    Cor3,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::GammaQuotient => "gamma-quotient",
            Family::Psi => "psi",
            Family::Euler => "euler",
            Family::Cor1 => "cor1",
            Family::Cor2 => "cor2",
            Family::Cor3 => "cor3",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum)]
    family: Family,
    /// a1 as an exact rational "num/den" (gamma-quotient)
    #[arg(long)]
    a1: Option<String>,
    /// a2 as an exact rational "num/den" (gamma-quotient)
    #[arg(long)]
    a2: Option<String>,
    /// a as an exact rational "num/den" (psi, cor3)
    #[arg(long)]
    a: Option<String>,
    /// b as an exact rational "num/den" (gamma-quotient, psi)
    #[arg(long)]
    b: Option<String>,
    /// Largest index n (inclusive)
    #[arg(long, default_value_t = 10)]
    n_max: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output path (stdout when omitted)
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Recurrences,
    Integrality,
    Lemma1,
    Eq13,
    EulerRemainder,
    Orthogonality,
    Divisibility,
    Theorem2,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Recurrences => "recurrences",
            Suite::Integrality => "integrality",
            Suite::Lemma1 => "lemma1",
            Suite::Eq13 => "eq13",
            Suite::EulerRemainder => "euler-remainder",
            Suite::Orthogonality => "orthogonality",
            Suite::Divisibility => "divisibility",
            Suite::Theorem2 => "theorem2",
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    /// Built-in recurrence name (suite: recurrences)
    #[arg(long)]
    which: Option<String>,
    #[arg(long)]
    a: Option<String>,
    #[arg(long)]
    a1: Option<String>,
    #[arg(long)]
    a2: Option<String>,
    #[arg(long)]
    b: Option<String>,
    /// Largest index n (inclusive); suite-specific default
    #[arg(long)]
    n_max: Option<u64>,
    /// Polynomial degree index n (suite: orthogonality)
    #[arg(long)]
    n: Option<u64>,
    /// Working decimal digits for numerical suites
    #[arg(long, default_value_t = 30)]
    precision: u32,
    /// Override residual tolerance as a power of ten, e.g. -25
    #[arg(long)]
    tolerance_exp: Option<i64>,
    /// Output path (stdout when omitted)
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ConvergeArgs {
    #[arg(value_enum)]
    family: Family,
    #[arg(long)]
    a1: Option<String>,
    #[arg(long)]
    a2: Option<String>,
    #[arg(long)]
    a: Option<String>,
    #[arg(long)]
    b: Option<String>,
    /// Comma-separated list of indices, e.g. "64,128,256"
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<u64>,
    /// Baseline working decimal digits (auto-raised per row as needed)
    #[arg(long, default_value_t = 40)]
    precision: u32,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output path (stdout when omitted)
    #[arg(long)]
    output: Option<PathBuf>,
}

/// Usage/parameter failure (exit 2) with a diagnostic naming the violated
/// hypothesis.
struct UsageError(String);

impl From<String> for UsageError {
    fn from(s: String) -> Self {
        UsageError(s)
    }
}

fn parse_rational(label: &str, value: Option<&String>) -> Result<BigRational, UsageError> {
    let raw = value.ok_or_else(|| UsageError(format!("missing required parameter --{label}")))?;
    raw.parse::<BigRational>()
        .map_err(|e| UsageError(format!("cannot parse --{label} {raw:?} as an exact rational: {e}")))
}

fn parse_optional_rational(
    label: &str,
    value: Option<&String>,
) -> Result<Option<BigRational>, UsageError> {
    value
        .map(|raw| {
            raw.parse::<BigRational>().map_err(|e| {
                UsageError(format!("cannot parse --{label} {raw:?} as an exact rational: {e}"))
            })
        })
        .transpose()
}

/// Family parameters resolved to the underlying `(a1, a2, b)` triple plus the
/// closed-form `(p, q)` generator.
struct ResolvedFamily {
    a1: BigRational,
    a2: BigRational,
    b: BigRational,
    params: BTreeMap<String, String>,
}

fn resolve_family(family: Family, args_a1: Option<&String>, args_a2: Option<&String>, args_a: Option<&String>, args_b: Option<&String>) -> Result<ResolvedFamily, UsageError> {
    use gammarat::exact::{int, rat};
    let mut params = BTreeMap::new();
    params.insert("family".to_string(), family.name().to_string());
    let (a1, a2, b) = match family {
        Family::GammaQuotient => {
            let a1 = parse_rational("a1", args_a1)?;
            let a2 = parse_rational("a2", args_a2)?;
            let b = parse_rational("b", args_b)?;
            (a1, a2, b)
        }
        Family::Psi => {
            let a = parse_rational("a", args_a)?;
            let b = parse_rational("b", args_b)?;
            (a.clone(), a, b)
        }
        Family::Euler => (int(0), int(0), int(1)),
        Family::Cor1 => (rat(-2, 3), rat(-1, 2), int(1)),
        Family::Cor2 => (rat(-3, 4), rat(-1, 2), int(1)),
        Family::Cor3 => {
            let a = parse_rational("a", args_a)?;
            if a.is_integer() {
                return Err(UsageError(format!(
                    "a = {a} is an integer; the preset requires a non-integer rational"
                )));
            }
            (int(0), a, int(1))
        }
    };
    let checked = ApproxParams::new(a1.clone(), a2.clone(), b.clone())
        .map_err(|e| UsageError(e.to_string()))?;
    if family == Family::GammaQuotient && checked.integer_difference {
        return Err(UsageError(
            "a1 - a2 is an integer; the gamma-quotient asymptotic regime does not apply"
                .to_string(),
        ));
    }
    params.insert("a1".to_string(), a1.to_string());
    params.insert("a2".to_string(), a2.to_string());
    params.insert("b".to_string(), b.to_string());
    Ok(ResolvedFamily { a1, a2, b, params })
}

fn family_pair(family: Family, resolved: &ResolvedFamily, n: u64) -> (BigRational, BigRational) {
    match family {
        Family::Euler => (
            BigRational::from_integer(sequences::euler_p(n)),
            BigRational::from_integer(gammarat::BigInt::from(sequences::euler_q(n))),
        ),
        Family::Psi => (
            sequences::p_psi(&resolved.a1, &resolved.b, n),
            sequences::q_psi(&resolved.a1, &resolved.b, n),
        ),
        _ => (
            sequences::q_gamma(&resolved.a2, &resolved.a1, &resolved.b, n),
            sequences::q_gamma(&resolved.a1, &resolved.a2, &resolved.b, n),
        ),
    }
}

fn cmd_gen(args: &GenArgs) -> Result<(), UsageError> {
    let resolved = resolve_family(
        args.family,
        args.a1.as_ref(),
        args.a2.as_ref(),
        args.a.as_ref(),
        args.b.as_ref(),
    )?;
    let mut params = resolved.params.clone();
    params.insert("n_max".to_string(), args.n_max.to_string());
    let manifest = RunManifest::new("gen", params, None);

    let rows: Vec<(u64, String, String)> = (0..=args.n_max)
        .map(|n| {
            let (p, q) = family_pair(args.family, &resolved, n);
            (n, p.to_string(), q.to_string())
        })
        .collect();

    let content = match args.format {
        Format::Csv => {
            let table: Vec<Vec<String>> = rows
                .iter()
                .map(|(n, p, q)| vec![n.to_string(), p.clone(), q.clone()])
                .collect();
            csv_document(manifest, &[], &["n", "p", "q"], &table)
        }
        Format::Json => {
            let mut payload = serde_json::Map::new();
            payload.insert(
                "rows".to_string(),
                serde_json::to_value(
                    rows.iter()
                        .map(|(n, p, q)| {
                            serde_json::json!({ "n": n, "p": p, "q": q })
                        })
                        .collect::<Vec<_>>(),
                )
                .expect("serializable"),
            );
            let doc = json_document(manifest, payload);
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"))
        }
    };
    emit(args.output.as_deref(), &content).map_err(|e| UsageError(e.to_string()))?;
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> Result<bool, UsageError> {
    let mut params: BTreeMap<String, String> = BTreeMap::new();
    params.insert("suite".to_string(), args.suite.name().to_string());

    let checks = match args.suite {
        Suite::Recurrences => {
            let which_raw = args
                .which
                .as_ref()
                .ok_or_else(|| UsageError("suite recurrences requires --which".into()))?;
            let which: Builtin = which_raw.parse().map_err(|e| UsageError(format!("{e}")))?;
            let a = parse_optional_rational("a", args.a.as_ref())?;
            params.insert("which".to_string(), which_raw.clone());
            if let Some(a) = &a {
                params.insert("a".to_string(), a.to_string());
            }
            let n_max = args.n_max.unwrap_or(30) as i64;
            params.insert("n_max".to_string(), n_max.to_string());
            verify::suite_recurrences(which, a.as_ref(), n_max).map_err(UsageError)?
        }
        Suite::Integrality => {
            let a1 = parse_rational("a1", args.a1.as_ref())?;
            let a2 = parse_rational("a2", args.a2.as_ref())?;
            let n_max = args.n_max.unwrap_or(15);
            params.insert("a1".to_string(), a1.to_string());
            params.insert("a2".to_string(), a2.to_string());
            params.insert("n_max".to_string(), n_max.to_string());
            verify::suite_integrality(&a1, &a2, n_max)
        }
        Suite::Lemma1 | Suite::Eq13 => {
            let a1 = parse_rational("a1", args.a1.as_ref())?;
            let a2 = parse_rational("a2", args.a2.as_ref())?;
            let b = parse_rational("b", args.b.as_ref())?;
            ApproxParams::new(a1.clone(), a2.clone(), b.clone())
                .map_err(|e| UsageError(e.to_string()))?;
            let n_max = args.n_max.unwrap_or(4);
            params.insert("a1".to_string(), a1.to_string());
            params.insert("a2".to_string(), a2.to_string());
            params.insert("b".to_string(), b.to_string());
            params.insert("n_max".to_string(), n_max.to_string());
            if args.suite == Suite::Lemma1 {
                verify::suite_linear_form(&a1, &a2, &b, n_max).map_err(UsageError)?
            } else {
                verify::suite_q_moment(&a1, &a2, &b, n_max).map_err(UsageError)?
            }
        }
        Suite::EulerRemainder => {
            let n_max = args.n_max.unwrap_or(6);
            params.insert("n_max".to_string(), n_max.to_string());
            verify::suite_euler_remainder(n_max).map_err(UsageError)?
        }
        Suite::Orthogonality => {
            let a1 = parse_rational("a1", args.a1.as_ref())?;
            let a2 = parse_rational("a2", args.a2.as_ref())?;
            let b = parse_rational("b", args.b.as_ref())?;
            ApproxParams::new(a1.clone(), a2.clone(), b.clone())
                .map_err(|e| UsageError(e.to_string()))?;
            let n = args
                .n
                .ok_or_else(|| UsageError("suite orthogonality requires --n".into()))?;
            params.insert("a1".to_string(), a1.to_string());
            params.insert("a2".to_string(), a2.to_string());
            params.insert("b".to_string(), b.to_string());
            params.insert("n".to_string(), n.to_string());
            params.insert("precision".to_string(), args.precision.to_string());
            verify::suite_orthogonality(&a1, &a2, &b, n, args.precision, args.tolerance_exp)
                .map_err(UsageError)?
        }
        Suite::Divisibility => {
            let n_max = args.n_max.unwrap_or(40);
            params.insert("n_max".to_string(), n_max.to_string());
            verify::suite_divisibility(n_max)
        }
        Suite::Theorem2 => {
            let n_max = args.n_max.unwrap_or(12);
            params.insert("n_max".to_string(), n_max.to_string());
            verify::suite_psi_numerator_equivalence(n_max)
        }
    };

    let all_passed = checks.iter().all(|c| c.passed);
    let manifest = RunManifest::new("verify", params, Some(args.precision));
    let mut payload = serde_json::Map::new();
    payload.insert("suite".to_string(), serde_json::json!(args.suite.name()));
    payload.insert(
        "checks".to_string(),
        serde_json::to_value(&checks).expect("serializable"),
    );
    payload.insert("all_passed".to_string(), serde_json::json!(all_passed));
    let doc = json_document(manifest, payload);
    let content = format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"));
    emit(args.output.as_deref(), &content).map_err(|e| UsageError(e.to_string()))?;

    if !all_passed {
        if let Some(first) = checks.iter().find(|c| !c.passed) {
            eprintln!(
                "check failed: {} — {}",
                first.name,
                first.counterexample.as_deref().unwrap_or("no detail")
            );
        }
    }
    Ok(all_passed)
}

fn constants_for(
    resolved: &ResolvedFamily,
    ctx: PrecisionContext,
) -> Result<AsymptoticConstants, UsageError> {
    // for the ψ/Euler families (a1 = a2) c1 degenerates to 0 and the
    // normalized-error limit is 2π instead; the header still reports c2
    analysis::constants(&resolved.a1, &resolved.a2, &resolved.b, ctx)
        .map_err(|e| UsageError(e.to_string()))
}

fn cmd_converge(args: &ConvergeArgs) -> Result<(), UsageError> {
    let resolved = resolve_family(
        args.family,
        args.a1.as_ref(),
        args.a2.as_ref(),
        args.a.as_ref(),
        args.b.as_ref(),
    )?;
    let ctx = PrecisionContext::new(args.precision);
    let mut n_list = args.n.clone();
    n_list.dedup();

    let rows = match args.family {
        Family::Euler => analysis::euler_table(&n_list, ctx),
        Family::Psi => analysis::psi_table(&resolved.a1, &resolved.b, &n_list, ctx),
        _ => analysis::gamma_quotient_table(&resolved.a1, &resolved.a2, &resolved.b, &n_list, ctx),
    }
    .map_err(|e| UsageError(e.to_string()))?;

    let consts = constants_for(&resolved, ctx)?;
    let digits = args.precision;
    let const_strings = [
        ("c1", consts.c1.to_decimal_sci(digits)),
        ("c2", consts.c2.to_decimal_sci(digits)),
        ("c1_over_c2", consts.ratio.to_decimal_sci(digits)),
    ];

    let mut params = resolved.params.clone();
    params.insert(
        "n".to_string(),
        n_list.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(","),
    );
    let manifest = RunManifest::new("converge", params, Some(args.precision));

    let content = match args.format {
        Format::Csv => {
            let comments: Vec<String> = const_strings
                .iter()
                .map(|(k, v)| format!("constant: {k}={v}"))
                .collect();
            let table: Vec<Vec<String>> = rows.iter().map(|r| r.csv_fields()).collect();
            let header = gammarat::analysis::ConvergenceRow::CSV_HEADER;
            csv_document(manifest, &comments, &header, &table)
        }
        Format::Json => {
            let mut payload = serde_json::Map::new();
            let mut const_map = serde_json::Map::new();
            for (k, v) in &const_strings {
                const_map.insert(k.to_string(), serde_json::json!(v));
            }
            payload.insert("constants".to_string(), serde_json::Value::Object(const_map));
            payload.insert(
                "rows".to_string(),
                serde_json::to_value(rows.iter().map(|r| r.to_record()).collect::<Vec<_>>())
                    .expect("serializable"),
            );
            let doc = json_document(manifest, payload);
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"))
        }
    };
    emit(args.output.as_deref(), &content).map_err(|e| UsageError(e.to_string()))?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .is_err()
        {
            eprintln!("warning: thread pool already initialized; --threads ignored");
        }
    }
    let result = match &cli.command {
        Command::Gen(args) => cmd_gen(args).map(|()| true),
        Command::Verify(args) => cmd_verify(args),
        Command::Converge(args) => cmd_converge(args).map(|()| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
