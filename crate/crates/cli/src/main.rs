//! `brauer`: enumerate updown tableaux, compute idempotents and run the
//! verification suites. Every command prints JSON.
//!
//! Exit codes: 0 when everything passes, 1 on a failed check or a
//! computation error, 2 on bad arguments.

use std::fmt;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use brauer_fusion::brauer::{check_presentation, BrauerElement};
use brauer_fusion::fusion::{
    fusion_idempotent, fusion_with_exponents, murphy_idempotent, verify_exponent_constants,
    verify_fusion_matches_murphy, verify_idempotent_system, verify_rho_symbolic,
    verify_standard_constants, verify_symmetric_group, verify_ybe_points,
};
use brauer_fusion::report::{CheckResult, Report};
use brauer_fusion::scalars::{parse_rational, BigRational};
use brauer_fusion::tableau::{
    enumerate_updown, exponents, h_constant, Partition, RemovalPrefactor, UpdownTableau,
};
use brauer_fusion::tensor::{
    check_brauer_action, check_embedding, check_projector_transport, check_prop_invco,
    check_prop_invcogl, check_reflection, verify_matrix_identities, yangian_rep_check, Metric,
    MetricKind,
};
use brauer_fusion::Error;

#[derive(Parser)]
#[command(
    name = "brauer",
    version,
    about = "Exact Brauer algebra idempotents and verification suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Also write the JSON output to this file.
    #[arg(long, global = true)]
    output: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List updown tableaux of length n with contents, exponents and h(T).
    Tableaux {
        #[arg(long)]
        n: usize,
        /// Keep only tableaux ending in this shape, e.g. "[2,1]".
        #[arg(long)]
        shape: Option<String>,
    },
    /// Compute the idempotent attached to one tableau.
    Idempotent {
        #[arg(long)]
        n: usize,
        /// An index into the `tableaux` listing or shapes such as "[1];[1,1];[1]".
        #[arg(long)]
        tableau: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Murphy)]
        method: MethodArg,
    },
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Murphy,
    Fusion,
    #[value(name = "fusion_exponents", alias = "fusion-exponents")]
    FusionExponents,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    BrauerRelations,
    Fusion,
    Ybe,
    Symgroup,
    Tensor,
    Reflection,
    Invco,
    InvcoGl,
}

#[derive(clap::Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    /// Number of strands (Brauer and fusion suites) or tableau length (invco suites).
    #[arg(long)]
    n: Option<usize>,
    /// Vector space dimension for the tensor suites.
    #[arg(long = "N")]
    big_n: Option<usize>,
    #[arg(long, default_value = "orthogonal-identity")]
    kind: String,
    /// Representation sites for the tensor suites.
    #[arg(long)]
    sites: Option<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Sampled points per identity.
    #[arg(long, default_value_t = 5)]
    points: usize,
    /// Rational ω for invco-gl.
    #[arg(long, default_value = "9")]
    omega: String,
    /// Restrict invco suites to one tableau.
    #[arg(long)]
    tableau: Option<String>,
}

/// Why a command did not produce a passing result.
enum Failure {
    Usage(String),
    Computation(Error),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => f.write_str(m),
            Failure::Computation(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Computation(e)
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

type Outcome = Result<(Value, bool), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Tableaux { n, shape } => cmd_tableaux(*n, shape.as_deref()),
        Command::Idempotent { n, tableau, method } => cmd_idempotent(*n, tableau, *method),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok((value, passed)) => {
            let text = serde_json::to_string_pretty(&value).expect("JSON values always serialize");
            // a closed pipe (e.g. `| head`) is not an error worth a panic
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            if let Some(path) = &cli.output {
                if let Err(e) = std::fs::write(path, format!("{text}\n")) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(if passed { 0 } else { 1 })
        }
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(match f {
                Failure::Usage(_) => 2,
                Failure::Computation(_) => 1,
            })
        }
    }
}

fn max_n(default: usize) -> Result<usize, Failure> {
    match std::env::var("BRAUER_MAX_N") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| usage(format!("BRAUER_MAX_N must be an integer, got {v:?}"))),
        Err(_) => Ok(default),
    }
}

fn capped(what: &str, value: usize, default_cap: usize) -> Result<usize, Failure> {
    let cap = max_n(default_cap)?;
    if value > cap {
        return Err(usage(format!(
            "{what} = {value} exceeds the cap {cap} (raise BRAUER_MAX_N)"
        )));
    }
    Ok(value)
}

fn need_positive(name: &str, n: usize) -> Result<(), Failure> {
    if n == 0 {
        Err(usage(format!("--{name} must be at least 1")))
    } else {
        Ok(())
    }
}

fn parse_shape(s: &str) -> Result<Partition, Failure> {
    s.parse().map_err(|e: Error| usage(e.to_string()))
}

fn resolve_tableau(
    n: usize,
    sel: &str,
    shape: Option<&Partition>,
) -> Result<UpdownTableau, Failure> {
    let sel = sel.trim();
    if let Ok(i) = sel.parse::<usize>() {
        let all = enumerate_updown(n, shape);
        return all.get(i).cloned().ok_or_else(|| {
            usage(format!(
                "tableau index {i} out of range ({} tableaux)",
                all.len()
            ))
        });
    }
    let t: UpdownTableau = sel.parse().map_err(|e: Error| usage(e.to_string()))?;
    if t.n() != n {
        return Err(usage(format!(
            "tableau {t} has length {}, expected {n}",
            t.n()
        )));
    }
    Ok(t)
}

fn element_json(a: &BrauerElement) -> Value {
    json!({
        "display": a.to_string(),
        "terms": a.terms().iter().map(|(d, c)| json!({"diagram": d.to_string(), "coeff": c.to_string()})).collect::<Vec<_>>(),
        "canonical": a,
    })
}

fn cmd_tableaux(n: usize, shape: Option<&str>) -> Outcome {
    need_positive("n", n)?;
    let shape = shape.map(parse_shape).transpose()?;
    let mut out = Vec::new();
    for (i, t) in enumerate_updown(n, shape.as_ref()).iter().enumerate() {
        out.push(json!({
            "index": i,
            "tableau": t.to_string(),
            "standard": t.is_standard(),
            "contents": t.contents().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "exponents": exponents(t),
            "h": h_constant(t, RemovalPrefactor::ThreeOmega)?.to_string(),
            "h_six_omega": h_constant(t, RemovalPrefactor::SixOmega)?.to_string(),
        }));
    }
    Ok((Value::Array(out), true))
}

fn cmd_idempotent(n: usize, sel: &str, method: MethodArg) -> Outcome {
    need_positive("n", n)?;
    let t = resolve_tableau(n, sel, None)?;
    let murphy = murphy_idempotent(&t)?;
    let (record, agrees) = match method {
        MethodArg::Murphy => (murphy, None),
        MethodArg::Fusion => {
            let r = fusion_idempotent(&t)?;
            let ok = r.element == murphy.element;
            (r, Some(ok))
        }
        MethodArg::FusionExponents => {
            let r = fusion_with_exponents(&t)?;
            let h = r.h.clone().expect("exponent fusion records h");
            let ok = r.element == murphy.element.scale(&h);
            (r, Some(ok))
        }
    };
    let mut v = json!({
        "tableau": t.to_string(),
        "method": record.method,
        "element": element_json(&record.element),
    });
    if let Some(h) = &record.h {
        v["h"] = json!(h.to_string());
    }
    if let Some(ok) = agrees {
        v["agrees_with_murphy"] = json!(ok);
    }
    Ok((v, agrees.unwrap_or(true)))
}

fn metric_of(args: &VerifyArgs) -> Result<Metric, Failure> {
    let big_n = args.big_n.ok_or_else(|| usage("this suite needs --N"))?;
    need_positive("N", big_n)?;
    let kind: MetricKind = args.kind.parse().map_err(|e: Error| usage(e.to_string()))?;
    Metric::new(big_n, kind).map_err(|e| usage(e.to_string()))
}

fn combined(name: &str, seed: Option<u64>, parts: Vec<Report>) -> Report {
    let mut r = Report::new(name, seed);
    for p in parts {
        r.extend(p);
    }
    r
}

fn run_suite(args: &VerifyArgs) -> Result<Report, Failure> {
    let seed = args.seed;
    let points = args.points;
    match args.suite {
        Suite::BrauerRelations => {
            let n = capped("n", args.n.unwrap_or(3), 4)?;
            if n < 2 {
                return Err(usage("brauer-relations needs --n ≥ 2"));
            }
            let mut r = Report::new("brauer-relations", None);
            for c in check_presentation(n)? {
                r.push(CheckResult::flag(
                    c.relation,
                    json!({"n": n, "instances": c.instances}),
                    c.passed,
                ));
            }
            Ok(r)
        }
        Suite::Fusion => {
            let n = args.n.unwrap_or(3);
            need_positive("n", n)?;
            let n = capped("n", n, 4)?;
            let tabs = enumerate_updown(n, None);
            Ok(combined(
                "fusion",
                None,
                vec![
                    verify_fusion_matches_murphy(&tabs)?,
                    verify_idempotent_system(n)?,
                    verify_exponent_constants(n)?,
                ],
            ))
        }
        Suite::Ybe => {
            if args.n.is_some_and(|n| n != 3) {
                return Err(usage("the ybe suite works in B_3; use --n 3 or omit it"));
            }
            Ok(combined(
                "ybe",
                Some(seed),
                vec![
                    verify_ybe_points(seed, points.max(1))?,
                    verify_rho_symbolic(seed)?,
                ],
            ))
        }
        Suite::Symgroup => {
            let n = args.n.unwrap_or(3);
            need_positive("n", n)?;
            let n = capped("n", n, 5)?;
            Ok(combined(
                "symgroup",
                None,
                vec![
                    verify_symmetric_group(n)?,
                    verify_standard_constants(n.min(4))?,
                ],
            ))
        }
        Suite::Tensor => {
            let metric = metric_of(args)?;
            let sites = capped("sites", args.sites.unwrap_or(2), 3)?;
            need_positive("sites", sites)?;
            let z: Vec<BigRational> = (0..sites)
                .map(|i| BigRational::new(i.into(), 2.into()))
                .collect();
            Ok(combined(
                "tensor",
                Some(seed),
                vec![
                    verify_matrix_identities(&metric, seed, points)?,
                    check_brauer_action(&metric, sites)?,
                    check_projector_transport(&metric, sites)?,
                    yangian_rep_check(&metric, &z, seed, points.min(2))?,
                ],
            ))
        }
        Suite::Reflection => {
            let metric = metric_of(args)?;
            let sites = capped("sites", args.sites.unwrap_or(1), 3)?;
            need_positive("sites", sites)?;
            Ok(combined(
                "reflection",
                Some(seed),
                vec![
                    check_reflection(&metric, sites, seed, points)?,
                    check_embedding(&metric, sites, seed)?,
                ],
            ))
        }
        Suite::Invco => {
            let metric = metric_of(args)?;
            let n = capped("n", args.n.or(args.sites).unwrap_or(2), 3)?;
            need_positive("n", n)?;
            let tabs = match &args.tableau {
                Some(sel) => vec![resolve_tableau(n, sel, None)?],
                None => enumerate_updown(n, None),
            };
            let mut parts = Vec::new();
            for t in &tabs {
                parts.push(check_prop_invco(t, &metric, seed, points)?);
            }
            Ok(combined("invco", Some(seed), parts))
        }
        Suite::InvcoGl => {
            let big_n = args.big_n.ok_or_else(|| usage("invco-gl needs --N"))?;
            need_positive("N", big_n)?;
            let n = capped("n", args.n.or(args.sites).unwrap_or(2), 3)?;
            need_positive("n", n)?;
            let omega = parse_rational(&args.omega).map_err(|e| usage(e.to_string()))?;
            let tabs = match &args.tableau {
                Some(sel) => {
                    let t = resolve_tableau(n, sel, None)?;
                    if !t.is_standard() {
                        return Err(usage(format!("{t} is not a standard tableau")));
                    }
                    vec![t]
                }
                None => enumerate_updown(n, None)
                    .into_iter()
                    .filter(UpdownTableau::is_standard)
                    .collect(),
            };
            let mut parts = Vec::new();
            for t in &tabs {
                parts.push(check_prop_invcogl(t, big_n, &omega, seed, points)?);
            }
            Ok(combined("invco-gl", Some(seed), parts))
        }
    }
}

fn cmd_verify(args: &VerifyArgs) -> Outcome {
    let report = run_suite(args)?;
    let passed = report.passed;
    let mut v = serde_json::to_value(&report).expect("reports serialize");
    v["total"] = json!(report.checks.len());
    v["failed"] = json!(report.failures().count());
    Ok((v, passed))
}
