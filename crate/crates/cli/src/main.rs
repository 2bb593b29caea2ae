//! Command-line driver: parameter intake, pipeline orchestration, report
//! emission, and golden-file regression.
//!
//! Exit codes: 0 success (all requested checks pass / verdict matches
//! `--expect`), 1 a check fails or a golden file disagrees, 2 invalid
//! input (bad parameters, unknown or inapplicable target, unusable
//! golden directory), 3 a computation hit its resource budget.
//!
//! JSON output is byte-identical for identical invocations: the
//! `wall_time_ms` fields are normalized to 0 on the JSON path (timings
//! go to stderr instead), and all other report content is deterministic.

use clap::{Args, Parser, Subcommand, ValueEnum};
use rees_core::curve::{derive_params, patil_basis, CurveParams};
use rees_core::groebner::{GroebnerError, Limits, Strategy};
use rees_core::order::canonical_text;
use rees_core::report;
use rees_core::smooth::{smoothness_verdict_with_basis, JacobianReport, Verdict};
use rees_core::verify::{Target, TheoremOutcome, Verifier, VerifyError};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_INVALID_INPUT: u8 = 2;
const EXIT_RESOURCE_LIMIT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "rees",
    version,
    about = "Exact verification of blowup presentations of monomial space curves",
    arg_required_else_help = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate (m0, d) and echo the derived parameters and the binomial
    /// generators of the curve ideal.
    Params(ParamsArgs),
    /// Recompute and check the structural claims about the blowup
    /// presentation (Gröbner property, contractions, identities).
    Verify(VerifyArgs),
    /// Jacobian-criterion audit of the blowup along the distinguished
    /// one-dimensional prime.
    Smooth(SmoothArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct ParamsArgs {
    /// Smallest exponent of the defining progression (>= 4)
    #[arg(long)]
    m0: u64,
    /// Common difference of the progression (>= 1, coprime to m0)
    #[arg(long)]
    d: u64,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Smallest exponent of the defining progression (>= 4)
    #[arg(long)]
    m0: u64,
    /// Common difference of the progression (>= 1, coprime to m0)
    #[arg(long)]
    d: u64,
    /// Verification target id, or `all` for every target applicable at
    /// this parameter point
    #[arg(long, default_value = "all")]
    target: String,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Step budget for basis computations
    #[arg(long)]
    max_steps: Option<u64>,
    /// Seed for randomized cross-checks (kept for output determinism)
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Directory of golden reduced-basis files: written when absent,
    /// compared when present
    #[arg(long)]
    golden_dir: Option<PathBuf>,
}

#[derive(Args)]
struct SmoothArgs {
    /// Smallest exponent of the defining progression (>= 4)
    #[arg(long)]
    m0: u64,
    /// Common difference of the progression (>= 1, coprime to m0)
    #[arg(long)]
    d: u64,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Step budget for basis computations
    #[arg(long)]
    max_steps: Option<u64>,
    /// Seed for the rational evaluation points of the rank cross-check
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Verdict the audit is expected to reach
    #[arg(long, default_value = "not_regular")]
    expect: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Params(a) => run_params(&a),
        Command::Verify(a) => run_verify(&a),
        Command::Smooth(a) => run_smooth(&a),
    };
    ExitCode::from(code)
}

fn parse_params(m0: u64, d: u64) -> Result<CurveParams, u8> {
    derive_params(m0, d).map_err(|e| {
        eprintln!("error: invalid parameters: {e}");
        EXIT_INVALID_INPUT
    })
}

fn limits_from(max_steps: Option<u64>) -> Limits {
    match max_steps {
        Some(n) => Limits::with_max_steps(n),
        None => Limits::default(),
    }
}

fn code_for_groebner(e: &GroebnerError) -> u8 {
    match e {
        GroebnerError::ResourceLimit { .. } => EXIT_RESOURCE_LIMIT,
        _ => EXIT_INVALID_INPUT,
    }
}

fn run_params(a: &ParamsArgs) -> u8 {
    let params = match parse_params(a.m0, a.d) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let rees = rees_core::rees::build_ambient(&params);
    let generators = patil_basis(&rees.ring_r, &params);
    match a.format {
        Format::Json => {
            let doc = report::curve_json(&params, &generators, &rees.order_r);
            print!("{}", report::to_canonical_string(&doc));
        }
        Format::Text => {
            println!(
                "m0={} d={} a={} b={} m=({}, {}, {}, {})",
                params.m0, params.d, params.a, params.b, params.m[0], params.m[1], params.m[2], params.m[3]
            );
            println!("curve ideal generators ({}):", generators.len());
            for g in &generators {
                println!("  {}", canonical_text(g, &rees.order_r));
            }
        }
    }
    EXIT_OK
}

fn run_verify(a: &VerifyArgs) -> u8 {
    let params = match parse_params(a.m0, a.d) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let limits = limits_from(a.max_steps);
    let mut verifier = Verifier::with_limits(&params, Strategy::Normal, limits);

    let outcomes: Vec<TheoremOutcome> = if a.target.trim().eq_ignore_ascii_case("all") {
        match verifier.run_all() {
            Ok(o) => o,
            Err(VerifyError::Groebner(e)) => {
                eprintln!("error: {e}");
                return code_for_groebner(&e);
            }
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_INVALID_INPUT;
            }
        }
    } else {
        let target = match Target::parse(&a.target) {
            Some(t) => t,
            None => {
                eprintln!(
                    "error: unknown target `{}` (expected one of {}, or `all`)",
                    a.target,
                    Target::ALL
                        .iter()
                        .map(|t| t.id())
                        .collect::<Vec<_>>()
                        .join(", ")
                );
                return EXIT_INVALID_INPUT;
            }
        };
        match verifier.run(target) {
            Ok(o) => vec![o],
            Err(VerifyError::NotApplicable { target, b }) => {
                eprintln!("error: target {target} does not apply at b = {b}");
                return EXIT_INVALID_INPUT;
            }
            Err(VerifyError::Groebner(e)) => {
                eprintln!("error: {e}");
                return code_for_groebner(&e);
            }
        }
    };

    let mut golden_mismatch = false;
    if let Some(dir) = &a.golden_dir {
        match check_golden(dir, &mut verifier) {
            Ok(clean) => golden_mismatch = !clean,
            Err(code) => return code,
        }
    }

    emit_outcomes(&outcomes, a.format);
    let all_pass = outcomes.iter().all(|o| o.pass);
    if all_pass && !golden_mismatch {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn emit_outcomes(outcomes: &[TheoremOutcome], format: Format) {
    match format {
        Format::Json => {
            let docs: Vec<serde_json::Value> = outcomes
                .iter()
                .map(|o| {
                    let mut doc = report::verification_json(o);
                    report::strip_wall_time(&mut doc);
                    doc
                })
                .collect();
            let body = if docs.len() == 1 {
                report::to_canonical_string(&docs[0])
            } else {
                report::to_canonical_string(&serde_json::Value::Array(docs))
            };
            print!("{body}");
            for o in outcomes {
                eprintln!("{}: {} ms", o.target.id(), o.wall_time_ms);
            }
        }
        Format::Text => {
            for o in outcomes {
                let status = if o.pass { "pass" } else { "FAIL" };
                println!(
                    "{} at (m0={}, d={}): {} [{} ms]",
                    o.target.id(),
                    o.params.m0,
                    o.params.d,
                    status,
                    o.wall_time_ms
                );
                if let Some(eq) = &o.ideal_equality {
                    println!(
                        "  ideal equality: forward {} / backward {}",
                        eq.forward, eq.backward
                    );
                }
                if !o.certificates.is_empty() {
                    let confirmed = o
                        .certificates
                        .iter()
                        .filter(|c| c.skipped_coprime || c.remainder_is_zero)
                        .count();
                    println!(
                        "  S-pair certificates: {}/{} confirm",
                        confirmed,
                        o.certificates.len()
                    );
                }
                for d in &o.lm_set_diff {
                    println!("  leading-monomial difference: {d}");
                }
                for d in &o.term_diffs {
                    println!("  term difference: {d}");
                }
                for n in &o.notes {
                    println!("  note: {n}");
                }
            }
        }
    }
}

/// Golden regression: canonical text of the two reduced contraction bases
/// per parameter point. Files are created on first use and compared on
/// every later one. Returns Ok(true) when everything matches.
fn check_golden(dir: &Path, verifier: &mut Verifier) -> Result<bool, u8> {
    if let Err(e) = std::fs::create_dir_all(dir) {
        eprintln!("error: cannot use golden directory {}: {e}", dir.display());
        return Err(EXIT_INVALID_INPUT);
    }
    let params = verifier.rees().params;
    let order = verifier.rees().order_rb.clone();
    let mut clean = true;
    for (label, kind) in [("full", true), ("sub", false)] {
        let reduced = if kind {
            match verifier.e_b() {
                Ok(c) => c.reduced.clone(),
                Err(e) => {
                    eprintln!("error: {e}");
                    return Err(code_for_groebner(&e));
                }
            }
        } else {
            match verifier.q_b() {
                Ok(c) => c.reduced.clone(),
                Err(e) => {
                    eprintln!("error: {e}");
                    return Err(code_for_groebner(&e));
                }
            }
        };
        let mut body = String::new();
        for g in &reduced {
            body.push_str(&canonical_text(g, &order));
            body.push('\n');
        }
        let path = dir.join(format!("m0-{}_d-{}_{label}.txt", params.m0, params.d));
        if path.exists() {
            match std::fs::read_to_string(&path) {
                Ok(existing) if existing == body => {
                    eprintln!("golden: {} matches", path.display());
                }
                Ok(_) => {
                    eprintln!("golden: {} DIFFERS from the recomputed basis", path.display());
                    clean = false;
                }
                Err(e) => {
                    eprintln!("error: cannot read {}: {e}", path.display());
                    return Err(EXIT_INVALID_INPUT);
                }
            }
        } else {
            if let Err(e) = std::fs::write(&path, &body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return Err(EXIT_INVALID_INPUT);
            }
            eprintln!("golden: wrote {}", path.display());
        }
    }
    Ok(clean)
}

fn run_smooth(a: &SmoothArgs) -> u8 {
    let params = match parse_params(a.m0, a.d) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let expected = match Verdict::parse(&a.expect) {
        Some(v) => v,
        None => {
            eprintln!(
                "error: unknown --expect value `{}` (use `regular` or `not_regular`)",
                a.expect
            );
            return EXIT_INVALID_INPUT;
        }
    };
    let limits = limits_from(a.max_steps);
    let mut verifier = Verifier::with_limits(&params, Strategy::Normal, limits);
    let reduced = match verifier.e_b() {
        Ok(c) => c.reduced.clone(),
        Err(e) => {
            eprintln!("error: {e}");
            return code_for_groebner(&e);
        }
    };
    let audit: JacobianReport =
        match smoothness_verdict_with_basis(verifier.rees(), &reduced, a.seed) {
            Ok(r) => r,
            Err(rees_core::smooth::SmoothError::Groebner(e)) => {
                eprintln!("error: {e}");
                return code_for_groebner(&e);
            }
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_INVALID_INPUT;
            }
        };

    match a.format {
        Format::Json => {
            let mut doc = report::jacobian_json(&audit);
            report::strip_wall_time(&mut doc);
            print!("{}", report::to_canonical_string(&doc));
            eprintln!("jacobian: {} ms", audit.wall_time_ms);
        }
        Format::Text => {
            println!(
                "b={} theta={} rank={} codim={} verdict={}",
                audit.b, audit.theta, audit.rank, audit.codim, audit.verdict
            );
            if audit.nonzero_columns.is_empty() {
                println!("  residue matrix is zero: no variable has a nonzero partial");
            } else {
                println!("  nonzero columns: {}", audit.nonzero_columns.join(", "));
            }
            println!(
                "  symbolic rank cross-checked at {} seeded rational points ({} seeds)",
                audit.evaluation_points.len(),
                audit.seeds.len()
            );
        }
    }

    if audit.verdict == expected {
        EXIT_OK
    } else {
        eprintln!(
            "verdict {} does not match --expect {}",
            audit.verdict, expected
        );
        EXIT_CHECK_FAILED
    }
}
