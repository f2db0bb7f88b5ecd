//! `lnd`: build and certify locally nilpotent derivations from the command
//! line.
//!
//! Exit codes: 0 when every check passes, 1 when a verification fails, 2 for
//! malformed input and 3 when the Gröbner step budget runs out.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use lnd_core::construction::{
    build_counterexample, example_5_5, implicitize, is_smooth_curve, map_degree, winkelmann_check,
    CounterexampleBundle, CurveParam,
};
use lnd_core::derivation::{Derivation, NilpotencyIndex};
use lnd_core::groebner::{GroebnerConfig, DEFAULT_STEP_BUDGET};
use lnd_core::report::VerificationReport;
use lnd_core::{Error, PolyRing};

#[derive(Parser, Debug)]
#[command(name = "lnd", version, about = "Locally nilpotent derivation toolkit")]
struct Cli {
    #[command(flatten)]
    run: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct RunConfig {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Maximum number of S-polynomial reductions per Gröbner computation.
    #[arg(long, global = true, env = "LND_STEP_BUDGET", default_value_t = DEFAULT_STEP_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    /// Maximum number of iterations when probing nilpotency.
    #[arg(long, global = true, default_value_t = 256,
          value_parser = clap::value_parser!(u64).range(1..))]
    cap: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build and certify the ring X1^m Y = F(Z, T) for a parametrized curve.
    Construct {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        /// Curve parameter.
        #[arg(long, default_value = "W")]
        var: String,
        /// Also write the bundle JSON to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The family alpha = W^n, beta = W(W^n + 1) with m = 1.
    Example55 {
        #[arg(long, required = true, num_args = 1..)]
        n: Vec<u32>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Winkelmann's derivation of Q[X, Y, U, V, Z].
    Winkelmann,
    /// Implicit equation of the curve (alpha(W), beta(W)).
    Implicitize {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long, default_value = "W")]
        var: String,
    },
    /// Jacobian smoothness test for the affine plane curve F = 0.
    Smooth {
        #[arg(long)]
        f: String,
        #[arg(long, value_delimiter = ',', default_value = "Z,T")]
        vars: Vec<String>,
    },
    /// Apply, exponentiate or probe a derivation given by VAR=EXPR images.
    Derive(DeriveArgs),
}

#[derive(Args, Debug)]
struct DeriveArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    vars: Vec<String>,
    /// Image of one variable, e.g. `--image X2=X1`. Unlisted variables map to 0.
    #[arg(long = "image", value_name = "VAR=EXPR")]
    images: Vec<String>,
    #[command(flatten)]
    action: DeriveAction,
    /// Name of the flow parameter for `--exp`.
    #[arg(long, default_value = "s")]
    param: String,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct DeriveAction {
    #[arg(long, value_name = "EXPR")]
    apply: Option<String>,
    #[arg(long, value_name = "EXPR")]
    exp: Option<String>,
    #[arg(long, value_name = "EXPR")]
    nilpotency: Option<String>,
}

/// Result of a command: what to print and whether it counts as a pass.
struct Outcome {
    text: String,
    json: serde_json::Value,
    ok: bool,
}

impl Outcome {
    fn report(report: &VerificationReport) -> Self {
        Outcome {
            text: report.to_string(),
            json: serde_json::to_value(report).expect("serializable"),
            ok: report.overall(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = GroebnerConfig::with_budget(cli.run.budget);
    match run(&cli.command, &cli.run, &config) {
        Ok(outcome) => {
            match cli.run.format {
                Format::Text => print!("{}", ensure_newline(outcome.text)),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&outcome.json).expect("serializable")
                ),
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(exit_code(&e))
        }
    }
}

fn ensure_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded { .. } => 3,
        Error::Internal(_) => 1,
        _ => 2,
    }
}

fn run(command: &Command, run: &RunConfig, config: &GroebnerConfig) -> Result<Outcome, Error> {
    match command {
        Command::Construct {
            m,
            alpha,
            beta,
            var,
            out,
        } => {
            let param = CurveParam::parse(var, alpha, beta)?;
            let bundle = build_counterexample(*m, &param, config)?;
            let json = serde_json::to_value(bundle.to_document()).expect("serializable");
            if let Some(path) = out {
                let body = serde_json::to_string_pretty(&json).expect("serializable");
                fs::write(path, body + "\n")
                    .map_err(|e| Error::InvalidInput(format!("{}: {}", path.display(), e)))?;
            }
            Ok(Outcome {
                text: bundle_text(&bundle),
                ok: bundle.flags().kernel_certified,
                json,
            })
        }
        Command::Example55 { n, jobs } => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads((*jobs).max(1))
                .build()
                .map_err(|e| Error::InvalidInput(e.to_string()))?;
            let bundles: Vec<CounterexampleBundle> = pool.install(|| {
                n.par_iter()
                    .map(|&n| example_5_5(n, config))
                    .collect::<Result<_, _>>()
            })?;
            let ok = bundles.iter().all(|b| b.report().overall());
            let text = bundles
                .iter()
                .map(bundle_text)
                .collect::<Vec<_>>()
                .join("\n");
            let docs: Vec<_> = bundles.iter().map(|b| b.to_document()).collect();
            Ok(Outcome {
                text,
                json: serde_json::to_value(docs).expect("serializable"),
                ok,
            })
        }
        Command::Winkelmann => Ok(Outcome::report(&winkelmann_check(config)?)),
        Command::Implicitize { alpha, beta, var } => {
            let param = CurveParam::parse(var, alpha, beta)?;
            let f = implicitize(&param, config)?;
            let degree = map_degree(&param, config)?;
            Ok(Outcome {
                text: format!("F = {}\nmap degree {}\n", f, degree),
                json: json!({ "F": f.render(), "map_degree": degree }),
                ok: true,
            })
        }
        Command::Smooth { f, vars } => {
            let ring = PolyRing::grevlex(vars)?;
            let f = ring.parse(f)?;
            let smooth = is_smooth_curve(&f, config)?;
            let verdict = if smooth { "smooth" } else { "singular" };
            Ok(Outcome {
                text: format!("{}: {}\n", f, verdict),
                json: json!({ "F": f.render(), "smooth": smooth, "verdict": verdict }),
                ok: true,
            })
        }
        Command::Derive(args) => derive(args, run.cap as usize),
    }
}

fn bundle_text(b: &CounterexampleBundle) -> String {
    let flags = b.flags();
    let mut s = format!(
        "m = {}, alpha = {}, beta = {}\nF = {}\n",
        b.m(),
        b.param().alpha(),
        b.param().beta(),
        b.f()
    );
    let ring = b.derivation().ring();
    for (v, p) in ring.vars().iter().zip(b.derivation().images()) {
        s.push_str(&format!("D({}) = {}\n", v, p));
    }
    for (name, g) in ["x1", "z", "t", "y"].iter().zip(b.generators()) {
        s.push_str(&format!("{} = {}\n", name, g));
    }
    s.push_str(&format!(
        "fpf {}, curve_singular {}, kernel_certified {}, map degree {}\n",
        flags.fpf,
        flags.curve_singular,
        flags.kernel_certified,
        b.map_degree()
    ));
    for w in b.warnings() {
        s.push_str(&format!("warning: {}\n", w));
    }
    s.push_str(&b.report().to_string());
    s
}

#[derive(Serialize)]
struct DeriveOutput {
    input: String,
    operation: &'static str,
    result: Option<String>,
    nilpotency_index: Option<usize>,
}

fn derive(args: &DeriveArgs, cap: usize) -> Result<Outcome, Error> {
    let ring = PolyRing::grevlex(&args.vars)?;
    let mut images = Vec::with_capacity(args.images.len());
    for item in &args.images {
        let (var, expr) = item
            .split_once('=')
            .ok_or_else(|| Error::InvalidInput(format!("expected VAR=EXPR, got `{}`", item)))?;
        images.push((var.trim(), expr));
    }
    let d = Derivation::from_exprs(&ring, &images)?;
    let a = &args.action;
    let (input, operation) = match (&a.apply, &a.exp, &a.nilpotency) {
        (Some(p), _, _) => (p, "apply"),
        (_, Some(p), _) => (p, "exp"),
        (_, _, Some(p)) => (p, "nilpotency"),
        _ => unreachable!("clap enforces exactly one action"),
    };
    let p = ring.parse(input)?;
    let mut out = DeriveOutput {
        input: p.render(),
        operation,
        result: None,
        nilpotency_index: None,
    };
    let ok = match operation {
        "apply" => {
            out.result = Some(d.apply(&p)?.render());
            true
        }
        "exp" => {
            let cert = d
                .certify_triangular()
                .or_else(|| d.certify_by_variable_indices(cap))
                .ok_or_else(|| {
                    Error::InvalidInput(format!(
                        "no nilpotency certificate within {} iterations",
                        cap
                    ))
                })?;
            out.result = Some(d.exp_map(&cert, &args.param, &p)?.render());
            true
        }
        _ => match d.nilpotency_index(&p, cap)? {
            NilpotencyIndex::Index(k) => {
                out.nilpotency_index = Some(k);
                true
            }
            NilpotencyIndex::CapExceeded => false,
        },
    };
    let text = match (&out.result, out.nilpotency_index) {
        (Some(r), _) => format!("{}\n", r),
        (None, Some(k)) => format!("nilpotency index {}\n", k),
        (None, None) => format!("D^k({}) != 0 for k <= {}\n", out.input, cap),
    };
    Ok(Outcome {
        text,
        json: serde_json::to_value(&out).expect("serializable"),
        ok,
    })
}
