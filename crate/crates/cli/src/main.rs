//! `rickart`: exact star-order computations on matrix files.
//!
//! Every command prints one JSON document on stdout. Exit status: 0 success
//! or true, 1 relation false or no join, 2 unreadable input, 3 precondition
//! violation, 4 internal invariant breach or failed verification.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rickart::format::read_matrix_file;
use rickart::gen::GenConfig;
use rickart::harness::{run_all, run_suite_with, Execution, Suite, SuiteOps};
use rickart::order::{coherent_join, glb_set, is_coherent, join_bounded, least_upper_bound, meet, star_minus};
use rickart::ring::{right_ann, right_proj};
use rickart::star::{left_star_leq, right_star_leq, star_leq_certificate, star_leq_hermitian};
use rickart::{linalg, Error, Matrix, RingContext};

#[derive(Parser)]
#[command(name = "rickart", version, about = "Exact star-order calculus on matrices over Q(i)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Right projection x'' and right annihilator x'.
    Rp { file: PathBuf },
    /// Moore-Penrose inverse.
    Pinv { file: PathBuf },
    /// Decide a ⩽ b in the chosen order.
    Order {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum, default_value_t = Variant::Star)]
        variant: Variant,
    },
    /// Greatest lower bound of a pair.
    Meet { a: PathBuf, b: PathBuf },
    /// Least upper bound of a pair, if one exists.
    Join {
        a: PathBuf,
        b: PathBuf,
        /// Common upper bound to compute the join from.
        #[arg(long)]
        bound: Option<PathBuf>,
    },
    /// Coherence test; prints the join when coherent.
    Coherent { a: PathBuf, b: PathBuf },
    /// x ∖ y.
    StarMinus { x: PathBuf, y: PathBuf },
    /// Greatest lower bound of one or more matrices.
    Glb {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Run property suites.
    Verify {
        /// Suite name, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Trials per suite; defaults to each suite's own count.
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        dim: usize,
        #[arg(long, default_value_t = 4)]
        entry_bound: u32,
        /// Run trials on one thread.
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Star,
    Left,
    Right,
    Hermitian,
}

impl Variant {
    fn name(self) -> &'static str {
        match self {
            Variant::Star => "star",
            Variant::Left => "left",
            Variant::Right => "right",
            Variant::Hermitian => "hermitian",
        }
    }
}

/// A command's JSON payload and whether its answer was affirmative.
struct Outcome {
    doc: Value,
    code: u8,
}

impl Outcome {
    fn ok(doc: Value) -> Self {
        Outcome { doc, code: 0 }
    }

    fn answer(doc: Value, yes: bool) -> Self {
        Outcome { doc, code: if yes { 0 } else { 1 } }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::Format(_) | Error::UnknownSuite(_) => 2,
        Error::Invariant(_) => 4,
        _ => 3,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match exit_code(e) {
        2 => "parse",
        4 => "invariant",
        _ => "precondition",
    }
}

fn mat(m: &Matrix) -> Value {
    serde_json::to_value(m).expect("matrix serializes")
}

fn load_square(paths: &[&PathBuf]) -> Result<Vec<Matrix>, Error> {
    let ms = paths.iter().map(read_matrix_file).collect::<Result<Vec<_>, _>>()?;
    let ctx = RingContext::of(&ms[0])?;
    ctx.check_all(&ms)?;
    Ok(ms)
}

fn load_pair(a: &PathBuf, b: &PathBuf) -> Result<(Matrix, Matrix), Error> {
    let mut ms = load_square(&[a, b])?;
    let b = ms.pop().expect("two matrices");
    let a = ms.pop().expect("two matrices");
    Ok((a, b))
}

fn run(command: Command) -> Result<Outcome, Error> {
    Ok(match command {
        Command::Rp { file } => {
            let x = load_square(&[&file])?.remove(0);
            Outcome::ok(json!({
                "command": "rp",
                "right_projection": mat(right_proj(&x).matrix()),
                "right_annihilator": mat(right_ann(&x).matrix()),
            }))
        }
        Command::Pinv { file } => {
            let a = read_matrix_file(&file)?;
            Outcome::ok(json!({ "command": "pinv", "pinv": mat(&linalg::pinv(&a)) }))
        }
        Command::Order { a, b, variant } => {
            let (a, b) = load_pair(&a, &b)?;
            let (holds, witness) = match variant {
                Variant::Star => {
                    let w = star_leq_certificate(&a, &b)?;
                    (w.is_some(), serde_json::to_value(w).expect("witness serializes"))
                }
                Variant::Left => (left_star_leq(&a, &b), Value::Null),
                Variant::Right => (right_star_leq(&a, &b), Value::Null),
                Variant::Hermitian => (star_leq_hermitian(&a, &b)?, Value::Null),
            };
            Outcome::answer(
                json!({ "command": "order", "variant": variant.name(), "holds": holds, "witness": witness }),
                holds,
            )
        }
        Command::Meet { a, b } => {
            let (a, b) = load_pair(&a, &b)?;
            let r = meet(&a, &b);
            Outcome::ok(json!({ "command": "meet", "meet": mat(&r.meet), "right_projection": mat(r.m.matrix()) }))
        }
        Command::Join { a, b, bound } => {
            let (a, b) = load_pair(&a, &b)?;
            let join = match bound {
                Some(path) => {
                    let x = read_matrix_file(&path)?;
                    RingContext::of(&a)?.check(&x)?;
                    Some(join_bounded(&a, &b, &x)?)
                }
                None => least_upper_bound(&a, &b).map(|j| j.join),
            };
            let exists = join.is_some();
            Outcome::answer(
                json!({ "command": "join", "exists": exists, "join": join.as_ref().map(mat) }),
                exists,
            )
        }
        Command::Coherent { a, b } => {
            let (a, b) = load_pair(&a, &b)?;
            let coherent = is_coherent(&a, &b);
            let join = if coherent { Some(mat(&coherent_join(&a, &b)?.join)) } else { None };
            Outcome::answer(json!({ "command": "coherent", "coherent": coherent, "join": join }), coherent)
        }
        Command::StarMinus { x, y } => {
            let (x, y) = load_pair(&x, &y)?;
            Outcome::ok(json!({ "command": "star-minus", "result": mat(&star_minus(&x, &y)) }))
        }
        Command::Glb { files } => {
            let refs: Vec<&PathBuf> = files.iter().collect();
            let ms = load_square(&refs)?;
            Outcome::ok(json!({ "command": "glb", "glb": mat(&glb_set(&ms)?) }))
        }
        Command::Verify { suite, trials, seed, dim, entry_bound, sequential } => {
            let exec = if sequential { Execution::Sequential } else { Execution::Auto };
            let base = GenConfig { dim, entry_bound, seed, trials: trials.unwrap_or(1) };
            base.validate()?;
            let reports = if suite == "all" {
                run_all(&base, trials, exec)
            } else {
                let s: Suite = suite.parse()?;
                let cfg = GenConfig { trials: trials.unwrap_or(s.default_trials()), ..base };
                vec![run_suite_with(s, &cfg, SuiteOps::default(), exec)]
            };
            let passed = reports.iter().all(|r| r.passed());
            let doc = json!({ "command": "verify", "passed": passed, "reports": reports });
            Outcome { doc, code: if passed { 0 } else { 4 } }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (mut doc, code) = match run(cli.command) {
        Ok(o) => (o.doc, o.code),
        Err(e) => {
            eprintln!("rickart: {e}");
            (json!({ "error": error_kind(&e), "message": e.to_string() }), exit_code(&e))
        }
    };
    doc["timing"] = json!({ "elapsed_ms": start.elapsed().as_secs_f64() * 1000.0 });
    println!("{doc}");
    ExitCode::from(code)
}
