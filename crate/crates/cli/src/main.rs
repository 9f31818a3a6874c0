use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use wqo::oracle::{self, Budget};
use wqo::termlang::{eval, parse_query, parse_type, Answer, TypeExpr};
use wqo_cli::coverability::{coverability, parse_marking, PetriNet};

/// Compute with upward and downward closed sets of well-quasi-orders.
#[derive(Parser)]
#[command(name = "wqo", version)]
struct Cli {
    /// Print JSON lines instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a set expression, membership or inclusion query.
    Eval {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        expr: String,
    },
    /// Cross-check every operation of a type against brute force.
    Check {
        #[arg(long = "type")]
        ty: String,
        /// Number of enumerated elements to check against.
        #[arg(long)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Decide coverability in a Petri net given as JSON.
    Cover {
        #[arg(long)]
        net: PathBuf,
        /// Initial marking, e.g. `1,0`.
        #[arg(long)]
        init: String,
        #[arg(long)]
        target: String,
        /// Exit with status 1 when the target is not coverable.
        #[arg(long)]
        expect_coverable: bool,
    },
    /// List the first elements of a type, smallest first.
    Enum {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        budget: usize,
    },
}

/// How a command ends, mapped onto the exit status.
enum Failure {
    Verdict,
    Input(String),
    Internal(String),
}

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

fn space(ty: &str) -> Result<(TypeExpr, wqo::Presentation), Failure> {
    let t = parse_type(ty).map_err(|e| Failure::Input(format!("type: {e}")))?;
    let p = t.presentation().map_err(input)?;
    Ok((t, p))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Eval { ty, expr } => {
            let (t, p) = space(&ty)?;
            let q = parse_query(&expr, &t).map_err(|e| Failure::Input(format!("expr: {e}")))?;
            let answer = eval(&p, &q).map_err(input)?;
            if cli.json {
                let result = match &answer {
                    Answer::Bool(b) => json!(b),
                    Answer::Set(s) => json!(s.to_string()),
                };
                println!(
                    "{}",
                    json!({ "type": t.to_string(), "expr": expr, "result": result })
                );
            } else {
                println!("{answer}");
            }
        }
        Command::Check { ty, budget, seed } => {
            let (_, p) = space(&ty)?;
            let report = oracle::check_presentation(&p, &Budget::new(budget, budget), seed)
                .map_err(input)?;
            if cli.json {
                print!("{}", report.to_json_lines());
            } else {
                print!("{}", report.to_text());
            }
            if !report.passed() {
                return Err(Failure::Internal(format!(
                    "{} check(s) failed",
                    report.failures().count()
                )));
            }
        }
        Command::Cover {
            net,
            init,
            target,
            expect_coverable,
        } => {
            let text = std::fs::read_to_string(&net)
                .map_err(|e| Failure::Input(format!("{}: {e}", net.display())))?;
            let n = PetriNet::from_json(&text).map_err(input)?;
            let (init, target) = (
                parse_marking(&init).map_err(input)?,
                parse_marking(&target).map_err(input)?,
            );
            let c = coverability(&n, &init, &target).map_err(input)?;
            let space = n.state_space();
            let again = n.step(&space, &c.basis);
            if again != c.basis {
                return Err(Failure::Internal(format!(
                    "basis {} grows to {again} after one more step",
                    c.basis
                )));
            }
            if cli.json {
                let line = json!({
                    "coverable": c.coverable,
                    "basis": c.basis.to_string(),
                    "iterations": c.iterations,
                });
                println!("{line}");
            } else {
                println!("coverable: {}", c.coverable);
                println!("basis: {}", c.basis);
                println!("iterations: {}", c.iterations);
            }
            if expect_coverable && !c.coverable {
                return Err(Failure::Verdict);
            }
        }
        Command::Enum { ty, budget } => {
            let (t, _) = space(&ty)?;
            for x in oracle::enumerate(&t, &Budget::new(budget, budget)).map_err(input)? {
                if cli.json {
                    println!("{}", json!({ "element": x.to_string() }));
                } else {
                    println!("{x}");
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verdict) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}
