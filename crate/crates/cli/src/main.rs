//! `altsum`: evaluate, verify, prove, tabulate, search and discover
//! identities `x^d - (x+1)^d - (x+2)^d + (x+3)^d = Σ b^e (+ c)`.
//!
//! Exit status: 0 when every check holds, 1 when a verification, proof or
//! cross-check fails, 2 on usage or precondition errors.

mod commands;
mod output;

use std::process::ExitCode;

use altsum_core::{FamilySpec, HalfInt, Parity, RhsForm};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::commands::{parse_range, SearchArgs};
use crate::output::{emit, Mode};

#[derive(Debug, Parser)]
#[command(name = "altsum", version, about)]
struct Cli {
    /// Emit one JSON record per line
    #[arg(long, global = true)]
    json: bool,

    /// Print nothing; report through the exit status only
    #[arg(long, global = true, conflicts_with = "json")]
    quiet: bool,

    /// Worker threads for parallel evaluation (output does not depend on it)
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate S_d(x) by the naive, x-polynomial and u-form routes
    Eval {
        /// Integer or half-integer, e.g. 1561 or 33/2
        #[arg(long, allow_hyphen_values = true)]
        x: HalfInt,
        #[arg(long)]
        degree: u32,
    },
    /// Check a family exactly for k = k_min..=K
    Verify {
        /// Built-in name, `d=.. b=.. terms=.. const=..` text, or JSON
        #[arg(long)]
        family: String,
        #[arg(long)]
        k_max: u32,
    },
    /// Prove a family for all k from its u-form coefficients
    Prove {
        #[arg(long)]
        family: String,
    },
    /// List family instances in equation layout
    Table {
        #[arg(long)]
        family: String,
        /// Inclusive range `A..B`
        #[arg(long, value_parser = parse_range)]
        k_range: std::ops::RangeInclusive<u32>,
        /// Allow k below the family's domain (e.g. k = 0)
        #[arg(long)]
        relaxed: bool,
    },
    /// Bounded search for S_d(x) equal to a structured right side
    Search {
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        base: u32,
        /// two-powers | one-power | power-plus-const:C
        #[arg(long)]
        rhs: RhsForm,
        #[arg(long)]
        n_max: u32,
        #[arg(long)]
        u_max: u64,
        /// odd (integer x) | any (half-integer x allowed)
        #[arg(long, default_value = "odd")]
        parity: Parity,
        /// Disable residue-class pruning
        #[arg(long)]
        no_prune: bool,
        /// Enumerate u directly instead of inverting
        #[arg(long)]
        brute_force: bool,
    },
    /// Derive every family over ranges of degrees and bases
    Discover {
        #[arg(long, value_parser = parse_range)]
        degrees: std::ops::RangeInclusive<u32>,
        #[arg(long, value_parser = parse_range)]
        bases: std::ops::RangeInclusive<u32>,
        #[arg(long)]
        allow_const: bool,
    },
}

fn range_text(r: &std::ops::RangeInclusive<u32>) -> String {
    format!("{}..{}", r.start(), r.end())
}

fn run(command: &Command) -> Result<(&'static str, Value, output::Outcome), String> {
    let family = |text: &str| FamilySpec::resolve(text).map_err(|e| e.to_string());
    let (name, inputs, outcome) = match command {
        Command::Eval { x, degree } => (
            "eval",
            json!({ "x": x.to_string(), "degree": degree }),
            commands::eval(x, *degree),
        ),
        Command::Verify { family: f, k_max } => (
            "verify",
            json!({ "family": f, "k_max": k_max }),
            commands::verify(&family(f)?, *k_max),
        ),
        Command::Prove { family: f } => (
            "prove",
            json!({ "family": f }),
            commands::prove(&family(f)?),
        ),
        Command::Table {
            family: f,
            k_range,
            relaxed,
        } => (
            "table",
            json!({ "family": f, "k_range": range_text(k_range), "relaxed": relaxed }),
            commands::table(&family(f)?, k_range.clone(), *relaxed),
        ),
        Command::Search {
            degree,
            base,
            rhs,
            n_max,
            u_max,
            parity,
            no_prune,
            brute_force,
        } => (
            "search",
            json!({
                "degree": degree,
                "base": base,
                "rhs": rhs.to_string(),
                "n_max": n_max,
                "u_max": u_max.to_string(),
                "parity": parity.to_string(),
                "prune": !no_prune,
                "brute_force": brute_force,
            }),
            commands::search(&SearchArgs {
                d: *degree,
                b: *base,
                rhs: rhs.clone(),
                n_max: *n_max,
                u_max: *u_max,
                parity: *parity,
                prune: !no_prune,
                brute_force: *brute_force,
            }),
        ),
        Command::Discover {
            degrees,
            bases,
            allow_const,
        } => (
            "discover",
            json!({
                "degrees": range_text(degrees),
                "bases": range_text(bases),
                "allow_const": allow_const,
            }),
            commands::discover(degrees.clone(), bases.clone(), *allow_const),
        ),
    };
    Ok((name, inputs, outcome.map_err(|e| e.to_string())?))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("altsum: {e}");
            return ExitCode::from(2);
        }
    }
    let mode = match (cli.json, cli.quiet) {
        (true, _) => Mode::Json,
        (_, true) => Mode::Quiet,
        _ => Mode::Human,
    };
    match run(&cli.command) {
        Ok((name, inputs, outcome)) => {
            let ok = outcome.ok;
            emit(mode, name, &inputs, outcome);
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(message) => {
            eprintln!("altsum: {message}");
            ExitCode::from(2)
        }
    }
}
