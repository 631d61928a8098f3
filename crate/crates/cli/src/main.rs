//! `sixvertex`: exact verification reports as JSON on stdout, a short
//! summary on stderr. Exit codes: 0 all checks pass, 1 a verification
//! failed, 2 invalid or degenerate input.
#![forbid(unsafe_code)]

mod commands;
mod report;

use std::process::ExitCode;

use clap::{ArgAction, Parser, Subcommand};
use serde_json::json;

use commands::{InputError, Method, Outcome};

const EXIT_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(name = "sixvertex", version, about = "Exact checks for the symmetric six-vertex model")]
struct Cli {
    /// Emit the JSON report on stdout.
    #[arg(long, global = true, action = ArgAction::Set, num_args = 0..=1,
          default_value_t = true, default_missing_value = "true")]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lax, double-prime and R weights at a spectral point.
    Weights {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Verification suites.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// Partition function on the n x n torus.
    Partition {
        #[arg(long, allow_hyphen_values = true)]
        weights: String,
        #[arg(long)]
        size: usize,
        #[arg(long, value_enum, default_value_t = Method::Transfer)]
        method: Method,
    },
    /// The ten nodes of the Segre cubic.
    Nodes,
}

#[derive(Subcommand)]
enum Suite {
    /// Yang-Baxter residuals at one point or at seeded random points.
    Ybe {
        #[arg(long, allow_hyphen_values = true, conflicts_with = "random", required_unless_present = "random")]
        mu: Option<String>,
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Commutator of the two transfer matrices at a spectral point.
    Commute {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long)]
        sites: usize,
    },
    /// Embedding, chart, birational and node checks on seeded samples.
    Geometry {
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Weights { .. } => "weights",
        Command::Verify { suite: Suite::Ybe { .. } } => "verify ybe",
        Command::Verify { suite: Suite::Commute { .. } } => "verify commute",
        Command::Verify { suite: Suite::Geometry { .. } } => "verify geometry",
        Command::Partition { .. } => "partition",
        Command::Nodes => "nodes",
    }
}

fn run(command: &Command) -> Outcome {
    match command {
        Command::Weights { mu } => commands::weights(&commands::parse_mu(mu)?),
        Command::Verify { suite } => match suite {
            Suite::Ybe { mu: Some(mu), .. } => commands::ybe_at_point(&commands::parse_mu(mu)?),
            Suite::Ybe { random, seed, .. } => {
                commands::ybe_random(random.expect("required by clap"), *seed)
            }
            Suite::Commute { mu, sites } => commands::verify_commute(&commands::parse_mu(mu)?, *sites),
            Suite::Geometry { samples, seed } => Ok(commands::verify_geometry(*samples, *seed)),
        },
        Command::Partition { weights, size, method } => {
            commands::partition(&commands::parse_weights(weights)?, *size, *method)
        }
        Command::Nodes => Ok(commands::nodes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    match run(&cli.command) {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            }
            eprintln!("{}", report.summary());
            ExitCode::from(if report.passed { 0 } else { EXIT_FAILED })
        }
        Err(InputError(msg)) => {
            if cli.json {
                let body = json!({ "command": name, "error": msg });
                println!("{}", serde_json::to_string_pretty(&body).expect("serializable"));
            }
            eprintln!("sixvertex {name}: invalid input: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
