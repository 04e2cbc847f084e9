use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

use commands::{Outcome, UsageError};

#[derive(Parser)]
#[command(name = "ywall")]
#[command(about = "Young walls of type D_{n+1}^(2), strict partitions and their identities")]
#[command(version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum WallSet {
    Proper,
    Reduced,
    Strict,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Alg {
    Psi,
    Phi,
    PsiInv,
    PhiInv,
}

#[derive(Subcommand)]
enum Command {
    /// List the walls of a set with a given number of blocks
    Enum {
        #[arg(long, value_enum)]
        set: WallSet,
        /// Rank (n >= 2); not needed for strict partitions
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Per-color block counts of a wall
    Weight {
        #[arg(long)]
        n: usize,
        /// Comma-separated weakly decreasing parts, "" for the empty wall
        #[arg(long)]
        partition: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run psi / phi or their inverses
    Map {
        #[arg(long, value_enum)]
        alg: Alg,
        #[arg(long)]
        n: usize,
        /// Input wall for psi/phi, or the reduced/strict part for the inverses
        #[arg(long)]
        partition: String,
        /// Bookkeeping partition for the inverses
        #[arg(long)]
        hat: Option<String>,
        /// Print one line per algorithm step
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Virtual character of a set
    Vch {
        #[arg(long, value_enum)]
        set: WallSet,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Principally specialized character, counted from reduced walls
    Pschar {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Cardinalities of a set for m = 0..=max-m
    Count {
        #[arg(long, value_enum)]
        set: WallSet,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        max_m: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Exhaustively check the identities; exit 1 on any failure
    Verify {
        /// Inclusive rank range, e.g. 2..4, or a single rank
        #[arg(long, default_value = "2..4")]
        n_range: String,
        #[arg(long, default_value_t = 24)]
        max_m: usize,
        /// Series degree for the Euler check
        #[arg(long, default_value_t = 200)]
        degree: usize,
        /// Comma-separated subset of: euler,count,fock,vch,bijections,reduced-equivalence
        #[arg(long)]
        checks: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn dispatch(command: Command) -> Result<(Outcome, Format), UsageError> {
    Ok(match command {
        Command::Enum { set, n, m, format } => (commands::cmd_enum(set, n, m)?, format),
        Command::Weight {
            n,
            partition,
            format,
        } => (commands::cmd_weight(n, &partition)?, format),
        Command::Map {
            alg,
            n,
            partition,
            hat,
            trace,
            format,
        } => (
            commands::cmd_map(alg, n, &partition, hat.as_deref(), trace)?,
            format,
        ),
        Command::Vch { set, n, m, format } => (commands::cmd_vch(set, n, m)?, format),
        Command::Pschar { n, degree, format } => (commands::cmd_pschar(n, degree)?, format),
        Command::Count {
            set,
            n,
            max_m,
            format,
        } => (commands::cmd_count(set, n, max_m)?, format),
        Command::Verify {
            n_range,
            max_m,
            degree,
            checks,
            format,
        } => (
            commands::cmd_verify(&n_range, max_m, degree, checks.as_deref())?,
            format,
        ),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok((outcome, format)) => {
            for line in &outcome.diagnostics {
                eprintln!("{line}");
            }
            let body = match format {
                Format::Text => outcome.text,
                Format::Json => {
                    serde_json::to_string_pretty(&outcome.json).expect("json values serialize")
                        + "\n"
                }
            };
            // a closed pipe (e.g. `| head`) is not an error worth a panic
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            ExitCode::from(outcome.exit_code)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
