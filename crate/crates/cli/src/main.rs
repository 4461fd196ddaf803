use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use zeon_cli::commands::{self, Output};
use zeon_cli::input::parse_matrix;
use zeon_cli::CliError;

/// Exact ergodicity analysis of finite Markov chains through zeon tensor powers.
///
/// Exit codes: 0 ergodic, 1 not ergodic (or a failed check), 2 criterion
/// inapplicable, 3 error.
#[derive(Parser)]
#[command(name = "zeon", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full ergodicity report for a stochastic matrix.
    Analyze {
        /// JSON or CSV matrix file, `-` for stdin.
        file: PathBuf,
        /// Human-readable table instead of JSON.
        #[arg(long)]
        pretty: bool,
    },
    /// The zeon tensor power Psi_k with subset labels.
    ZeonPower {
        file: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(long)]
        pretty: bool,
    },
    /// Check an identity on random degree-2 vectors against the given matrix.
    Verify {
        file: PathBuf,
        /// basic-relations, eq4, trace-identities, integration-by-parts, eq6, eq7
        #[arg(long)]
        identity: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// A nonnegative fixed vector of Psi_2(A) for a reducible or periodic chain.
    Witness {
        file: PathBuf,
        /// Cyclic distance for periodic chains (default 1).
        #[arg(long)]
        delta: Option<usize>,
    },
    /// Compare the determinant criterion with the classical tests on random chains.
    Harness {
        #[arg(short, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Analyze { file, pretty } => commands::analyze(&parse_matrix(&file)?, pretty),
        Command::ZeonPower { file, k, pretty } => commands::zeon_power_cmd(&parse_matrix(&file)?, k, pretty),
        Command::Verify {
            file,
            identity,
            trials,
            seed,
        } => commands::verify(&parse_matrix(&file)?, &identity, trials, seed),
        Command::Witness { file, delta } => commands::witness(&parse_matrix(&file)?, delta),
        Command::Harness { n, samples, seed } => commands::harness(n, samples, seed),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
