use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use offsetdeg::cli::{parse_budget, parse_expression, run_text, run_with_budget, Checks, Format, RunOptions, SurfaceInput};

const BUDGET_VAR: &str = "OFFSETDEG_MAX_SECONDS";

#[derive(Parser)]
#[command(name = "offsetdeg", version, about = "Total degree of the generic offset of a rational surface")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute m*delta (and delta, given the tracing index) for a surface file.
    Compute {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Checks::Fast)]
        checks: Checks,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 25)]
        trials: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Include per-stage wall-clock timings in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Same as `compute --checks all`.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 25)]
        trials: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        timing: bool,
    },
    /// Parse a polynomial in t1, t2 and print it in canonical form.
    Parse {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (file, opts) = match cli.command {
        Command::Parse { expr } => {
            return match parse_expression(&expr) {
                Ok(p) => {
                    println!("{p}");
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            };
        }
        Command::Compute { file, checks, seed, trials, format, timing } => {
            (file, RunOptions { checks, seed, trials, format, timing })
        }
        Command::Verify { file, seed, trials, format, timing } => {
            (file, RunOptions { checks: Checks::All, seed, trials, format, timing })
        }
    };

    let budget = match std::env::var(BUDGET_VAR) {
        Ok(v) => match parse_budget(&v) {
            Ok(b) => Some(b),
            Err(e) => {
                eprintln!("error: {BUDGET_VAR}: {e}");
                return ExitCode::from(1);
            }
        },
        Err(_) => None,
    };
    let text = match std::fs::read_to_string(&file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", file.display());
            return ExitCode::from(1);
        }
    };
    let outcome = match SurfaceInput::parse(&text) {
        Ok(input) => run_with_budget(&input, &opts, budget),
        Err(_) => run_text(&text, &opts),
    };
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    // A timed-out worker may still be running; exiting here abandons it.
    std::process::exit(outcome.exit_code)
}
