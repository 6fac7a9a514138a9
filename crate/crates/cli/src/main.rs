use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use relcalc_cli::{parse_problem, run, CliError, RunOptions};
use relcalc_core::DEFAULT_MAX_BITS;

/// Exact two-terminal reliability of a binary-state network.
#[derive(Debug, Parser)]
#[command(name = "relcalc", version)]
struct Args {
    /// Problem file.
    file: PathBuf,
    /// Print one row per enumerated state vector.
    #[arg(long)]
    trace: bool,
    /// Also estimate the reliability with this many Monte Carlo samples.
    #[arg(long, value_name = "SAMPLES")]
    mc: Option<u64>,
    /// Seed for the Monte Carlo estimate.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads for enumeration and sampling.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    workers: u64,
    /// Refuse networks with more mutable components than this.
    #[arg(long, default_value_t = DEFAULT_MAX_BITS)]
    max_bits: usize,
}

fn execute(args: &Args) -> Result<String, CliError> {
    let text = std::fs::read_to_string(&args.file).map_err(|source| CliError::Io {
        path: args.file.display().to_string(),
        source,
    })?;
    let problem = parse_problem(&text)?;
    let options = RunOptions {
        trace: args.trace,
        mc_samples: args.mc,
        seed: args.seed,
        workers: args.workers as usize,
        max_bits: args.max_bits,
    };
    run(&problem, &options)
}

fn main() -> ExitCode {
    let args = Args::parse();
    match execute(&args) {
        Ok(report) => {
            print!("{report}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("relcalc: {err}");
            ExitCode::FAILURE
        }
    }
}
