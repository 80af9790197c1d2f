//! `emission`: compute photon-emission decay rates over a momentum
//! sweep, cross-check them against the trace oracle, and write decay
//! curves as CSV.
//!
//! Exit codes: 0 success, 1 usage error, 2 physics-invariant failure,
//! 3 I/O failure.

mod config;
mod output;
mod run;

use config::ParseOutcome;
use run::RunError;

fn main() {
    std::process::exit(real_main());
}

fn real_main() -> i32 {
    let cfg = match config::parse_args(std::env::args_os()) {
        Ok(ParseOutcome::Run(cfg)) => cfg,
        Ok(ParseOutcome::Informational(text)) => {
            println!("{text}");
            return 0;
        }
        Err(usage) => {
            eprintln!("{usage}");
            return 1;
        }
    };
    match run::run(&cfg) {
        Ok(()) => 0,
        Err(RunError::Physics(msg)) => {
            eprintln!("physics invariant failed: {msg}");
            2
        }
        Err(RunError::Io(msg)) => {
            eprintln!("i/o error: {msg}");
            3
        }
    }
}
