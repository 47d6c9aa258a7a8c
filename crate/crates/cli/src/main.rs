//! `weyl-pinch`: searches for the pinching constant `C(n)` in
//! `|Q| ≤ C(n)|W|³` and checks curvature tables of symmetric spaces.
//!
//! Exit codes: 0 success, 1 a verification or tolerance check failed,
//! 2 usage error.

mod cli;
mod commands;
mod envelope;
mod error;
mod threads;

use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let args = cli::Args::parse();
    let command: Vec<String> = std::env::args().collect();
    let result = threads::configure().and_then(|()| commands::run(&args.command, &command));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
