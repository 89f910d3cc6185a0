//! `mlv`: relation-rank tables, relation dumps, identity suites and numeric
//! evaluation of multiple L-values at roots of unity.
//!
//! Exit codes: 0 success, 1 a check disagreed, 2 usage error, 3 resource cap.

mod args;
mod commands;
mod error;
mod fixture;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use error::CliError;

fn run(cli: &Cli) -> Result<bool, CliError> {
    let g = &cli.global;
    let outcome = match &cli.command {
        Command::Tables(a) => commands::tables(g, a)?,
        Command::Relations(a) => commands::relations(g, a)?,
        Command::Verify(a) => commands::verify(g, a)?,
        Command::Eval(a) => commands::eval(g, a)?,
        Command::Newton(a) => commands::newton(g, a)?,
    };
    output::emit(&outcome.bytes, g.out.as_deref())?;
    for note in &outcome.notes {
        eprintln!("{note}");
    }
    Ok(outcome.passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
