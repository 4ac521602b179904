//! `warpcheck` command-line front end.

/// `println!` that stays quiet when stdout is closed early (e.g. piped into `head`).
macro_rules! say {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

/// Outcome of a subcommand that ran to completion.
pub enum Outcome {
    Pass,
    Fail,
}

/// Bad input: unreadable or malformed files, out-of-range flags, domain errors.
#[derive(Debug)]
pub struct InputError(pub String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Report(a) => commands::report::run(&cli.global, a),
        Command::VerifyPaper(a) => commands::verify::run(&cli.global, a),
        Command::ChainCheck(a) => commands::chain::run(&cli.global, a),
        Command::Gronwall(a) => commands::gronwall::run(&cli.global, a),
        Command::YamabeMin(a) => commands::yamabe::run(&cli.global, a),
    };
    match result {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(InputError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
