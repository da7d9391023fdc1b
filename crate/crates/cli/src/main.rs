use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    ExitCode::from(finring_cli::run(finring_cli::Cli::parse()))
}
