//! `polychain` — resistance distance and Kirchhoff index toolkit for
//! polygonal chains.
//!
//! Exit codes: 0 success, 1 operational failure, 2 a verification check
//! failed, 64 usage error.

mod commands;
mod error;
mod format;
mod io;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use error::CliError;

#[derive(Parser)]
#[command(
    name = "polychain",
    version,
    about = "Resistance distance and Kirchhoff index toolkit for polygonal chains",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Kirchhoff and hop-distance indices of one chain
    Compute(commands::compute::Args),
    /// Effective resistances in a chain or an arbitrary network file
    Resistance(commands::resistance::Args),
    /// List or count the encodings of one (k, h) cell
    Enumerate(commands::enumerate::Args),
    /// Exhaustive extremal search over one (k, h) cell
    Extremal(commands::extremal::Args),
    /// Check the extremal families over a (k, h) grid
    Verify(commands::verify::Args),
    /// Collapse a chain onto its last polygon by electrical elimination
    Reduce(commands::reduce::Args),
    /// Flip a chain at an interior polygon and report the index change
    Flip(commands::flip::Args),
}

const USAGE_EXIT: u8 = 64;

/// Restore the default SIGPIPE disposition so `polychain ... | head` dies
/// quietly like other Unix filters instead of panicking on the closed pipe.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => USAGE_EXIT,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Compute(args) => commands::compute::run(args),
        Command::Resistance(args) => commands::resistance::run(args),
        Command::Enumerate(args) => commands::enumerate::run(args),
        Command::Extremal(args) => commands::extremal::run(args),
        Command::Verify(args) => commands::verify::run(args),
        Command::Reduce(args) => commands::reduce::run(args),
        Command::Flip(args) => commands::flip::run(args),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(message)) => {
            eprintln!("usage error: {message}");
            ExitCode::from(USAGE_EXIT)
        }
        Err(CliError::Op(message)) => {
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}
