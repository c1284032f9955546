use std::process::ExitCode;

use polychain::extremal::{canonical_count, enumerate_chains, raw_count, EnumerationMode};

use crate::error::CliError;

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Cell k:h
    #[arg(value_parser = super::parse_cell, value_name = "K:H")]
    cell: (u32, u32),
    /// Enumerate canonical classes instead of raw encodings
    #[arg(long)]
    canonical: bool,
    /// Print only the count (closed form; the list is never materialized)
    #[arg(long)]
    count: bool,
    /// Refuse to materialize more raw encodings than this
    #[arg(long, default_value_t = 10_000_000)]
    cap: u64,
}

pub fn run(args: Args) -> Result<ExitCode, CliError> {
    let (k, h) = args.cell;
    if args.count {
        let total = if args.canonical {
            canonical_count(k, h)?
        } else {
            raw_count(k, h)?
        };
        println!("{total}");
        return Ok(ExitCode::SUCCESS);
    }
    let mode = if args.canonical {
        EnumerationMode::Canonical
    } else {
        EnumerationMode::Raw
    };
    for spec in enumerate_chains(k, h, mode, args.cap)? {
        println!("{spec}");
    }
    Ok(ExitCode::SUCCESS)
}
