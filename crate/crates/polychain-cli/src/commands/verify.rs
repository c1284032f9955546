use std::process::ExitCode;

use polychain::extremal::{verify_cell, TheoremCell};
use serde::Serialize;

use crate::error::CliError;
use crate::format;

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Polygon sizes: a..=b, a..b, a-b, or a single value
    #[arg(long, value_parser = super::parse_range, value_name = "RANGE")]
    k: (u32, u32),
    /// Polygon counts: a..=b, a..b, a-b, or a single value
    #[arg(long, value_parser = super::parse_range, value_name = "RANGE")]
    h: (u32, u32),
    /// Required separation between an extremal class and every other class
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Worker threads (cells are checked in parallel)
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Emit a single JSON object instead of per-cell lines
    #[arg(long)]
    json: bool,
}

#[derive(Serialize)]
struct CellOut {
    k: u32,
    h: u32,
    classes: u64,
    pass: bool,
    expected_min: String,
    observed_min: String,
    min_kf: f64,
    min_gap: Option<f64>,
    expected_max: String,
    observed_max: String,
    max_kf: f64,
    max_gap: Option<f64>,
}

#[derive(Serialize)]
struct Report {
    cells: Vec<CellOut>,
    all_pass: bool,
}

fn cell_out(cell: &TheoremCell) -> CellOut {
    CellOut {
        k: cell.k,
        h: cell.h,
        classes: cell.classes,
        pass: cell.pass,
        expected_min: cell.expected_min.to_string(),
        observed_min: cell.observed_min.to_string(),
        min_kf: cell.min_kf,
        min_gap: cell.min_gap,
        expected_max: cell.expected_max.to_string(),
        observed_max: cell.observed_max.to_string(),
        max_kf: cell.max_kf,
        max_gap: cell.max_gap,
    }
}

pub fn run(args: Args) -> Result<ExitCode, CliError> {
    let (k_lo, k_hi) = args.k;
    let (h_lo, h_hi) = args.h;
    let cells: Vec<(u32, u32)> = (k_lo..=k_hi)
        .flat_map(|k| (h_lo..=h_hi).map(move |h| (k, h)))
        .collect();
    let results = super::parallel_map(&cells, args.workers, |&(k, h)| {
        verify_cell(k, h, args.tol)
    });
    let mut out = Vec::with_capacity(results.len());
    for result in results {
        out.push(cell_out(&result?));
    }
    let all_pass = out.iter().all(|c| c.pass);

    if args.json {
        let report = Report {
            cells: out,
            all_pass,
        };
        println!("{}", serde_json::to_string(&report)?);
    } else {
        for cell in &out {
            if cell.pass {
                println!(
                    "cell {}:{} PASS classes {} min {} max {}",
                    cell.k, cell.h, cell.classes, cell.observed_min, cell.observed_max
                );
            } else {
                let gap = |g: Option<f64>| {
                    g.map_or_else(|| "none".to_string(), format::value)
                };
                println!(
                    "cell {}:{} FAIL min observed {} expected {} (gap {}) \
                     max observed {} expected {} (gap {})",
                    cell.k,
                    cell.h,
                    cell.observed_min,
                    cell.expected_min,
                    gap(cell.min_gap),
                    cell.observed_max,
                    cell.expected_max,
                    gap(cell.max_gap),
                );
            }
        }
        println!("verdict {}", if all_pass { "PASS" } else { "FAIL" });
    }
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}
