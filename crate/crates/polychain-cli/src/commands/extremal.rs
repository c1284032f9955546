use std::path::PathBuf;
use std::process::ExitCode;

use polychain::extremal::{
    assemble_report, enumerate_chains, evaluate_chain, ChainRow, EnumerationMode, SearchOptions,
    SearchReport,
};
use serde::Serialize;

use crate::error::CliError;
use crate::format;

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Polygon size (at least 5)
    #[arg(long)]
    k: u32,
    /// Number of polygons
    #[arg(long)]
    h: u32,
    /// Write the full evaluated table as CSV (spec,kf,wiener)
    #[arg(long, value_name = "PATH")]
    table: Option<PathBuf>,
    /// Tie tolerance on the index
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Re-decide tied extrema over exact rationals
    #[arg(long)]
    exact_ties: bool,
    /// Worker threads for the evaluation
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Refuse to search more raw encodings than this
    #[arg(long, default_value_t = 10_000_000)]
    cap: u64,
    /// Emit a single JSON object instead of key-value lines
    #[arg(long)]
    json: bool,
}

#[derive(Serialize)]
struct ExtremumOut {
    spec: String,
    kf: f64,
    ties: Vec<String>,
}

#[derive(Serialize)]
struct Report {
    k: u32,
    h: u32,
    raw: String,
    classes: u64,
    min: ExtremumOut,
    max: ExtremumOut,
}

impl Report {
    fn from_search(report: &SearchReport) -> Report {
        Report {
            k: report.k,
            h: report.h,
            raw: report.total_raw.to_string(),
            classes: report.total_canonical,
            min: ExtremumOut {
                spec: report.min_spec.to_string(),
                kf: report.min_kf,
                ties: report.ties_min.iter().map(|s| s.to_string()).collect(),
            },
            max: ExtremumOut {
                spec: report.max_spec.to_string(),
                kf: report.max_kf,
                ties: report.ties_max.iter().map(|s| s.to_string()).collect(),
            },
        }
    }
}

pub fn run(args: Args) -> Result<ExitCode, CliError> {
    let options = SearchOptions {
        tolerance: args.tol,
        exact_ties: args.exact_ties,
        cap: args.cap,
        with_table: args.table.is_some(),
    };
    let specs = enumerate_chains(args.k, args.h, EnumerationMode::Canonical, args.cap)?;
    let rows: Result<Vec<ChainRow>, _> =
        super::parallel_map(&specs, args.workers, evaluate_chain)
            .into_iter()
            .collect();
    let report = assemble_report(args.k, args.h, rows?, &options)?;

    if let Some(path) = &args.table {
        let table = report.table.as_ref().expect("table was requested");
        let mut writer = csv::Writer::from_path(path)
            .map_err(|err| CliError::Op(format!("cannot write {}: {err}", path.display())))?;
        writer.write_record(["spec", "kf", "wiener"])?;
        for row in table {
            writer.write_record([
                row.spec.to_string(),
                row.kf.to_string(),
                row.wiener.to_string(),
            ])?;
        }
        writer.flush()?;
    }

    let out = Report::from_search(&report);
    if args.json {
        println!("{}", serde_json::to_string(&out)?);
    } else {
        println!("cell {}:{}", out.k, out.h);
        println!("raw {}", out.raw);
        println!("classes {}", out.classes);
        println!("min {} kf {}", out.min.spec, format::value(out.min.kf));
        println!("max {} kf {}", out.max.spec, format::value(out.max.kf));
        println!("ties-min {}", out.min.ties.len());
        println!("ties-max {}", out.max.ties.len());
    }
    Ok(ExitCode::SUCCESS)
}
