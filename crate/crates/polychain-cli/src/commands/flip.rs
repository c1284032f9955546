use std::process::ExitCode;

use polychain::chain::{ChainSpec, LabeledChainGraph};
use polychain::isomer::{chain_kf_difference, find_cut, flip_encoding, IsomerError};
use polychain::resistance::kirchhoff_index;
use serde::Serialize;

use crate::error::CliError;
use crate::format;

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Chain encoding k:h:w1,...,w(h-2)
    #[arg(long, value_parser = super::parse_spec)]
    spec: ChainSpec,
    /// Interior polygon to flip at (2..=h-1)
    #[arg(long)]
    polygon: usize,
    /// Top-interior count handed to the flipped suffix (defaults to the
    /// balancing target)
    #[arg(long)]
    t: Option<u32>,
    /// Emit a single JSON object instead of key-value lines
    #[arg(long)]
    json: bool,
}

#[derive(Serialize)]
struct Report {
    spec: String,
    image: String,
    canonical_image: String,
    polygon: usize,
    target_top: u32,
    top_edge: (usize, usize),
    bottom_edge: (usize, usize),
    kf: f64,
    image_kf: f64,
    /// kf minus image_kf, from the closed-form two-component formula.
    difference: f64,
}

pub fn run(args: Args) -> Result<ExitCode, CliError> {
    let graph = LabeledChainGraph::build(&args.spec);
    // A polygon or target that does not fit this spec is a malformed
    // request, not a computation failure.
    let cut = find_cut(&graph, args.polygon, args.t).map_err(|err| match err {
        IsomerError::NotInterior { .. } | IsomerError::TargetOutOfRange { .. } => {
            CliError::Usage(err.to_string())
        }
        other => CliError::Op(other.to_string()),
    })?;
    let difference = chain_kf_difference(&graph, &cut)?;
    let image = flip_encoding(&args.spec, args.polygon - 1, cut.target_top)?;
    let kf = kirchhoff_index(&graph.unit_network())?;
    let report = Report {
        spec: args.spec.to_string(),
        image: image.to_string(),
        canonical_image: image.canonicalize().to_string(),
        polygon: cut.polygon,
        target_top: cut.target_top,
        top_edge: cut.top_edge,
        bottom_edge: cut.bottom_edge,
        kf,
        image_kf: kf - difference,
        difference,
    };
    if args.json {
        println!("{}", serde_json::to_string(&report)?);
    } else {
        println!("spec {}", report.spec);
        println!("image {}", report.image);
        println!("canonical-image {}", report.canonical_image);
        println!("polygon {}", report.polygon);
        println!("target-top {}", report.target_top);
        println!("cut-top {} {}", report.top_edge.0, report.top_edge.1);
        println!(
            "cut-bottom {} {}",
            report.bottom_edge.0, report.bottom_edge.1
        );
        println!("kf {}", format::value(report.kf));
        println!("image-kf {}", format::value(report.image_kf));
        println!("difference {}", format::value(report.difference));
    }
    Ok(ExitCode::SUCCESS)
}
