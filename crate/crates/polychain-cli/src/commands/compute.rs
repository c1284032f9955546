use std::path::PathBuf;
use std::process::ExitCode;

use polychain::chain::{ChainSpec, LabeledChainGraph};
use polychain::resistance::{kirchhoff_index, wiener_index};
use serde::Serialize;

use crate::error::CliError;
use crate::format;
use crate::io::{write_graph, GraphFile};

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Chain encoding k:h:w1,...,w(h-2)
    #[arg(long, value_parser = super::parse_spec)]
    spec: ChainSpec,
    /// Which indices to print
    #[arg(long, value_enum, default_value_t = IndexChoice::Both)]
    index: IndexChoice,
    /// Emit a single JSON object instead of key-value lines
    #[arg(long)]
    json: bool,
    /// Also write the labeled graph: JSON for a .json path, otherwise a
    /// plain "u v" edge list
    #[arg(long, value_name = "PATH")]
    emit_graph: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum IndexChoice {
    Kf,
    Wiener,
    Both,
}

#[derive(Serialize)]
struct Report {
    spec: String,
    canonical: String,
    vertices: usize,
    edges: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    kf: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    wiener: Option<u64>,
}

pub fn run(args: Args) -> Result<ExitCode, CliError> {
    let graph = LabeledChainGraph::build(&args.spec);
    let net = graph.unit_network();
    let kf = match args.index {
        IndexChoice::Kf | IndexChoice::Both => Some(kirchhoff_index(&net)?),
        IndexChoice::Wiener => None,
    };
    let wiener = match args.index {
        IndexChoice::Wiener | IndexChoice::Both => Some(wiener_index(&net)?),
        IndexChoice::Kf => None,
    };
    if let Some(path) = &args.emit_graph {
        let dump = GraphFile {
            spec: args.spec.to_string(),
            vertices: graph.vertex_count(),
            edges: graph.edges(),
        };
        write_graph(path, &dump)?;
    }
    let report = Report {
        spec: args.spec.to_string(),
        canonical: args.spec.canonicalize().to_string(),
        vertices: graph.vertex_count(),
        edges: graph.edge_count(),
        kf,
        wiener,
    };
    if args.json {
        println!("{}", serde_json::to_string(&report)?);
    } else {
        println!("spec {}", report.spec);
        println!("canonical {}", report.canonical);
        println!("vertices {}", report.vertices);
        println!("edges {}", report.edges);
        if let Some(kf) = report.kf {
            println!("kf {}", format::value(kf));
        }
        if let Some(wiener) = report.wiener {
            println!("wiener {wiener}");
        }
    }
    Ok(ExitCode::SUCCESS)
}
