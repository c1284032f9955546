use std::path::PathBuf;
use std::process::ExitCode;

use clap::ArgGroup;
use polychain::chain::{ChainSpec, LabeledChainGraph};
use polychain::network::WeightedNetwork;
use polychain::resistance::ResistanceSolver;
use serde::Serialize;

use crate::error::CliError;
use crate::format;
use crate::io::load_network;

#[derive(Debug, clap::Args)]
#[command(group(ArgGroup::new("network").required(true).args(["spec", "input"])))]
pub struct Args {
    /// Chain encoding k:h:w1,...,w(h-2) (unit conductors)
    #[arg(long, value_parser = super::parse_spec)]
    spec: Option<ChainSpec>,
    /// JSON network file: {"vertices": N, "edges": [[u, v, resistance], ...]}
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Pair u,v whose effective resistance to print (repeatable)
    #[arg(long, value_parser = super::parse_pair, value_name = "U,V")]
    pair: Vec<(usize, usize)>,
    /// Vertex whose resistance sum to all others to print (repeatable)
    #[arg(long, value_name = "V")]
    vertex: Vec<usize>,
    /// Print the Kirchhoff index (the default when nothing else is asked)
    #[arg(long)]
    kf: bool,
    /// Print the full resistance matrix
    #[arg(long)]
    matrix: bool,
    /// Emit a single JSON object instead of key-value lines
    #[arg(long)]
    json: bool,
}

#[derive(Serialize)]
struct PairOut {
    u: usize,
    v: usize,
    omega: f64,
}

#[derive(Serialize)]
struct VertexOut {
    vertex: usize,
    sum: f64,
}

#[derive(Serialize)]
struct Report {
    vertices: usize,
    edges: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    kf: Option<f64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pairs: Vec<PairOut>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    vertex_sums: Vec<VertexOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    matrix: Option<Vec<Vec<f64>>>,
}

pub fn run(args: Args) -> Result<ExitCode, CliError> {
    let net: WeightedNetwork = match (&args.spec, &args.input) {
        (Some(spec), None) => LabeledChainGraph::build(spec).unit_network(),
        (None, Some(path)) => load_network(path)?,
        _ => unreachable!("clap enforces exactly one of --spec/--input"),
    };
    let n = net.vertex_count();
    let check = |vertex: usize| -> Result<(), CliError> {
        if vertex >= n {
            return Err(CliError::Op(format!(
                "vertex {vertex} out of range (the network has {n} vertices)"
            )));
        }
        Ok(())
    };
    for &(u, v) in &args.pair {
        check(u)?;
        check(v)?;
    }
    for &v in &args.vertex {
        check(v)?;
    }

    let want_kf = args.kf || (args.pair.is_empty() && args.vertex.is_empty() && !args.matrix);
    let solver = ResistanceSolver::new(&net)?;
    let table = if want_kf || !args.vertex.is_empty() || args.matrix {
        Some(solver.resistance_matrix())
    } else {
        None
    };

    let mut pairs = Vec::with_capacity(args.pair.len());
    for &(u, v) in &args.pair {
        let omega = match &table {
            Some(t) => t.omega(u, v),
            None => solver.effective_resistance(u, v)?,
        };
        pairs.push(PairOut { u, v, omega });
    }
    let vertex_sums: Vec<VertexOut> = args
        .vertex
        .iter()
        .map(|&vertex| VertexOut {
            vertex,
            sum: table.as_ref().expect("matrix computed").vertex_sum(vertex),
        })
        .collect();
    let kf = want_kf.then(|| table.as_ref().expect("matrix computed").kirchhoff_index());
    let matrix = args.matrix.then(|| {
        let t = table.as_ref().expect("matrix computed");
        (0..n)
            .map(|u| (0..n).map(|v| t.omega(u, v)).collect())
            .collect::<Vec<Vec<f64>>>()
    });

    let report = Report {
        vertices: n,
        edges: net.edge_count(),
        kf,
        pairs,
        vertex_sums,
        matrix,
    };
    if args.json {
        println!("{}", serde_json::to_string(&report)?);
    } else {
        println!("vertices {}", report.vertices);
        println!("edges {}", report.edges);
        if let Some(kf) = report.kf {
            println!("kf {}", format::value(kf));
        }
        for p in &report.pairs {
            println!("pair {} {} {}", p.u, p.v, format::value(p.omega));
        }
        for s in &report.vertex_sums {
            println!("vertex {} {}", s.vertex, format::value(s.sum));
        }
        if let Some(matrix) = &report.matrix {
            for row in matrix {
                let line: Vec<String> = row.iter().map(|&x| format::value(x)).collect();
                println!("{}", line.join(" "));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
