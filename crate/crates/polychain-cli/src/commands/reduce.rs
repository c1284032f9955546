use std::process::ExitCode;

use polychain::chain::{ChainSpec, LabeledChainGraph};
use polychain::reduction::{fan_reduce, ReductionError, ReductionStep};
use serde::Serialize;

use crate::error::CliError;
use crate::format;

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Chain encoding k:h:w1,...,w(h-2); needs at least two polygons
    #[arg(long, value_parser = super::parse_spec)]
    spec: ChainSpec,
    /// Source vertex (a degree-2 vertex of the first polygon)
    #[arg(long)]
    source: Option<usize>,
    /// Print every elimination step as a JSON line before the summary
    #[arg(long)]
    trace: bool,
    /// Emit a single JSON object instead of key-value lines
    #[arg(long)]
    json: bool,
}

#[derive(Serialize)]
#[serde(tag = "step", rename_all = "kebab-case")]
enum StepOut<'a> {
    Series { path: &'a [usize], weight: f64 },
    Parallel { u: usize, v: usize, weight: f64 },
    DeltaY {
        triangle: [usize; 3],
        center: usize,
        arms: [f64; 3],
    },
}

impl<'a> StepOut<'a> {
    fn from_step(step: &'a ReductionStep<f64>) -> StepOut<'a> {
        match step {
            ReductionStep::Series { path, weight } => StepOut::Series {
                path,
                weight: *weight,
            },
            ReductionStep::Parallel { u, v, weight } => StepOut::Parallel {
                u: *u,
                v: *v,
                weight: *weight,
            },
            ReductionStep::DeltaY { tri, center, arms } => StepOut::DeltaY {
                triangle: *tri,
                center: *center,
                arms: *arms,
            },
        }
    }
}

#[derive(Serialize)]
struct Report<'a> {
    spec: String,
    source: usize,
    theta1: f64,
    theta2: f64,
    prefix: f64,
    /// `[vertex, resistance from source]` around the last polygon.
    omegas: Vec<(usize, f64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    steps: Option<Vec<StepOut<'a>>>,
}

pub fn run(args: Args) -> Result<ExitCode, CliError> {
    let graph = LabeledChainGraph::build(&args.spec);
    // A source vertex that does not fit this spec is a malformed request,
    // not a computation failure.
    let fan = fan_reduce::<f64>(&graph, None, args.source).map_err(|err| match err {
        ReductionError::InvalidSource { .. } => CliError::Usage(err.to_string()),
        other => CliError::Op(other.to_string()),
    })?;
    let steps = args
        .trace
        .then(|| fan.trace.steps.iter().map(StepOut::from_step).collect());
    let report = Report {
        spec: args.spec.to_string(),
        source: fan.source,
        theta1: fan.params.theta1,
        theta2: fan.params.theta2,
        prefix: fan.params.prefix_resistance,
        omegas: fan.omegas.clone(),
        steps,
    };
    if args.json {
        println!("{}", serde_json::to_string(&report)?);
    } else {
        if let Some(steps) = &report.steps {
            for step in steps {
                println!("{}", serde_json::to_string(step)?);
            }
        }
        println!("spec {}", report.spec);
        println!("source {}", report.source);
        println!("theta1 {}", format::value(report.theta1));
        println!("theta2 {}", format::value(report.theta2));
        println!("prefix {}", format::value(report.prefix));
        for &(vertex, omega) in &report.omegas {
            println!("omega {vertex} {}", format::value(omega));
        }
    }
    Ok(ExitCode::SUCCESS)
}
