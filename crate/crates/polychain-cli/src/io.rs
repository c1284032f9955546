//! On-disk formats: a minimal JSON network description for `resistance
//! --input` and the graph dump written by `compute --emit-graph`.

use std::path::Path;

use polychain::network::WeightedNetwork;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Arbitrary-network input: a vertex count plus `[u, v, resistance]` triples.
#[derive(Debug, Serialize, Deserialize)]
pub struct NetworkFile {
    pub vertices: usize,
    pub edges: Vec<(usize, usize, f64)>,
}

pub fn load_network(path: &Path) -> Result<WeightedNetwork, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|err| CliError::Op(format!("cannot read {}: {err}", path.display())))?;
    let file: NetworkFile = serde_json::from_str(&text)
        .map_err(|err| CliError::Op(format!("{}: {err}", path.display())))?;
    let mut net = WeightedNetwork::new(file.vertices);
    for (u, v, weight) in file.edges {
        // Negated on purpose: NaN weights must also be rejected.
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(weight > 0.0) {
            return Err(CliError::Op(format!(
                "edge {u}-{v}: edge resistances must be positive, got {weight}"
            )));
        }
        net.add_edge(u, v, weight)
            .map_err(|err| CliError::Op(format!("edge {u}-{v}: {err}")))?;
    }
    Ok(net)
}

/// Graph dump: the labeled vertex count and sorted edge list of a chain.
/// A `.json` destination gets the JSON object; any other extension gets a
/// plain edge list, one `u v` pair per line.
#[derive(Debug, Serialize)]
pub struct GraphFile<'a> {
    pub spec: String,
    pub vertices: usize,
    pub edges: &'a [(usize, usize)],
}

pub fn write_graph(path: &Path, dump: &GraphFile<'_>) -> Result<(), CliError> {
    let json = path
        .extension()
        .is_some_and(|ext| ext.eq_ignore_ascii_case("json"));
    let text = if json {
        let mut text = serde_json::to_string_pretty(dump)?;
        text.push('\n');
        text
    } else {
        let mut text = String::new();
        for &(u, v) in dump.edges {
            text.push_str(&format!("{u} {v}\n"));
        }
        text
    };
    std::fs::write(path, text)
        .map_err(|err| CliError::Op(format!("cannot write {}: {err}", path.display())))
}
