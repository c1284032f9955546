//! Symbolic network rewriting: series, parallel, and Δ-Y rules, plus the
//! full left-to-right collapse of a polygonal chain into a fan.
//!
//! Each rule replaces a local pattern by its two-terminal (or
//! three-terminal) electrical equivalent, so every effective resistance
//! between surviving vertices is preserved exactly. Chaining the rules along
//! a chain graph collapses everything left of the final polygon into a
//! three-edge "fan": a source vertex `z`, a hub, and the two shared corners
//! of the last polygon. The three fan weights (`theta1`, `theta2`, and the
//! `z`-to-hub prefix) then give closed-form resistances from `z` to every
//! vertex of the last polygon.
//!
//! This engine is deliberately independent of the Laplacian solver in
//! [`crate::resistance`]; agreement between the two is a core correctness
//! check. All arithmetic is generic over [`Weight`], so the same pipeline
//! runs in binary64 or in exact rationals.

use alloc::vec::Vec;

use crate::chain::LabeledChainGraph;
use crate::network::{Network, Weight};

/// Errors from rewriting operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReductionError {
    #[error("series path needs at least two vertices")]
    PathTooShort,
    #[error("vertex {vertex} repeats along the series path")]
    RepeatedVertex { vertex: usize },
    #[error("no edge between {u} and {v}")]
    MissingEdge { u: usize, v: usize },
    #[error("parallel edges between {u} and {v} where one was expected")]
    AmbiguousEdge { u: usize, v: usize },
    #[error("interior vertex {vertex} has degree {degree}, series needs 2")]
    InteriorDegree { vertex: usize, degree: usize },
    #[error("triangle vertices must be pairwise distinct")]
    DegenerateTriangle,
    #[error("vertex {vertex} out of range for network on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("chain has {h} polygon(s); the fan collapse needs at least 2")]
    ChainTooShort { h: u32 },
    #[error("source vertex {vertex} is not a degree-2 vertex of the first polygon")]
    InvalidSource { vertex: usize },
    #[error("expected {expected} edge weights, got {got}")]
    WeightCountMismatch { expected: usize, got: usize },
    #[error("polygons need at least {} sides, got {k}", crate::chain::MIN_SIDES)]
    SidesTooSmall { k: u32 },
    #[error("parameter {name} outside its domain")]
    ParameterOutOfRange { name: &'static str },
}

/// One recorded rewrite. Vertex ids refer to the network the step was
/// applied to; Δ-Y centers are appended at fresh indices, so ids never
/// shift between steps.
#[derive(Debug, Clone, PartialEq)]
pub enum ReductionStep<W> {
    /// A path whose interior vertices had degree two was replaced by one
    /// edge from its first to its last vertex, of weight `weight`.
    Series { path: Vec<usize>, weight: W },
    /// All parallel edges between `u` and `v` were merged into one edge.
    Parallel { u: usize, v: usize, weight: W },
    /// The triangle on `tri` was replaced by a star through the fresh
    /// vertex `center`; `arms[i]` is the resistance from `tri[i]` to it.
    DeltaY {
        tri: [usize; 3],
        center: usize,
        arms: [W; 3],
    },
}

/// A record of a rewriting run: the steps in order and the network they
/// produce. Vertices consumed along the way remain as isolated ids (use
/// [`Network::induced`] to drop them before solving).
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionTrace<W> {
    pub steps: Vec<ReductionStep<W>>,
    pub final_network: Network<W>,
}

/// The three weights of a collapsed chain: hub-to-`a` arm, hub-to-`b` arm,
/// and the series resistance from the source to the hub.
#[derive(Debug, Clone, PartialEq)]
pub struct FanParameters<W> {
    pub theta1: W,
    pub theta2: W,
    pub prefix_resistance: W,
}

/// Result of collapsing a chain: the surviving fan, the trace that
/// produced it, and resistances from the source to the whole last polygon.
#[derive(Debug, Clone, PartialEq)]
pub struct FanReduction<W> {
    /// The degree-2 vertex of polygon 1 the resistances are measured from.
    pub source: usize,
    pub params: FanParameters<W>,
    pub trace: ReductionTrace<W>,
    /// Last-polygon vertices from `a_{h-1}` around to `b_{h-1}` (the
    /// shared-edge-avoiding arc; `k` vertices).
    pub last_cycle: Vec<usize>,
    /// `(vertex, resistance from source)` for each vertex of `last_cycle`,
    /// in the same order.
    pub omegas: Vec<(usize, W)>,
}

impl<W: Weight> FanReduction<W> {
    /// Resistance from the source to `vertex`, if it lies on the last
    /// polygon's arc.
    pub fn omega_at(&self, vertex: usize) -> Option<&W> {
        self.omegas
            .iter()
            .find(|(v, _)| *v == vertex)
            .map(|(_, w)| w)
    }
}

fn check_vertex<W: Weight>(net: &Network<W>, v: usize) -> Result<(), ReductionError> {
    if v >= net.vertex_count() {
        Err(ReductionError::VertexOutOfRange {
            vertex: v,
            n: net.vertex_count(),
        })
    } else {
        Ok(())
    }
}

/// Replaces a series path (interior vertices of degree exactly two) by a
/// single edge of the summed resistance. A two-vertex path is the identity
/// case: the network is returned unchanged with the weight of the unique
/// edge between the endpoints.
pub fn series_reduce<W: Weight>(
    net: &Network<W>,
    path: &[usize],
) -> Result<(Network<W>, W), ReductionError> {
    if path.len() < 2 {
        return Err(ReductionError::PathTooShort);
    }
    for &v in path {
        check_vertex(net, v)?;
    }
    {
        let mut seen = alloc::collections::BTreeSet::new();
        for &v in path {
            if !seen.insert(v) {
                return Err(ReductionError::RepeatedVertex { vertex: v });
            }
        }
    }
    // Every consecutive pair must be joined by exactly one edge, and every
    // interior vertex must touch nothing outside the path.
    let mut total = W::zero();
    for pair in path.windows(2) {
        let between = net.edge_indices_between(pair[0], pair[1]);
        match between.len() {
            0 => {
                return Err(ReductionError::MissingEdge {
                    u: pair[0],
                    v: pair[1],
                })
            }
            1 => total = total + net.edges()[between[0]].weight.clone(),
            _ => {
                return Err(ReductionError::AmbiguousEdge {
                    u: pair[0],
                    v: pair[1],
                })
            }
        }
    }
    for &v in &path[1..path.len() - 1] {
        let d = net.degree(v);
        if d != 2 {
            return Err(ReductionError::InteriorDegree { vertex: v, degree: d });
        }
    }
    if path.len() == 2 {
        return Ok((net.clone(), total));
    }
    let mut out = net.clone();
    for pair in path.windows(2) {
        out.remove_edge(pair[0], pair[1])
            .expect("validated above");
    }
    out.add_edge(path[0], path[path.len() - 1], total.clone())
        .expect("endpoints validated, weight positive");
    Ok((out, total))
}

/// Merges every edge between `u` and `v` into a single edge carrying the
/// parallel combination (reciprocal of the reciprocal sum). With a single
/// edge present this is the identity case.
pub fn parallel_reduce<W: Weight>(
    net: &Network<W>,
    u: usize,
    v: usize,
) -> Result<(Network<W>, W), ReductionError> {
    check_vertex(net, u)?;
    check_vertex(net, v)?;
    let indices = net.edge_indices_between(u, v);
    if indices.is_empty() {
        return Err(ReductionError::MissingEdge { u, v });
    }
    let combined = net
        .parallel_weight_between(u, v)
        .expect("edges exist");
    if indices.len() == 1 {
        return Ok((net.clone(), combined));
    }
    let mut out = net.clone();
    for &i in indices.iter().rev() {
        out.remove_edge_at(i);
    }
    out.add_edge(u, v, combined.clone())
        .expect("vertices validated, weight positive");
    Ok((out, combined))
}

/// Replaces the triangle on `(a, b, c)` by an equivalent star through a
/// fresh center vertex. Parallel edges on a triangle side are folded first.
/// Returns the rewritten network, the arm resistances in `(a, b, c)`
/// order, and the center's index (always the old vertex count).
pub fn delta_y_transform<W: Weight>(
    net: &Network<W>,
    a: usize,
    b: usize,
    c: usize,
) -> Result<(Network<W>, [W; 3], usize), ReductionError> {
    if a == b || b == c || a == c {
        return Err(ReductionError::DegenerateTriangle);
    }
    for &v in &[a, b, c] {
        check_vertex(net, v)?;
    }
    let side = |u: usize, v: usize| -> Result<W, ReductionError> {
        net.parallel_weight_between(u, v)
            .ok_or(ReductionError::MissingEdge { u, v })
    };
    let r_ab = side(a, b)?;
    let r_bc = side(b, c)?;
    let r_ca = side(c, a)?;
    let perimeter = r_ab.clone() + r_bc.clone() + r_ca.clone();
    let arm_a = r_ab.clone() * r_ca.clone() / perimeter.clone();
    let arm_b = r_ab.clone() * r_bc.clone() / perimeter.clone();
    let arm_c = r_bc.clone() * r_ca.clone() / perimeter;
    let mut out = net.clone();
    for (u, v) in [(a, b), (b, c), (c, a)] {
        for i in out.edge_indices_between(u, v).into_iter().rev() {
            out.remove_edge_at(i);
        }
    }
    let center = out.add_vertex();
    out.add_edge(a, center, arm_a.clone())
        .expect("fresh center, positive arm");
    out.add_edge(b, center, arm_b.clone())
        .expect("fresh center, positive arm");
    out.add_edge(c, center, arm_c.clone())
        .expect("fresh center, positive arm");
    Ok((out, [arm_a, arm_b, arm_c], center))
}

/// Weight of the unique edge between `u` and `v`, for post-rewrite reads.
fn unique_edge_weight<W: Weight>(
    net: &Network<W>,
    u: usize,
    v: usize,
) -> Result<W, ReductionError> {
    let idx = net.edge_indices_between(u, v);
    match idx.len() {
        0 => Err(ReductionError::MissingEdge { u, v }),
        1 => Ok(net.edges()[idx[0]].weight.clone()),
        _ => Err(ReductionError::AmbiguousEdge { u, v }),
    }
}

/// Collapses everything left of the last polygon into a fan.
///
/// `weights` gives one resistance per edge in `graph.edges()` order (all
/// ones when `None`). `source` must be a degree-2 vertex of polygon 1; the
/// default is the top-side neighbor of the first shared vertex.
///
/// The pipeline: split polygon 1 at the source into its two shared-corner
/// arcs and series-reduce both; Δ-Y the resulting triangle through the
/// first shared edge; then for each following polygon, series-reduce its
/// top and bottom paths onto the hub, Δ-Y through the next shared edge,
/// and fold the two-hub tail back into a single source-to-hub prefix. The
/// survivors are exactly `source — hub — {a_{h-1}, b_{h-1}}` plus the last
/// polygon, and resistances from the source to the last polygon follow
/// from loop splitting:
///
/// `omega(source, x) = prefix + (theta1 + d_a(x)) * (theta2 + d_b(x)) / (theta1 + theta2 + L)`
///
/// where `d_a`, `d_b` are arc distances from the two corners and `L` is
/// the full arc resistance.
pub fn fan_reduce<W: Weight>(
    graph: &LabeledChainGraph,
    weights: Option<&[W]>,
    source: Option<usize>,
) -> Result<FanReduction<W>, ReductionError> {
    let h = graph.polygon_count();
    if h < 2 {
        return Err(ReductionError::ChainTooShort { h: h as u32 });
    }
    let mut net: Network<W> = match weights {
        None => graph.unit_network_as::<W>(),
        Some(ws) => {
            if ws.len() != graph.edge_count() {
                return Err(ReductionError::WeightCountMismatch {
                    expected: graph.edge_count(),
                    got: ws.len(),
                });
            }
            graph
                .weighted_network(ws)
                .map_err(|_| ReductionError::ParameterOutOfRange { name: "weights" })?
        }
    };

    let tops = graph.cut_top();
    let bottoms = graph.cut_bottom();
    let (a1, b1) = (tops[0], bottoms[0]);

    // The shared-edge-avoiding walk around polygon 1, from a_1 to b_1.
    let walk: Vec<usize> = graph
        .top_path(1)
        .iter()
        .rev()
        .chain(graph.bottom_path(1).iter())
        .copied()
        .collect();
    let z = source.unwrap_or_else(|| graph.default_source().expect("h >= 2"));
    let z_pos = match walk.iter().position(|&v| v == z) {
        Some(p) if z != a1 && z != b1 => p,
        _ => return Err(ReductionError::InvalidSource { vertex: z }),
    };

    let mut steps: Vec<ReductionStep<W>> = Vec::new();
    let series = |net: &Network<W>,
                      path: &[usize],
                      steps: &mut Vec<ReductionStep<W>>|
     -> Result<Network<W>, ReductionError> {
        let (next, weight) = series_reduce(net, path)?;
        if path.len() > 2 {
            steps.push(ReductionStep::Series {
                path: path.to_vec(),
                weight,
            });
        }
        Ok(next)
    };

    // Polygon 1: two arcs from the source, then a Δ-Y through the shared
    // edge a_1 b_1.
    let to_a: Vec<usize> = walk[..=z_pos].iter().rev().copied().collect();
    let to_b: Vec<usize> = walk[z_pos..].to_vec();
    net = series(&net, &to_a, &mut steps)?;
    net = series(&net, &to_b, &mut steps)?;
    let (next, arms, center) = delta_y_transform(&net, z, a1, b1)?;
    steps.push(ReductionStep::DeltaY {
        tri: [z, a1, b1],
        center,
        arms: arms.clone(),
    });
    net = next;
    let mut hub = center;

    // Polygons 2..h-1: extend both corner arcs onto the hub, Δ-Y through
    // the next shared edge, and fold the source-hub-hub tail.
    for p in 2..h {
        let (a_next, b_next) = (tops[p - 1], bottoms[p - 1]);
        let top_arc: Vec<usize> = core::iter::once(hub)
            .chain(graph.top_path(p).iter().copied())
            .collect();
        let bottom_arc: Vec<usize> = core::iter::once(hub)
            .chain(graph.bottom_path(p).iter().copied())
            .collect();
        net = series(&net, &top_arc, &mut steps)?;
        net = series(&net, &bottom_arc, &mut steps)?;
        let (next, arms, center) = delta_y_transform(&net, hub, a_next, b_next)?;
        steps.push(ReductionStep::DeltaY {
            tri: [hub, a_next, b_next],
            center,
            arms: arms.clone(),
        });
        net = next;
        net = series(&net, &[z, hub, center], &mut steps)?;
        hub = center;
    }

    let (a_last, b_last) = (tops[h - 2], bottoms[h - 2]);
    let theta1 = unique_edge_weight(&net, hub, a_last)?;
    let theta2 = unique_edge_weight(&net, hub, b_last)?;
    let prefix = unique_edge_weight(&net, z, hub)?;

    // Resistances from the source to every last-polygon vertex, by
    // splitting the final loop at the target.
    let arc = graph.last_polygon_arc().expect("h >= 2");
    let mut d_a = Vec::with_capacity(arc.len());
    let mut acc = W::zero();
    d_a.push(acc.clone());
    for pair in arc.windows(2) {
        acc = acc + unique_edge_weight(&net, pair[0], pair[1])?;
        d_a.push(acc.clone());
    }
    let total_arc = acc;
    let denom = theta1.clone() + theta2.clone() + total_arc.clone();
    let omegas: Vec<(usize, W)> = arc
        .iter()
        .zip(&d_a)
        .map(|(&x, da)| {
            let via_a = theta1.clone() + da.clone();
            let via_b = theta2.clone() + (total_arc.clone() - da.clone());
            let omega = prefix.clone() + via_a * via_b / denom.clone();
            (x, omega)
        })
        .collect();

    Ok(FanReduction {
        source: z,
        params: FanParameters {
            theta1,
            theta2,
            prefix_resistance: prefix,
        },
        trace: ReductionTrace {
            steps,
            final_network: net,
        },
        last_cycle: arc,
        omegas,
    })
}

/// Signed gap `(theta1 - theta2 - (k - 4)) / (theta1 + theta2 + k - 1)`:
/// the difference between the source-to-`a`-corner and source-to-`b`-corner
/// resistances of a unit-weight last polygon, normalized by the loop total.
/// Strictly negative whenever `0 < theta1 < 1` and `theta2 > 0`.
pub fn theta_difference(theta1: f64, theta2: f64, k: u32) -> Result<f64, ReductionError> {
    if k < crate::chain::MIN_SIDES {
        return Err(ReductionError::SidesTooSmall { k });
    }
    if !(theta1 > 0.0 && theta1.is_finite()) {
        return Err(ReductionError::ParameterOutOfRange { name: "theta1" });
    }
    if !(theta2 > 0.0 && theta2.is_finite()) {
        return Err(ReductionError::ParameterOutOfRange { name: "theta2" });
    }
    let kf = k as f64;
    Ok((theta1 - theta2 - (kf - 4.0)) / (theta1 + theta2 + kf - 1.0))
}

/// Vertex-sum comparison for a unit `k`-gon whose shared edge has been
/// replaced by an equivalent resistance `r` in `(0, 1)`: the sums of
/// resistances from the first and second arc vertices next to a corner to
/// the whole polygon, and their closed-form difference
/// `(k - 4)(r - 1) / (r + k - 1)` (negative on the domain, so the vertex
/// nearer the corner always has the smaller sum).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LastPolygonSums {
    /// Sum of resistances from the arc vertex adjacent to the corner.
    pub from_first: f64,
    /// Sum of resistances from the next arc vertex out.
    pub from_second: f64,
    /// `from_first - from_second`, in closed form.
    pub difference: f64,
}

/// Computes [`LastPolygonSums`] for shared-edge resistance `r` and polygon
/// size `k`. Domain: `0 < r < 1`, `k >= 5`.
pub fn last_polygon_sums(r: f64, k: u32) -> Result<LastPolygonSums, ReductionError> {
    if k < crate::chain::MIN_SIDES {
        return Err(ReductionError::SidesTooSmall { k });
    }
    if !(r > 0.0 && r < 1.0) {
        return Err(ReductionError::ParameterOutOfRange { name: "r" });
    }
    let kf = k as f64;
    let loop_total = r + kf - 1.0;
    // Both sums share the tail over arc vertices at distance 1..=k-3 on the
    // far side.
    let shared_tail: f64 = (1..=k - 3)
        .map(|i| {
            let d = i as f64;
            d * (loop_total - d) / loop_total
        })
        .sum();
    let from_first = (r + 1.0) * (kf - 2.0) / loop_total
        + (r + kf - 2.0) / loop_total
        + shared_tail;
    let from_second = 2.0 * (r + kf - 3.0) / loop_total
        + (r + kf - 2.0) / loop_total
        + shared_tail;
    let difference = (kf - 4.0) * (r - 1.0) / loop_total;
    Ok(LastPolygonSums {
        from_first,
        from_second,
        difference,
    })
}
