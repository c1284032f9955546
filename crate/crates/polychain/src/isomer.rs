//! Cut-and-flip surgery on chains.
//!
//! Deleting one top edge and one bottom edge of an interior polygon
//! separates a chain into two components `N1` (left) and `N2` (right),
//! joined in the original by the "straight" edge pair `u-x`, `v-y`. The
//! flip re-glues the components crosswise (`u-y`, `v-x`), which realizes
//! another chain of the same polygon count whose encoding is the original
//! prefix, a chosen top count at the cut polygon, and the complemented
//! suffix. The difference of Kirchhoff indices between the straight and
//! crossed gluings has a closed form in terms of the two components alone,
//! which this module implements alongside the surgery itself.

use alloc::vec;
use alloc::vec::Vec;

use crate::chain::{ChainError, ChainSpec, LabeledChainGraph};
use crate::network::{Network, Weight, WeightedNetwork};
use crate::resistance::{resistance_matrix, ResistanceError};

/// Errors from cut construction and flip surgery.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum IsomerError {
    #[error("polygon {polygon} is not interior (needs 2..=h-1, h = {h})")]
    NotInterior { polygon: usize, h: u32 },
    #[error("target top count {target} exceeds the maximum {max}")]
    TargetOutOfRange { target: u32, max: u32 },
    #[error("position {position} outside the interior weight vector of length {len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("no edge between {u} and {v}")]
    MissingEdge { u: usize, v: usize },
    #[error("the cut does not separate the network into two parts")]
    CutNotSeparating,
    #[error(transparent)]
    Resistance(#[from] ResistanceError),
    #[error(transparent)]
    Chain(#[from] ChainError),
}

/// One admissible cut: the interior polygon it crosses, the top count the
/// crossed re-gluing realizes there, and the two severed edges. Each edge
/// is oriented `(left vertex, right vertex)`: `top_edge.0` and
/// `bottom_edge.0` stay with the left component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsomerCut {
    pub polygon: usize,
    pub target_top: u32,
    pub top_edge: (usize, usize),
    pub bottom_edge: (usize, usize),
}

/// The default flip target for a polygon with `w` top interior vertices
/// out of `k - 4`: move `w` one step toward the balanced middle, and keep
/// it unchanged when it is already balanced.
pub fn default_target(k: u32, w: u32) -> u32 {
    let hi = (k - 4).div_ceil(2);
    let lo = (k - 4) / 2;
    if w > hi {
        hi
    } else if w < lo {
        lo
    } else {
        w
    }
}

/// Chooses the cut edges on `polygon` (1-based, interior) so the crossed
/// re-gluing has `target_top` top interior vertices there. `None` picks
/// [`default_target`].
pub fn find_cut(
    graph: &LabeledChainGraph,
    polygon: usize,
    target_top: Option<u32>,
) -> Result<IsomerCut, IsomerError> {
    let spec = graph.spec();
    let h = spec.h();
    if polygon < 2 || polygon + 1 > h as usize {
        return Err(IsomerError::NotInterior { polygon, h });
    }
    let k = spec.k();
    let w = spec.w()[polygon - 2];
    let t = target_top.unwrap_or_else(|| default_target(k, w));
    if t > k - 4 {
        return Err(IsomerError::TargetOutOfRange { target: t, max: k - 4 });
    }
    // Cutting after top position s and bottom position r leaves
    // s + (k - 4 - w) - r top interiors in the crossed re-gluing; the two
    // admissible placements keep both indices in range for every t.
    let (s, r) = if t <= w {
        (t, k - 4 - w)
    } else {
        (w, k - 4 - t)
    };
    let (s, r) = (s as usize, r as usize);
    let top = graph.top_path(polygon);
    let bottom = graph.bottom_path(polygon);
    Ok(IsomerCut {
        polygon,
        target_top: t,
        top_edge: (top[s], top[s + 1]),
        bottom_edge: (bottom[r], bottom[r + 1]),
    })
}

/// Rewires a network across a cut: the straight pair `u-x`, `v-y` is
/// removed and the crossed pair `u-y`, `v-x` added, the new edges carrying
/// the weights of the old top and bottom edges respectively. Applying the
/// flip again with the partner edges swapped restores the original.
pub fn st_flip<W: Weight>(
    net: &Network<W>,
    cut: &IsomerCut,
) -> Result<Network<W>, IsomerError> {
    let (u, x) = cut.top_edge;
    let (v, y) = cut.bottom_edge;
    let mut out = net.clone();
    let w_top = out
        .remove_edge(u, x)
        .map_err(|_| IsomerError::MissingEdge { u, v: x })?;
    let w_bottom = out
        .remove_edge(v, y)
        .map_err(|_| IsomerError::MissingEdge { u: v, v: y })?;
    out.add_edge(u, y, w_top)
        .map_err(|_| IsomerError::MissingEdge { u, v: y })?;
    out.add_edge(v, x, w_bottom)
        .map_err(|_| IsomerError::MissingEdge { u: v, v: x })?;
    Ok(out)
}

/// Vertex sets of the two sides of a cut, each sorted: first the left
/// component (containing `top_edge.0` and `bottom_edge.0`), then the right.
pub fn chain_cut_components(
    graph: &LabeledChainGraph,
    cut: &IsomerCut,
) -> Result<(Vec<usize>, Vec<usize>), IsomerError> {
    let n = graph.vertex_count();
    let (u, x) = cut.top_edge;
    let (v, y) = cut.bottom_edge;
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in graph.edges() {
        let severed = (a.min(b), a.max(b)) == (u.min(x), u.max(x))
            || (a.min(b), a.max(b)) == (v.min(y), v.max(y));
        if !severed {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    let mut seen = vec![false; n];
    let mut queue = alloc::collections::VecDeque::new();
    seen[u] = true;
    queue.push_back(u);
    while let Some(w) = queue.pop_front() {
        for &t in &adj[w] {
            if !seen[t] {
                seen[t] = true;
                queue.push_back(t);
            }
        }
    }
    let left: Vec<usize> = (0..n).filter(|&i| seen[i]).collect();
    let right: Vec<usize> = (0..n).filter(|&i| !seen[i]).collect();
    let splits = seen[v] && !seen[x] && !seen[y] && !right.is_empty();
    if !splits {
        return Err(IsomerError::CutNotSeparating);
    }
    Ok((left, right))
}

/// Closed-form difference `Kf(straight) - Kf(crossed)` for two components
/// re-glued by unit edges: straight joins `u-x` and `v-y`, crossed joins
/// `u-y` and `v-x`, with `u, v` in the first component and `x, y` in the
/// second. Computed from each component's own resistances only:
///
/// `(S1(u) - S1(v)) * (S2(y) - S2(x)) / (R1(u,v) + R2(x,y) + 2)`
///
/// where `S` are vertex resistance sums and `R` pair resistances.
pub fn kf_difference(
    first: &WeightedNetwork,
    uv: (usize, usize),
    second: &WeightedNetwork,
    xy: (usize, usize),
) -> Result<f64, IsomerError> {
    let (u, v) = uv;
    let (x, y) = xy;
    let check = |net: &WeightedNetwork, vertex: usize| -> Result<(), IsomerError> {
        if vertex >= net.vertex_count() {
            Err(ResistanceError::VertexOutOfRange {
                vertex,
                n: net.vertex_count(),
            }
            .into())
        } else {
            Ok(())
        }
    };
    check(first, u)?;
    check(first, v)?;
    check(second, x)?;
    check(second, y)?;
    let r1 = resistance_matrix(first)?;
    let r2 = resistance_matrix(second)?;
    let numerator = (r1.vertex_sum(u) - r1.vertex_sum(v)) * (r2.vertex_sum(y) - r2.vertex_sum(x));
    let denominator = r1.omega(u, v) + r2.omega(x, y) + 2.0;
    Ok(numerator / denominator)
}

/// [`kf_difference`] driven end to end from a chain and a cut on it: the
/// unit chain is split at the cut and the closed form evaluated on the two
/// components. Equals `Kf(chain) - Kf(st_flip(chain))`.
pub fn chain_kf_difference(
    graph: &LabeledChainGraph,
    cut: &IsomerCut,
) -> Result<f64, IsomerError> {
    let (left, right) = chain_cut_components(graph, cut)?;
    let net = graph.unit_network();
    let (n1, map1) = net.induced(&left);
    let (n2, map2) = net.induced(&right);
    kf_difference(
        &n1,
        (map1[&cut.top_edge.0], map1[&cut.bottom_edge.0]),
        &n2,
        (map2[&cut.top_edge.1], map2[&cut.bottom_edge.1]),
    )
}

/// The encoding-level image of a flip: keep weights before `position`
/// (1-based), set `target` there, and complement everything after. Applying
/// it again at the same position with the original value is the identity.
pub fn flip_encoding(
    spec: &ChainSpec,
    position: usize,
    target: u32,
) -> Result<ChainSpec, IsomerError> {
    let w = spec.w();
    if position == 0 || position > w.len() {
        return Err(IsomerError::PositionOutOfRange {
            position,
            len: w.len(),
        });
    }
    let k = spec.k();
    if target > k - 4 {
        return Err(IsomerError::TargetOutOfRange {
            target,
            max: k - 4,
        });
    }
    let mut image: Vec<u32> = w.to_vec();
    image[position - 1] = target;
    for entry in image.iter_mut().skip(position) {
        *entry = k - 4 - *entry;
    }
    Ok(ChainSpec::new(k, spec.h(), image)?)
}
