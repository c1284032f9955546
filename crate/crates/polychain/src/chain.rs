//! Chain encodings and their labeled graph realizations.
//!
//! A chain is a row of `h` polygons with `k` sides each (`k >= 5`);
//! consecutive polygons share one edge. Present the row as two horizontal
//! paths (top and bottom) joined by `h + 1` vertical rungs: the leftmost and
//! rightmost rungs are the outer ends, and the `h - 1` rungs in between are
//! the shared edges. Each polygon has `k - 4` subdivision vertices split
//! between its top and bottom side. The two end polygons always split as
//! evenly as possible (top side gets the ceiling); interior polygon `i + 2`
//! places `w[i]` subdivision vertices on top and `k - 4 - w[i]` on the
//! bottom. The vector `w` (length `h - 2`, entries in `0..=k-4`) therefore
//! determines the chain, and [`ChainSpec`] packages `(k, h, w)`.
//!
//! Two encodings describe isomorphic chains exactly when they agree up to
//! reversing `w` and/or complementing every entry (`w[i] -> k - 4 - w[i]`,
//! i.e. turning the drawing upside down). [`ChainSpec::canonicalize`] picks
//! the lexicographic minimum of the four variants as class representative.
//!
//! # Vertex numbering
//!
//! [`LabeledChainGraph::build`] numbers vertices polygon by polygon, left to
//! right. Within a polygon the vertices appearing for the first time are
//! numbered: top-side subdivision vertices left to right, then the top-right
//! corner, then bottom-side subdivision vertices, then the bottom-right
//! corner. The first polygon starts with its top-left corner (vertex 0) and
//! inserts its bottom-left corner right after its top row. The numbering is
//! part of the contract: vertex ids are stable for a given spec.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::network::{Network, Weight};

/// Smallest admissible polygon size.
pub const MIN_SIDES: u32 = 5;

/// Errors from constructing or transforming chain encodings.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChainError {
    #[error("polygon size k = {k} is below the minimum {MIN_SIDES}")]
    SidesTooSmall { k: u32 },
    #[error("chain length h must be at least 1")]
    ZeroLength,
    #[error("weight vector has length {got}, expected h - 2 = {expected}")]
    WeightLengthMismatch { expected: usize, got: usize },
    #[error("weight w[{index}] = {value} exceeds k - 4 = {max}")]
    WeightOutOfRange { index: usize, value: u32, max: u32 },
    #[error("the {family} family requires {requirement} k (got k = {k})")]
    Parity {
        family: &'static str,
        requirement: &'static str,
        k: u32,
    },
}

/// Errors from parsing the `k:h:w1,w2,...` text form.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpecParseError {
    #[error("invalid chain spec at byte {position}: {reason}")]
    Syntax { position: usize, reason: String },
    #[error("invalid chain spec: {0}")]
    Invalid(#[from] ChainError),
}

/// A chain encoding `(k, h, w)`: `h` polygons of `k` sides each, with
/// interior top-side subdivision counts `w` (length `h - 2`, entries in
/// `0..=k-4`). Construct via [`ChainSpec::new`] (validated) or parse the
/// text form `k:h:w1,w2,...` (for `h <= 2` the weight part is empty:
/// `"6:2:"`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChainSpec {
    k: u32,
    h: u32,
    w: Vec<u32>,
}

impl core::fmt::Debug for ChainSpec {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "ChainSpec({self})")
    }
}

impl ChainSpec {
    /// Validates and constructs an encoding.
    pub fn new(k: u32, h: u32, w: Vec<u32>) -> Result<Self, ChainError> {
        if k < MIN_SIDES {
            return Err(ChainError::SidesTooSmall { k });
        }
        if h == 0 {
            return Err(ChainError::ZeroLength);
        }
        let expected = h.saturating_sub(2) as usize;
        if w.len() != expected {
            return Err(ChainError::WeightLengthMismatch {
                expected,
                got: w.len(),
            });
        }
        let max = k - 4;
        for (index, &value) in w.iter().enumerate() {
            if value > max {
                return Err(ChainError::WeightOutOfRange { index, value, max });
            }
        }
        Ok(ChainSpec { k, h, w })
    }

    /// Polygon size.
    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of polygons.
    pub fn h(&self) -> u32 {
        self.h
    }

    /// Interior top-side subdivision counts (length `h - 2`).
    pub fn w(&self) -> &[u32] {
        &self.w
    }

    /// Number of vertices of the realization: `h (k - 2) + 2`.
    pub fn vertex_count(&self) -> usize {
        self.h as usize * (self.k as usize - 2) + 2
    }

    /// Number of edges of the realization: `h (k - 1) + 1`.
    pub fn edge_count(&self) -> usize {
        self.h as usize * (self.k as usize - 1) + 1
    }

    /// Top subdivision count of the end polygons: `ceil((k - 4) / 2)`.
    pub fn end_top(&self) -> u32 {
        (self.k - 3) / 2
    }

    /// Bottom subdivision count of the end polygons: `floor((k - 4) / 2)`.
    pub fn end_bottom(&self) -> u32 {
        (self.k - 4) / 2
    }

    /// The encoding with `w` reversed (reading the row right to left).
    pub fn reversed(&self) -> ChainSpec {
        let mut w = self.w.clone();
        w.reverse();
        ChainSpec { w, ..*self }
    }

    /// The encoding with every entry complemented (`w[i] -> k - 4 - w[i]`,
    /// the drawing turned upside down).
    pub fn complemented(&self) -> ChainSpec {
        let max = self.k - 4;
        let w = self.w.iter().map(|&x| max - x).collect();
        ChainSpec { w, ..*self }
    }

    /// Class representative: the lexicographic minimum of the encoding, its
    /// reversal, its complement, and its reversed complement.
    pub fn canonicalize(&self) -> ChainSpec {
        let mut best = self.clone();
        for cand in [
            self.reversed(),
            self.complemented(),
            self.reversed().complemented(),
        ] {
            if cand.w < best.w {
                best = cand;
            }
        }
        best
    }

    /// Whether this encoding is its own class representative.
    pub fn is_canonical(&self) -> bool {
        *self == self.canonicalize()
    }

    /// The all-zero chain (every interior subdivision vertex on the bottom):
    /// the Kirchhoff-index minimizer for its `(k, h)`.
    pub fn helicene(k: u32, h: u32) -> Result<ChainSpec, ChainError> {
        let len = probe(k, h)?;
        ChainSpec::new(k, h, vec![0; len])
    }

    /// The straight chain (interior splits exactly even), defined for even
    /// `k` only: the Kirchhoff-index maximizer for even `k`.
    pub fn linear(k: u32, h: u32) -> Result<ChainSpec, ChainError> {
        let len = probe(k, h)?;
        if k % 2 != 0 {
            return Err(ChainError::Parity {
                family: "linear",
                requirement: "even",
                k,
            });
        }
        ChainSpec::new(k, h, vec![(k - 4) / 2; len])
    }

    /// The zigzag chain (interior splits alternating between the floor and
    /// the ceiling of `(k - 4) / 2`, starting at the floor, canonicalized),
    /// defined for odd `k` only: the Kirchhoff-index maximizer for odd `k`.
    pub fn zigzag(k: u32, h: u32) -> Result<ChainSpec, ChainError> {
        let len = probe(k, h)?;
        if k % 2 != 1 {
            return Err(ChainError::Parity {
                family: "zigzag",
                requirement: "odd",
                k,
            });
        }
        let lo = (k - 4) / 2;
        let hi = (k - 3) / 2;
        let w = (0..len).map(|i| if i % 2 == 0 { lo } else { hi }).collect();
        Ok(ChainSpec::new(k, h, w)?.canonicalize())
    }
}

/// Shared validation for the named-family constructors.
fn probe(k: u32, h: u32) -> Result<usize, ChainError> {
    if k < MIN_SIDES {
        return Err(ChainError::SidesTooSmall { k });
    }
    if h == 0 {
        return Err(ChainError::ZeroLength);
    }
    Ok(h.saturating_sub(2) as usize)
}

impl core::fmt::Display for ChainSpec {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}:{}:", self.k, self.h)?;
        for (i, x) in self.w.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl core::str::FromStr for ChainSpec {
    type Err = SpecParseError;

    /// Parses `k:h:w1,w2,...`. The weight part may be empty (`"6:2:"`) and
    /// the second colon may be omitted when there are no weights (`"6:2"`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let syntax = |position: usize, reason: &str| SpecParseError::Syntax {
            position,
            reason: String::from(reason),
        };
        let first = s.find(':').ok_or_else(|| syntax(s.len(), "expected ':' after k"))?;
        let k: u32 = s[..first]
            .parse()
            .map_err(|_| syntax(0, "k is not a number"))?;
        let rest = &s[first + 1..];
        let (h_part, w_part, w_offset) = match rest.find(':') {
            Some(second) => (
                &rest[..second],
                &rest[second + 1..],
                first + 1 + second + 1,
            ),
            None => (rest, "", s.len()),
        };
        let h: u32 = h_part
            .parse()
            .map_err(|_| syntax(first + 1, "h is not a number"))?;
        let mut w = Vec::new();
        if !w_part.is_empty() {
            let mut pos = w_offset;
            for item in w_part.split(',') {
                let value: u32 = item
                    .trim()
                    .parse()
                    .map_err(|_| syntax(pos, "weight is not a number"))?;
                w.push(value);
                pos += item.len() + 1;
            }
        }
        Ok(ChainSpec::new(k, h, w)?)
    }
}

/// The labeled realization of a [`ChainSpec`]: a concrete graph on
/// `h (k - 2) + 2` vertices with the numbering documented at module level.
///
/// Polygon positions are 1-based throughout (`1..=h`), matching the
/// encoding's `w[i]` indexing where interior polygon `i + 1` carries weight
/// `w[i]` (1-based `i`).
#[derive(Clone, Debug)]
pub struct LabeledChainGraph {
    spec: ChainSpec,
    n: usize,
    /// Sorted, `u < v`, duplicate-free.
    edges: Vec<(usize, usize)>,
    /// Per polygon: the top path from left corner to right corner inclusive.
    polygon_top: Vec<Vec<usize>>,
    /// Per polygon: the bottom path from left corner to right corner.
    polygon_bottom: Vec<Vec<usize>>,
    /// Per vertex: the 1-based polygon positions containing it.
    membership: Vec<Vec<usize>>,
}

impl LabeledChainGraph {
    /// Realizes the encoding. Infallible for a validated spec.
    pub fn build(spec: &ChainSpec) -> LabeledChainGraph {
        let k = spec.k as usize;
        let h = spec.h as usize;
        let et = spec.end_top() as usize;
        let top_count = |p: usize| -> usize {
            if p == 1 || p == h {
                et
            } else {
                spec.w[p - 2] as usize
            }
        };
        let bottom_count = |p: usize| -> usize { (k - 4) - top_count(p) };

        let n = spec.vertex_count();
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(spec.edge_count());
        let mut polygon_top: Vec<Vec<usize>> = Vec::with_capacity(h);
        let mut polygon_bottom: Vec<Vec<usize>> = Vec::with_capacity(h);

        // First polygon: top-left corner, top row, top-right corner,
        // bottom-left corner, bottom row, bottom-right corner.
        let ct = top_count(1);
        let cb = bottom_count(1);
        let t_left = 0;
        let mut top: Vec<usize> = Vec::with_capacity(ct + 2);
        top.push(t_left);
        top.extend(1..=ct);
        let t_right = ct + 1;
        top.push(t_right);
        let u_left = ct + 2;
        let mut bottom: Vec<usize> = Vec::with_capacity(cb + 2);
        bottom.push(u_left);
        bottom.extend(ct + 3..ct + 3 + cb);
        let u_right = ct + cb + 3;
        bottom.push(u_right);
        edges.push((t_left, u_left)); // left outer rung
        push_path(&mut edges, &top);
        push_path(&mut edges, &bottom);
        edges.push(ordered(t_right, u_right)); // shared rung (or right outer rung when h = 1)
        polygon_top.push(top);
        polygon_bottom.push(bottom);

        let mut prev_top = t_right;
        let mut prev_bottom = u_right;
        for p in 2..=h {
            let ct = top_count(p);
            let cb = bottom_count(p);
            let base = k + (p - 2) * (k - 2);
            let mut top: Vec<usize> = Vec::with_capacity(ct + 2);
            top.push(prev_top);
            top.extend(base..base + ct);
            let t_right = base + ct;
            top.push(t_right);
            let mut bottom: Vec<usize> = Vec::with_capacity(cb + 2);
            bottom.push(prev_bottom);
            bottom.extend(base + ct + 1..base + ct + 1 + cb);
            let u_right = base + ct + cb + 1;
            bottom.push(u_right);
            push_path(&mut edges, &top);
            push_path(&mut edges, &bottom);
            edges.push(ordered(t_right, u_right));
            polygon_top.push(top);
            polygon_bottom.push(bottom);
            prev_top = t_right;
            prev_bottom = u_right;
        }

        edges.sort_unstable();
        debug_assert_eq!(edges.len(), spec.edge_count());
        debug_assert!(edges.windows(2).all(|w| w[0] != w[1]));

        let mut membership = vec![Vec::new(); n];
        for p in 1..=h {
            for &v in polygon_top[p - 1].iter().chain(&polygon_bottom[p - 1]) {
                if membership[v].last() != Some(&p) {
                    membership[v].push(p);
                }
            }
        }

        LabeledChainGraph {
            spec: spec.clone(),
            n,
            edges,
            polygon_top,
            polygon_bottom,
            membership,
        }
    }

    pub fn spec(&self) -> &ChainSpec {
        &self.spec
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted edge list with `u < v` in every pair.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Number of polygons.
    pub fn polygon_count(&self) -> usize {
        self.polygon_top.len()
    }

    /// Top path of polygon `p` (1-based), left corner to right corner.
    pub fn top_path(&self, p: usize) -> &[usize] {
        &self.polygon_top[p - 1]
    }

    /// Bottom path of polygon `p` (1-based), left corner to right corner.
    pub fn bottom_path(&self, p: usize) -> &[usize] {
        &self.polygon_bottom[p - 1]
    }

    /// Top shared vertices `a_1..a_{h-1}` (each of degree 3).
    pub fn cut_top(&self) -> Vec<usize> {
        (1..self.polygon_count())
            .map(|p| *self.polygon_top[p - 1].last().unwrap())
            .collect()
    }

    /// Bottom shared vertices `b_1..b_{h-1}` (each of degree 3).
    pub fn cut_bottom(&self) -> Vec<usize> {
        (1..self.polygon_count())
            .map(|p| *self.polygon_bottom[p - 1].last().unwrap())
            .collect()
    }

    /// 1-based polygon positions containing vertex `v` (one position, or two
    /// for shared vertices).
    pub fn polygons_of(&self, v: usize) -> &[usize] {
        &self.membership[v]
    }

    /// Neighbor lists.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// The realization as a network with every resistance equal to one.
    pub fn unit_network(&self) -> Network<f64> {
        Network::unit_from_edges(self.n, &self.edges).expect("chain edges are valid")
    }

    /// Generic-weight unit network (e.g. exact rationals).
    pub fn unit_network_as<W: Weight>(&self) -> Network<W> {
        Network::unit_from_edges(self.n, &self.edges).expect("chain edges are valid")
    }

    /// Network with `weights[i]` as the resistance of `edges()[i]`.
    pub fn weighted_network<W: Weight>(&self, weights: &[W]) -> Result<Network<W>, crate::network::NetworkError> {
        assert_eq!(
            weights.len(),
            self.edges.len(),
            "one weight per edge, in edges() order"
        );
        Network::with_edges(
            self.n,
            self.edges
                .iter()
                .zip(weights)
                .map(|(&(u, v), w)| (u, v, w.clone())),
        )
    }

    /// The default reduction source: the top-side neighbor of the first
    /// shared vertex `a_1` inside polygon 1. Defined for `h >= 2`.
    pub fn default_source(&self) -> Option<usize> {
        if self.polygon_count() < 2 {
            return None;
        }
        let top = &self.polygon_top[0];
        Some(top[top.len() - 2])
    }

    /// Vertices of the last polygon from `a_{h-1}` around to `b_{h-1}`,
    /// avoiding the shared edge: top path of polygon `h`, the right outer
    /// rung, then the bottom path reversed. `k` vertices, `k - 1` edges.
    /// Defined for `h >= 2`.
    pub fn last_polygon_arc(&self) -> Option<Vec<usize>> {
        let h = self.polygon_count();
        if h < 2 {
            return None;
        }
        let mut arc = self.polygon_top[h - 1].clone();
        arc.extend(self.polygon_bottom[h - 1].iter().rev());
        Some(arc)
    }
}

fn push_path(edges: &mut Vec<(usize, usize)>, path: &[usize]) {
    for pair in path.windows(2) {
        edges.push(ordered(pair[0], pair[1]));
    }
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn spec(k: u32, h: u32, w: &[u32]) -> ChainSpec {
        ChainSpec::new(k, h, w.to_vec()).unwrap()
    }

    #[test]
    fn validation_rejects_bad_specs() {
        assert_eq!(
            ChainSpec::new(4, 3, vec![0]),
            Err(ChainError::SidesTooSmall { k: 4 })
        );
        assert_eq!(ChainSpec::new(6, 0, vec![]), Err(ChainError::ZeroLength));
        assert_eq!(
            ChainSpec::new(6, 5, vec![1, 1]),
            Err(ChainError::WeightLengthMismatch { expected: 3, got: 2 })
        );
        assert_eq!(
            ChainSpec::new(6, 5, vec![9, 0, 0]),
            Err(ChainError::WeightOutOfRange { index: 0, value: 9, max: 2 })
        );
    }

    #[test]
    fn single_pentagon_is_a_five_cycle() {
        let g = LabeledChainGraph::build(&spec(5, 1, &[]));
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 5);
        for v in 0..5 {
            assert_eq!(g.degree(v), 2);
        }
    }

    #[test]
    fn two_hexagons_counts_and_shared_vertices() {
        let g = LabeledChainGraph::build(&spec(6, 2, &[]));
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 11);
        let threes: Vec<usize> = (0..10).filter(|&v| g.degree(v) == 3).collect();
        assert_eq!(threes.len(), 2);
        assert_eq!(g.cut_top(), vec![threes[0]]);
        assert_eq!(g.cut_bottom(), vec![threes[1]]);
    }

    #[test]
    fn interior_paths_follow_the_weights() {
        // k = 7, h = 4, w = (1, 2): interior polygon 2 has w[0] + 1 = 2 top
        // edges and k - 3 - w[0] = 3 bottom edges; polygon 3 has 3 and 2.
        let g = LabeledChainGraph::build(&spec(7, 4, &[1, 2]));
        assert_eq!(g.vertex_count(), 22);
        assert_eq!(g.edge_count(), 25);
        assert_eq!(g.top_path(2).len() - 1, 2);
        assert_eq!(g.bottom_path(2).len() - 1, 3);
        assert_eq!(g.top_path(3).len() - 1, 3);
        assert_eq!(g.bottom_path(3).len() - 1, 2);
    }

    #[test]
    fn shared_vertices_have_degree_three() {
        for (k, h, w) in [(5u32, 4u32, vec![1, 0]), (6, 3, vec![2]), (8, 5, vec![0, 4, 2])] {
            let g = LabeledChainGraph::build(&ChainSpec::new(k, h, w).unwrap());
            let mut shared = g.cut_top();
            shared.extend(g.cut_bottom());
            assert_eq!(shared.len(), 2 * (h as usize - 1));
            for v in 0..g.vertex_count() {
                let expected = if shared.contains(&v) { 3 } else { 2 };
                assert_eq!(g.degree(v), expected, "vertex {v}");
            }
            for &s in &shared {
                assert_eq!(g.polygons_of(s).len(), 2);
            }
        }
    }

    #[test]
    fn canonicalize_picks_the_lexicographic_minimum_variant() {
        assert_eq!(spec(6, 5, &[2, 0, 1]).canonicalize(), spec(6, 5, &[0, 2, 1]));
        assert_eq!(spec(5, 5, &[1, 1, 1]).canonicalize(), spec(5, 5, &[0, 0, 0]));
        assert_eq!(spec(7, 2, &[]).canonicalize(), spec(7, 2, &[]));
    }

    #[test]
    fn named_families() {
        assert_eq!(ChainSpec::helicene(6, 5).unwrap(), spec(6, 5, &[0, 0, 0]));
        assert_eq!(ChainSpec::linear(6, 5).unwrap(), spec(6, 5, &[1, 1, 1]));
        assert_eq!(ChainSpec::zigzag(7, 6).unwrap(), spec(7, 6, &[1, 2, 1, 2]));
        assert_eq!(ChainSpec::zigzag(5, 4).unwrap(), spec(5, 4, &[0, 1]));
        assert!(matches!(
            ChainSpec::linear(7, 5),
            Err(ChainError::Parity { family: "linear", .. })
        ));
        assert!(matches!(
            ChainSpec::zigzag(6, 5),
            Err(ChainError::Parity { family: "zigzag", .. })
        ));
    }

    #[test]
    fn text_form_examples() {
        let s: ChainSpec = "6:5:1,1,1".parse().unwrap();
        assert_eq!(s, spec(6, 5, &[1, 1, 1]));
        assert_eq!(s.to_string(), "6:5:1,1,1");

        let s: ChainSpec = "5:2:".parse().unwrap();
        assert_eq!(s, spec(5, 2, &[]));
        assert_eq!(s.to_string(), "5:2:");

        let s: ChainSpec = "5:1".parse().unwrap();
        assert_eq!(s.h(), 1);

        assert!(matches!(
            "6:5:9,0,0".parse::<ChainSpec>(),
            Err(SpecParseError::Invalid(ChainError::WeightOutOfRange { .. }))
        ));
        assert!(matches!(
            "6".parse::<ChainSpec>(),
            Err(SpecParseError::Syntax { .. })
        ));
        assert!(matches!(
            "a:2:".parse::<ChainSpec>(),
            Err(SpecParseError::Syntax { position: 0, .. })
        ));
        assert!(matches!(
            "6:5:1,x,1".parse::<ChainSpec>(),
            Err(SpecParseError::Syntax { .. })
        ));
    }

    #[test]
    fn default_source_is_top_neighbor_of_first_shared_vertex() {
        let g = LabeledChainGraph::build(&spec(6, 2, &[]));
        let z = g.default_source().unwrap();
        let a1 = g.cut_top()[0];
        assert!(g.adjacency()[z].contains(&a1));
        assert_eq!(g.degree(z), 2);
        assert_eq!(g.polygons_of(z), &[1]);

        let g1 = LabeledChainGraph::build(&spec(6, 1, &[]));
        assert!(g1.default_source().is_none());
    }

    #[test]
    fn last_polygon_arc_walks_the_end_cycle() {
        let g = LabeledChainGraph::build(&spec(6, 3, &[2]));
        let arc = g.last_polygon_arc().unwrap();
        assert_eq!(arc.len(), 6);
        assert_eq!(arc[0], g.cut_top()[1]);
        assert_eq!(*arc.last().unwrap(), g.cut_bottom()[1]);
        let adj = g.adjacency();
        for pair in arc.windows(2) {
            assert!(adj[pair[0]].contains(&pair[1]));
        }
    }

    proptest! {
        #[test]
        fn vertex_and_edge_counts_match_the_formulas(
            k in 5u32..=9,
            h in 1u32..=6,
            seed in any::<u64>(),
        ) {
            let len = h.saturating_sub(2) as usize;
            let w: Vec<u32> = (0..len)
                .map(|i| (seed >> (i * 8)) as u32 % (k - 3))
                .collect();
            let s = ChainSpec::new(k, h, w).unwrap();
            let g = LabeledChainGraph::build(&s);
            prop_assert_eq!(g.vertex_count(), (h * (k - 2) + 2) as usize);
            prop_assert_eq!(g.edge_count(), (h * (k - 1) + 1) as usize);
            // Degrees: 2(h-1) vertices of degree 3, the rest degree 2.
            let threes = (0..g.vertex_count()).filter(|&v| g.degree(v) == 3).count();
            prop_assert_eq!(threes, 2 * (h as usize - 1));
        }

        #[test]
        fn canonicalize_is_idempotent_and_orbit_minimal(
            k in 5u32..=9,
            h in 3u32..=7,
            seed in any::<u64>(),
        ) {
            let len = (h - 2) as usize;
            let w: Vec<u32> = (0..len)
                .map(|i| (seed >> (i * 8)) as u32 % (k - 3))
                .collect();
            let s = ChainSpec::new(k, h, w).unwrap();
            let c = s.canonicalize();
            prop_assert_eq!(c.canonicalize(), c.clone());
            // The canonical form is invariant across the whole orbit.
            prop_assert_eq!(s.reversed().canonicalize(), c.clone());
            prop_assert_eq!(s.complemented().canonicalize(), c.clone());
            prop_assert_eq!(s.reversed().complemented().canonicalize(), c.clone());
            // And it is never lexicographically above the original.
            prop_assert!(c.w() <= s.w());
        }

        #[test]
        fn text_form_roundtrips(
            k in 5u32..=9,
            h in 1u32..=7,
            seed in any::<u64>(),
        ) {
            let len = h.saturating_sub(2) as usize;
            let w: Vec<u32> = (0..len)
                .map(|i| (seed >> (i * 8)) as u32 % (k - 3))
                .collect();
            let s = ChainSpec::new(k, h, w).unwrap();
            let text = s.to_string();
            let back: ChainSpec = text.parse().unwrap();
            prop_assert_eq!(back, s);
        }
    }
}
