//! Positive-weighted multigraphs used as electrical networks.
//!
//! Weights are edge resistances. The type is generic over the scalar so the
//! same rewriting code runs in binary64 (fast, toleranced) and in exact
//! rationals (slow, tolerance-free); see [`Weight`].

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Scalar admissible as an edge resistance.
///
/// Implemented for `f64` and for [`BigRational`]. The operations are the
/// field operations a series/parallel/Δ-Y rewrite needs, plus construction
/// from small counts (path lengths, polygon sizes).
pub trait Weight:
    Clone
    + PartialEq
    + PartialOrd
    + core::fmt::Debug
    + core::ops::Add<Output = Self>
    + core::ops::Sub<Output = Self>
    + core::ops::Mul<Output = Self>
    + core::ops::Div<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    /// Embedding of a small nonnegative integer.
    fn from_count(n: u64) -> Self;
    /// Strictly positive (NaN is not).
    fn is_positive(&self) -> bool;
}

impl Weight for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_count(n: u64) -> Self {
        n as f64
    }
    fn is_positive(&self) -> bool {
        *self > 0.0
    }
}

impl Weight for BigRational {
    fn zero() -> Self {
        BigRational::from_integer(BigInt::from(0))
    }
    fn one() -> Self {
        BigRational::from_integer(BigInt::from(1))
    }
    fn from_count(n: u64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn is_positive(&self) -> bool {
        *self > Self::zero()
    }
}

/// One undirected edge carrying a resistance.
#[derive(Clone, Debug, PartialEq)]
pub struct Edge<W> {
    pub u: usize,
    pub v: usize,
    pub weight: W,
}

/// Errors from network construction and editing.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NetworkError {
    #[error("vertex {vertex} out of range for network on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex} is not allowed")]
    SelfLoop { vertex: usize },
    #[error("edge weight must be strictly positive")]
    NonPositiveWeight,
    #[error("no edge between {u} and {v}")]
    NoSuchEdge { u: usize, v: usize },
}

/// An undirected multigraph on vertices `0..n` with positive edge weights
/// (resistances). Parallel edges are allowed; self-loops are not. Removing
/// edges may leave isolated vertices — extract a component with
/// [`Network::induced`] before solving if needed.
#[derive(Clone, Debug, PartialEq)]
pub struct Network<W> {
    n: usize,
    edges: Vec<Edge<W>>,
}

/// The binary64 instantiation used by the Laplacian engine.
pub type WeightedNetwork = Network<f64>;

impl<W: Weight> Network<W> {
    /// An edgeless network on `n` vertices.
    pub fn new(n: usize) -> Self {
        Network {
            n,
            edges: Vec::new(),
        }
    }

    /// Builds a network from `(u, v, weight)` triples.
    pub fn with_edges<I>(n: usize, edges: I) -> Result<Self, NetworkError>
    where
        I: IntoIterator<Item = (usize, usize, W)>,
    {
        let mut net = Network::new(n);
        for (u, v, w) in edges {
            net.add_edge(u, v, w)?;
        }
        Ok(net)
    }

    /// Builds a unit-resistance network from an edge list.
    pub fn unit_from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, NetworkError> {
        Self::with_edges(n, edges.iter().map(|&(u, v)| (u, v, W::one())))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge<W>] {
        &self.edges
    }

    pub fn add_edge(&mut self, u: usize, v: usize, weight: W) -> Result<(), NetworkError> {
        if u >= self.n {
            return Err(NetworkError::VertexOutOfRange { vertex: u, n: self.n });
        }
        if v >= self.n {
            return Err(NetworkError::VertexOutOfRange { vertex: v, n: self.n });
        }
        if u == v {
            return Err(NetworkError::SelfLoop { vertex: u });
        }
        if !weight.is_positive() {
            return Err(NetworkError::NonPositiveWeight);
        }
        self.edges.push(Edge { u, v, weight });
        Ok(())
    }

    /// Appends a fresh isolated vertex and returns its index.
    pub fn add_vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    /// Indices into `edges()` of every edge joining `u` and `v`.
    pub fn edge_indices_between(&self, u: usize, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| (e.u == u && e.v == v) || (e.u == v && e.v == u))
            .map(|(i, _)| i)
            .collect()
    }

    /// Removes the first edge joining `u` and `v` and returns its weight.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<W, NetworkError> {
        match self.edge_indices_between(u, v).first() {
            Some(&i) => Ok(self.edges.remove(i).weight),
            None => Err(NetworkError::NoSuchEdge { u, v }),
        }
    }

    pub fn remove_edge_at(&mut self, index: usize) -> Edge<W> {
        self.edges.remove(index)
    }

    /// Structural degree (parallel edges counted with multiplicity).
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|e| e.u == v || e.v == v)
            .count()
    }

    /// Neighbor lists; parallel edges produce repeated entries.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in &self.edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        adj
    }

    /// Whether every vertex is reachable from vertex 0 (vacuously true for
    /// n <= 1). Isolated vertices make this false.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let comp = self.component_of(0);
        comp.len() == self.n
    }

    /// Sorted vertex set of the connected component containing `start`.
    pub fn component_of(&self, start: usize) -> Vec<usize> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        (0..self.n).filter(|&v| seen[v]).collect()
    }

    /// The subnetwork induced by `vertices` (which must be sorted and
    /// duplicate-free), relabeled `0..vertices.len()` in the given order.
    /// Edges with exactly one endpoint inside are dropped.
    pub fn induced(&self, vertices: &[usize]) -> (Network<W>, BTreeMap<usize, usize>) {
        let map: BTreeMap<usize, usize> = vertices
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        let mut net = Network::new(vertices.len());
        for e in &self.edges {
            if let (Some(&u), Some(&v)) = (map.get(&e.u), map.get(&e.v)) {
                net.edges.push(Edge {
                    u,
                    v,
                    weight: e.weight.clone(),
                });
            }
        }
        (net, map)
    }

    /// Total weight between `u` and `v` combined as parallel resistors
    /// (reciprocal of the summed reciprocals), if any edge joins them.
    pub fn parallel_weight_between(&self, u: usize, v: usize) -> Option<W> {
        let idx = self.edge_indices_between(u, v);
        if idx.is_empty() {
            return None;
        }
        let mut recip_sum = W::zero();
        for i in idx {
            recip_sum = recip_sum + W::one() / self.edges[i].weight.clone();
        }
        Some(W::one() / recip_sum)
    }
}
