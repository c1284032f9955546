//! Effective resistance via the grounded weighted Laplacian.
//!
//! For a connected network with positive edge resistances, build the
//! weighted Laplacian `L` (conductances = reciprocal resistances), ground
//! one vertex by deleting its row and column, and factor the remaining
//! symmetric positive-definite matrix once with a square-root-free LDL^T
//! decomposition. Every pairwise effective resistance is then a cheap
//! solve (or a lookup once the full inverse has been assembled), so the
//! Kirchhoff index costs one factorization, not one solve per pair.
//!
//! Everything here is dense binary64 — sized for networks up to a few
//! hundred vertices, which covers desk-scale chains comfortably.

use alloc::vec;
use alloc::vec::Vec;

use crate::network::{Network, Weight};

/// Errors from the Laplacian engine.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ResistanceError {
    #[error("vertex {vertex} out of range for network on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("network is not connected")]
    Disconnected,
    #[error("network has no vertices")]
    Empty,
    #[error("factorization failed: pivot {pivot} at index {index} below tolerance")]
    Numerical { index: usize, pivot: f64 },
}

/// Relative pivot floor for the LDL^T factorization. Grounded Laplacians of
/// connected positive-weight networks stay orders of magnitude above this;
/// hitting it signals a malformed system rather than roundoff.
const PIVOT_FLOOR: f64 = 1e-13;

/// One reusable factorization of a network's grounded Laplacian. The last
/// vertex (`n - 1`) is grounded, so reduced indices coincide with vertex
/// ids `0..n-1`. Immutable after construction and freely shareable.
#[derive(Clone, Debug)]
pub struct ResistanceSolver {
    n: usize,
    /// Strict lower triangle of L (unit diagonal implicit), row-major.
    lower: Vec<f64>,
    /// Diagonal of D.
    diag: Vec<f64>,
}

impl ResistanceSolver {
    pub fn new(net: &Network<f64>) -> Result<Self, ResistanceError> {
        let n = net.vertex_count();
        if n == 0 {
            return Err(ResistanceError::Empty);
        }
        if !net.is_connected() {
            return Err(ResistanceError::Disconnected);
        }
        let m = n - 1;
        // Dense grounded Laplacian (vertex n-1 removed).
        let mut a = vec![0.0f64; m * m];
        for e in net.edges() {
            let c = 1.0 / e.weight;
            let (u, v) = (e.u, e.v);
            if u < m {
                a[u * m + u] += c;
            }
            if v < m {
                a[v * m + v] += c;
            }
            if u < m && v < m {
                a[u * m + v] -= c;
                a[v * m + u] -= c;
            }
        }
        let scale = (0..m)
            .map(|i| a[i * m + i])
            .fold(1.0f64, |acc, x| if x > acc { x } else { acc });
        // Square-root-free LDL^T, no pivoting (the matrix is SPD and
        // diagonally dominant).
        let mut lower = vec![0.0f64; m * m];
        let mut diag = vec![0.0f64; m];
        for j in 0..m {
            let mut d = a[j * m + j];
            for s in 0..j {
                d -= lower[j * m + s] * lower[j * m + s] * diag[s];
            }
            // Negated on purpose: a NaN pivot must also take the error arm.
            #[allow(clippy::neg_cmp_op_on_partial_ord)]
            if !(d > scale * PIVOT_FLOOR) {
                return Err(ResistanceError::Numerical { index: j, pivot: d });
            }
            diag[j] = d;
            for i in j + 1..m {
                let mut x = a[i * m + j];
                for s in 0..j {
                    x -= lower[i * m + s] * lower[j * m + s] * diag[s];
                }
                lower[i * m + j] = x / d;
            }
        }
        Ok(ResistanceSolver { n, lower, diag })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Solves the grounded system for an arbitrary right-hand side of
    /// length `n - 1` (in place).
    #[allow(clippy::needless_range_loop)] // triangular access patterns read best indexed
    fn solve_in_place(&self, b: &mut [f64]) {
        let m = self.n - 1;
        debug_assert_eq!(b.len(), m);
        for i in 0..m {
            let mut x = b[i];
            for s in 0..i {
                x -= self.lower[i * m + s] * b[s];
            }
            b[i] = x;
        }
        for i in 0..m {
            b[i] /= self.diag[i];
        }
        for i in (0..m).rev() {
            let mut x = b[i];
            for s in i + 1..m {
                x -= self.lower[s * m + i] * b[s];
            }
            b[i] = x;
        }
    }

    /// Effective resistance between two vertices: one solve with the
    /// current injected at `u` and extracted at `v`.
    pub fn effective_resistance(&self, u: usize, v: usize) -> Result<f64, ResistanceError> {
        let n = self.n;
        for &vertex in &[u, v] {
            if vertex >= n {
                return Err(ResistanceError::VertexOutOfRange { vertex, n });
            }
        }
        if u == v {
            return Ok(0.0);
        }
        let m = n - 1;
        let mut b = vec![0.0f64; m];
        if u < m {
            b[u] += 1.0;
        }
        if v < m {
            b[v] -= 1.0;
        }
        self.solve_in_place(&mut b);
        let phi = |w: usize| if w < m { b[w] } else { 0.0 };
        Ok(phi(u) - phi(v))
    }

    /// Assembles the full symmetric matrix of pairwise effective
    /// resistances by solving one system per non-grounded vertex.
    pub fn resistance_matrix(&self) -> ResistanceResult {
        let n = self.n;
        let m = n - 1;
        // inv[i][j] = (L')^{-1} e_j, column by column.
        let mut inv = vec![0.0f64; m * m];
        for j in 0..m {
            let col: Vec<f64> = {
                let mut b = vec![0.0f64; m];
                b[j] = 1.0;
                self.solve_in_place(&mut b);
                b
            };
            for i in 0..m {
                inv[i * m + j] = col[i];
            }
        }
        let entry = |i: usize, j: usize| -> f64 {
            if i < m && j < m {
                inv[i * m + j]
            } else {
                0.0
            }
        };
        let mut omega = vec![0.0f64; n * n];
        for u in 0..n {
            for v in u + 1..n {
                // Average the two off-diagonal entries so the stored matrix
                // is exactly symmetric.
                let cross = 0.5 * (entry(u, v) + entry(v, u));
                let value = entry(u, u) + entry(v, v) - 2.0 * cross;
                omega[u * n + v] = value;
                omega[v * n + u] = value;
            }
        }
        ResistanceResult { n, omega }
    }
}

/// The full table of pairwise effective resistances of one network.
#[derive(Clone, Debug)]
pub struct ResistanceResult {
    n: usize,
    /// Row-major `n x n`, symmetric, zero diagonal.
    omega: Vec<f64>,
}

impl ResistanceResult {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Effective resistance between `u` and `v`.
    pub fn omega(&self, u: usize, v: usize) -> f64 {
        self.omega[u * self.n + v]
    }

    /// Sum of effective resistances over all unordered pairs.
    pub fn kirchhoff_index(&self) -> f64 {
        let mut sum = 0.0;
        for u in 0..self.n {
            for v in u + 1..self.n {
                sum += self.omega[u * self.n + v];
            }
        }
        sum
    }

    /// Sum of effective resistances from `u` to every other vertex.
    pub fn vertex_sum(&self, u: usize) -> f64 {
        (0..self.n).map(|v| self.omega[u * self.n + v]).sum()
    }

    /// All unordered pairs with their resistances.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n).map(move |v| (u, v, self.omega(u, v)))
        })
    }
}

/// Effective resistance between `u` and `v` (one factorization, one solve).
pub fn effective_resistance(net: &Network<f64>, u: usize, v: usize) -> Result<f64, ResistanceError> {
    ResistanceSolver::new(net)?.effective_resistance(u, v)
}

/// The full resistance table of a network.
pub fn resistance_matrix(net: &Network<f64>) -> Result<ResistanceResult, ResistanceError> {
    Ok(ResistanceSolver::new(net)?.resistance_matrix())
}

/// Kirchhoff index: the sum of effective resistances over all unordered
/// vertex pairs.
pub fn kirchhoff_index(net: &Network<f64>) -> Result<f64, ResistanceError> {
    Ok(resistance_matrix(net)?.kirchhoff_index())
}

/// Sum of effective resistances from `u` to every other vertex.
pub fn vertex_resistance_sum(net: &Network<f64>, u: usize) -> Result<f64, ResistanceError> {
    let n = net.vertex_count();
    if u >= n {
        return Err(ResistanceError::VertexOutOfRange { vertex: u, n });
    }
    Ok(resistance_matrix(net)?.vertex_sum(u))
}

/// Wiener index: the sum of hop distances over all unordered vertex pairs.
/// Weights are ignored; parallel edges collapse. Works for any [`Weight`].
pub fn wiener_index<W: Weight>(net: &Network<W>) -> Result<u64, ResistanceError> {
    let n = net.vertex_count();
    if n == 0 {
        return Err(ResistanceError::Empty);
    }
    let adj = net.adjacency();
    let mut total: u64 = 0;
    let mut dist = vec![usize::MAX; n];
    let mut queue = alloc::collections::VecDeque::new();
    for source in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[source] = 0;
        queue.clear();
        queue.push_back(source);
        let mut reached = 1usize;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        if reached < n {
            return Err(ResistanceError::Disconnected);
        }
        total += dist
            .iter()
            .skip(source + 1)
            .map(|&d| d as u64)
            .sum::<u64>();
    }
    Ok(total)
}

/// Unit-resistance cycle on `n` vertices — handy oracle input.
pub fn unit_cycle(n: usize) -> Network<f64> {
    Network::unit_from_edges(
        n,
        &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>(),
    )
    .expect("cycle edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{ChainSpec, LabeledChainGraph};
    use crate::network::WeightedNetwork;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    /// Independent closed form for cycles: resistance between vertices at
    /// hop distance d is d(n-d)/n, so the Kirchhoff index is
    /// (1/2) * sum over d of d(n-d) = (n^3 - n)/12.
    fn cycle_kf_by_distance_formula(n: usize) -> f64 {
        let nf = n as f64;
        let mut per_vertex = 0.0;
        for d in 1..n {
            let df = d as f64;
            per_vertex += df * (nf - df) / nf;
        }
        per_vertex * nf / 2.0
    }

    #[test]
    fn single_edge_has_unit_resistance() {
        let net = WeightedNetwork::unit_from_edges(2, &[(0, 1)]).unwrap();
        assert_abs_diff_eq!(effective_resistance(&net, 0, 1).unwrap(), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(kirchhoff_index(&net).unwrap(), 1.0, epsilon = 1e-12);
        assert_eq!(wiener_index(&net).unwrap(), 1);
    }

    #[test]
    fn four_cycle_adjacent_and_opposite() {
        let net = unit_cycle(4);
        // Adjacent: 1 Ohm parallel to 3 in series = 3/4. Opposite: 2 || 2 = 1.
        assert_abs_diff_eq!(effective_resistance(&net, 0, 1).unwrap(), 0.75, epsilon = 1e-12);
        assert_abs_diff_eq!(effective_resistance(&net, 0, 2).unwrap(), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(vertex_resistance_sum(&net, 0).unwrap(), 2.5, epsilon = 1e-12);
    }

    #[test]
    fn path_on_three_vertices() {
        let net = WeightedNetwork::unit_from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_abs_diff_eq!(kirchhoff_index(&net).unwrap(), 4.0, epsilon = 1e-12);
        assert_eq!(wiener_index(&net).unwrap(), 4);
        assert_abs_diff_eq!(vertex_resistance_sum(&net, 1).unwrap(), 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(vertex_resistance_sum(&net, 2).unwrap(), 3.0, epsilon = 1e-12);
    }

    #[test]
    fn cycles_match_the_distance_formula() {
        for n in 3..=12 {
            let net = unit_cycle(n);
            let kf = kirchhoff_index(&net).unwrap();
            assert_abs_diff_eq!(kf, cycle_kf_by_distance_formula(n), epsilon = 1e-9);
            // Same number in closed form.
            let nf = n as f64;
            assert_abs_diff_eq!(kf, (nf * nf * nf - nf) / 12.0, epsilon = 1e-9);
        }
    }

    #[test]
    fn five_cycle_frozen_values() {
        let net = unit_cycle(5);
        assert_abs_diff_eq!(kirchhoff_index(&net).unwrap(), 10.0, epsilon = 1e-9);
        assert_eq!(wiener_index(&net).unwrap(), 15);
    }

    #[test]
    fn weighted_edges_respect_resistances() {
        // Two resistors in series: 2 + 3 = 5; in parallel: 6/5.
        let series = WeightedNetwork::with_edges(3, [(0, 1, 2.0), (1, 2, 3.0)]).unwrap();
        assert_abs_diff_eq!(effective_resistance(&series, 0, 2).unwrap(), 5.0, epsilon = 1e-12);
        let parallel = WeightedNetwork::with_edges(2, [(0, 1, 2.0), (0, 1, 3.0)]).unwrap();
        assert_abs_diff_eq!(effective_resistance(&parallel, 0, 1).unwrap(), 1.2, epsilon = 1e-12);
    }

    #[test]
    fn disconnected_and_out_of_range_are_errors() {
        let net = WeightedNetwork::unit_from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(kirchhoff_index(&net).unwrap_err(), ResistanceError::Disconnected);
        assert_eq!(wiener_index(&net).unwrap_err(), ResistanceError::Disconnected);
        let ok = WeightedNetwork::unit_from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(
            effective_resistance(&ok, 0, 5).unwrap_err(),
            ResistanceError::VertexOutOfRange { vertex: 5, n: 2 }
        );
    }

    #[test]
    fn cut_vertex_additivity() {
        // Two 4-cycles joined through a path 3 - 8 - 4: vertex 8 separates
        // them, so resistances add across it.
        let mut edges: Vec<(usize, usize)> = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
        edges.extend([(4, 5), (5, 6), (6, 7), (7, 4)]);
        edges.extend([(3, 8), (8, 4)]);
        let net = WeightedNetwork::unit_from_edges(9, &edges).unwrap();
        let r = resistance_matrix(&net).unwrap();
        for u in 0..4 {
            for v in 4..8 {
                assert_abs_diff_eq!(
                    r.omega(u, v),
                    r.omega(u, 8) + r.omega(8, v),
                    epsilon = 1e-10
                );
            }
        }
    }

    #[test]
    fn matrix_agrees_with_single_solves() {
        let g = LabeledChainGraph::build(&ChainSpec::new(6, 3, vec![1]).unwrap());
        let net = g.unit_network();
        let solver = ResistanceSolver::new(&net).unwrap();
        let table = solver.resistance_matrix();
        for u in 0..net.vertex_count() {
            for v in u + 1..net.vertex_count() {
                assert_abs_diff_eq!(
                    table.omega(u, v),
                    solver.effective_resistance(u, v).unwrap(),
                    epsilon = 1e-10
                );
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        /// Sum of resistances over the edges equals n - 1 on any connected
        /// network (here: random chains, unit and weighted).
        #[test]
        fn foster_identity_on_random_chains(
            k in 5u32..=8,
            h in 1u32..=5,
            seed in any::<u64>(),
            weighted in any::<bool>(),
        ) {
            let len = h.saturating_sub(2) as usize;
            let w: Vec<u32> = (0..len)
                .map(|i| (seed >> (i * 8)) as u32 % (k - 3))
                .collect();
            let g = LabeledChainGraph::build(&ChainSpec::new(k, h, w).unwrap());
            let net = if weighted {
                let mut state = seed | 1;
                let weights: Vec<f64> = (0..g.edge_count())
                    .map(|_| {
                        // xorshift into (0.1, 10)
                        state ^= state << 13;
                        state ^= state >> 7;
                        state ^= state << 17;
                        0.1 + (state % 9_900) as f64 / 1_000.0
                    })
                    .collect();
                g.weighted_network(&weights).unwrap()
            } else {
                g.unit_network()
            };
            let r = resistance_matrix(&net).unwrap();
            let edge_sum: f64 = net
                .edges()
                .iter()
                .map(|e| r.omega(e.u, e.v) / e.weight)
                .sum();
            prop_assert!((edge_sum - (net.vertex_count() as f64 - 1.0)).abs() < 1e-8);
        }

        /// Resistance is a metric: symmetric, nonnegative, zero exactly on
        /// the diagonal, and triangle-inequality within tolerance.
        #[test]
        fn metric_axioms_on_random_chains(
            k in 5u32..=8,
            h in 1u32..=4,
            seed in any::<u64>(),
        ) {
            let len = h.saturating_sub(2) as usize;
            let w: Vec<u32> = (0..len)
                .map(|i| (seed >> (i * 8)) as u32 % (k - 3))
                .collect();
            let g = LabeledChainGraph::build(&ChainSpec::new(k, h, w).unwrap());
            let net = g.unit_network();
            let r = resistance_matrix(&net).unwrap();
            let n = net.vertex_count();
            for u in 0..n {
                prop_assert_eq!(r.omega(u, u), 0.0);
                for v in 0..n {
                    prop_assert_eq!(r.omega(u, v), r.omega(v, u));
                    if u != v {
                        prop_assert!(r.omega(u, v) > 1e-9);
                    }
                    for x in 0..n {
                        prop_assert!(r.omega(u, v) <= r.omega(u, x) + r.omega(x, v) + 1e-9);
                    }
                }
            }
        }
    }
}
