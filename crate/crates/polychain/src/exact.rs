//! Tolerance-free resistances over exact rationals.
//!
//! The escalation path when binary64 margins are too thin to decide an
//! order or a tie: the grounded Laplacian is inverted by Gauss-Jordan
//! elimination over [`BigRational`], so every pairwise resistance — and the
//! Kirchhoff index — is an exact fraction. Orders of magnitude slower than
//! the binary64 engine in [`crate::resistance`]; intended for desk-scale
//! networks and occasional re-decisions, not bulk search.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::chain::{ChainSpec, LabeledChainGraph};
use crate::network::Network;
use crate::resistance::ResistanceError;

fn rational_zero() -> BigRational {
    BigRational::from_integer(BigInt::from(0))
}

/// Full table of pairwise effective resistances, exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactResistances {
    n: usize,
    omega: Vec<BigRational>,
}

impl ExactResistances {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Effective resistance between `u` and `v`.
    pub fn omega(&self, u: usize, v: usize) -> &BigRational {
        &self.omega[u * self.n + v]
    }

    /// Sum over all unordered pairs.
    pub fn kirchhoff_index(&self) -> BigRational {
        let mut sum = rational_zero();
        for u in 0..self.n {
            for v in u + 1..self.n {
                sum += &self.omega[u * self.n + v];
            }
        }
        sum
    }

    /// Sum of resistances from `u` to every other vertex.
    pub fn vertex_sum(&self, u: usize) -> BigRational {
        let mut sum = rational_zero();
        for v in 0..self.n {
            sum += &self.omega[u * self.n + v];
        }
        sum
    }
}

/// Exact pairwise resistances of a connected rational-weighted network.
pub fn resistance_matrix_exact(
    net: &Network<BigRational>,
) -> Result<ExactResistances, ResistanceError> {
    let n = net.vertex_count();
    if n == 0 {
        return Err(ResistanceError::Empty);
    }
    if !net.is_connected() {
        return Err(ResistanceError::Disconnected);
    }
    let m = n - 1;
    // Grounded Laplacian with conductances 1/r.
    let mut a = vec![rational_zero(); m * m];
    for e in net.edges() {
        let c = BigRational::from_integer(BigInt::from(1)) / e.weight.clone();
        if e.u < m {
            a[e.u * m + e.u] += &c;
        }
        if e.v < m {
            a[e.v * m + e.v] += &c;
        }
        if e.u < m && e.v < m {
            a[e.u * m + e.v] -= &c;
            a[e.v * m + e.u] -= &c;
        }
    }
    // Gauss-Jordan with the largest-magnitude pivot in the column (exact,
    // so any nonzero pivot works; picking the largest keeps numerators
    // smaller in practice).
    let mut inv = vec![rational_zero(); m * m];
    for i in 0..m {
        inv[i * m + i] = BigRational::from_integer(BigInt::from(1));
    }
    for col in 0..m {
        let pivot_row = (col..m)
            .filter(|&r| !a[r * m + col].is_zero())
            .max_by(|&r1, &r2| {
                a[r1 * m + col]
                    .abs()
                    .cmp(&a[r2 * m + col].abs())
            });
        let pivot_row = match pivot_row {
            Some(r) => r,
            None => {
                return Err(ResistanceError::Numerical {
                    index: col,
                    pivot: 0.0,
                })
            }
        };
        if pivot_row != col {
            for j in 0..m {
                a.swap(col * m + j, pivot_row * m + j);
                inv.swap(col * m + j, pivot_row * m + j);
            }
        }
        let pivot = a[col * m + col].clone();
        for j in 0..m {
            a[col * m + j] /= &pivot;
            inv[col * m + j] /= &pivot;
        }
        for row in 0..m {
            if row == col || a[row * m + col].is_zero() {
                continue;
            }
            let factor = a[row * m + col].clone();
            for j in 0..m {
                let aj = &a[col * m + j] * &factor;
                a[row * m + j] -= aj;
                let ij = &inv[col * m + j] * &factor;
                inv[row * m + j] -= ij;
            }
        }
    }
    let entry = |i: usize, j: usize| -> BigRational {
        if i < m && j < m {
            inv[i * m + j].clone()
        } else {
            rational_zero()
        }
    };
    let mut omega = vec![rational_zero(); n * n];
    for u in 0..n {
        for v in u + 1..n {
            let value =
                entry(u, u) + entry(v, v) - entry(u, v) - entry(v, u);
            omega[u * n + v] = value.clone();
            omega[v * n + u] = value;
        }
    }
    Ok(ExactResistances { n, omega })
}

/// Exact effective resistance between one pair.
pub fn effective_resistance_exact(
    net: &Network<BigRational>,
    u: usize,
    v: usize,
) -> Result<BigRational, ResistanceError> {
    let n = net.vertex_count();
    for &vertex in &[u, v] {
        if vertex >= n {
            return Err(ResistanceError::VertexOutOfRange { vertex, n });
        }
    }
    if u == v {
        return Ok(rational_zero());
    }
    Ok(resistance_matrix_exact(net)?.omega(u, v).clone())
}

/// Exact Kirchhoff index of a rational-weighted network.
pub fn kirchhoff_index_exact(net: &Network<BigRational>) -> Result<BigRational, ResistanceError> {
    Ok(resistance_matrix_exact(net)?.kirchhoff_index())
}

/// Exact Kirchhoff index of a unit-weight chain.
pub fn chain_kirchhoff_exact(spec: &ChainSpec) -> Result<BigRational, ResistanceError> {
    let net = LabeledChainGraph::build(spec).unit_network_as::<BigRational>();
    kirchhoff_index_exact(&net)
}

/// Rounds an exact value to binary64 (for reporting).
pub fn to_f64(value: &BigRational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}
