//! Polygonal chain graphs and their electrical invariants.
//!
//! A *chain* is a row of `h` polygons with `k` sides each (`k >= 5`), where
//! consecutive polygons share one edge. Up to isomorphism a chain is encoded
//! by `k`, `h`, and a vector `w` of length `h - 2` giving, for each interior
//! polygon, how many of its `k - 4` subdivision vertices sit on the top side.
//! Treating every edge as a unit resistor turns a chain into an electrical
//! network; this crate computes effective resistances between vertices, the
//! Kirchhoff index (sum of pairwise resistances), and the Wiener index (sum
//! of pairwise hop distances), and searches the encoding space for the chains
//! that minimize or maximize the Kirchhoff index.
//!
//! Two independent engines compute resistances:
//!
//! * [`resistance`] solves the grounded weighted Laplacian with a dense
//!   square-root-free LDL^T factorization (one factorization per network,
//!   reused across all vertex pairs);
//! * [`reduction`] rewrites the network symbolically with series, parallel,
//!   and Δ-Y rules, collapsing a chain polygon by polygon into a three-spoke
//!   fan whose parameters give closed-form resistances from a source in the
//!   first polygon to every vertex of the last polygon.
//!
//! The engines agree within tight tolerances on randomized weighted chains,
//! and an exact-rational mode ([`exact`], plus generic weights throughout
//! [`reduction`]) removes tolerances entirely for order assertions.
//!
//! [`isomer`] implements the two-edge cut-and-reconnect flip that maps a
//! chain to another chain in the same family and the closed-form difference
//! of Kirchhoff indices across a flip; [`extremal`] enumerates encodings up
//! to the reverse/complement symmetry and verifies the extremal
//! characterization (the all-top-zero chain is the unique minimizer; the
//! balanced straight or zigzag chain is the unique maximizer) by exhaustive
//! search at desk scale.
//!
//! The crate is `no_std`-compatible (`default-features = false`) and only
//! needs `alloc`; the `std` feature (default) adds `std::error::Error`
//! integration for the error types.
//!
//! # Example
//!
//! ```
//! use polychain::chain::{ChainSpec, LabeledChainGraph};
//! use polychain::resistance;
//!
//! // A single pentagon is the 5-cycle: Kirchhoff index (n^3 - n)/12 = 10.
//! let spec: ChainSpec = "5:1:".parse().unwrap();
//! let graph = LabeledChainGraph::build(&spec);
//! let kf = resistance::kirchhoff_index(&graph.unit_network()).unwrap();
//! assert!((kf - 10.0).abs() < 1e-9);
//! ```

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

// Chain encodings, their canonical forms, and labeled graph realizations.
pub mod chain;
// Positive-weighted multigraphs shared by the two resistance engines.
pub mod network;
// Laplacian linear-solve engine: effective resistance, Kirchhoff, Wiener.
pub mod resistance;
// Symbolic series/parallel/Δ-Y rewriting and the polygon-by-polygon fan.
pub mod reduction;
// Two-edge flips between chain isomers and the Kirchhoff-difference formula.
pub mod isomer;
// Enumeration up to symmetry, extremal search, and the theorem verifier.
pub mod extremal;
// Exact-rational mirrors of both engines for tolerance-free comparisons.
pub mod exact;

pub use chain::{ChainSpec, LabeledChainGraph};
pub use network::{Network, Weight, WeightedNetwork};
