//! Exact separator and cut analysis for small and medium graphs.
//!
//! The crate builds two graph families whose separators are forced to carry
//! large cliques (a clique joined to an independent set, and chains of cliques
//! glued by bipartite graphs without large bi-holes) and certifies, by exact
//! search, what the separators of a graph look like: the least chromatic
//! number, clique number or degeneracy over all separators, whether a cut with
//! a given hereditary property exists, and how large a bi-hole a bipartite
//! graph contains.
//!
//! Every exact search runs under a [`Budget`]. When the budget runs out the
//! search reports [`Error::BudgetExceeded`] instead of guessing, so callers can
//! tell "refuted" apart from "not verifiable at this size".
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod bits;
mod budget;
mod error;

pub mod bihole;
pub mod canon;
pub mod cuts;
pub mod generators;
pub mod graph;
pub mod invariants;
pub mod params;
pub mod separators;

pub use bits::VertexSet;
pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{BipartiteGraph, Graph};

/// Exact non-negative rational used for average degrees, `epsilon`, `ell` and thresholds.
pub type Rational = num_rational::Ratio<u64>;
