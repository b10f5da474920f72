//! Maximum-size independent sets of a matroid under hypergraph degree bounds,
//! and the properly colored forest, branching, and b-matching problems that
//! reduce to them.
//!
//! The central object is a [`DbmisInstance`]: a matroid given by an
//! independence oracle, a bounded hypergraph over the same ground set, and
//! nonnegative integer element weights. A set is feasible when it is
//! independent in the matroid and meets every hyperedge `e` in at most `g(e)`
//! elements. The crate ships:
//!
//! * matroid oracles (graphic, uniform, free, partition, direct sum,
//!   restriction, relabeling) with greedy rank,
//! * a weight-preserving reduction from bounded instances to matroid parity
//!   with sets of size `max_degree + 1`, plus exact and local-search parity
//!   solvers and solution lifting,
//! * direct solvers: exact enumeration, descending-weight greedy, and
//!   bounded-exchange local search with the `1/(max_degree + 1/p)` guarantee
//!   on unit-bound instances,
//! * edge-colored multigraphs with per-vertex per-color bounds, the reduction
//!   of properly colored forests to bounded instances, a `1/3`-approximate
//!   bundle-exchange search, and a per-color matching union for two and three
//!   colors,
//! * colored digraphs, the three-matroid view of out-colored branchings, the
//!   reduction of colored branchings to bounded instances with degree three,
//!   and the split-graph reduction of colored b-matchings to hierarchically
//!   bounded matchings,
//! * a line-oriented instance format, seeded generators, ratio benchmark
//!   suites with exact rational reporting, and a command line front end.
//!
//! Every algorithm is deterministic: iteration orders are fixed, ties are
//! broken by smallest index, and all randomness flows from an explicit
//! 64-bit seed through [`rng::SplitMix64`].
//!
//! Each capability has a runnable demonstration under `examples/`:
//!
//! ```text
//! cargo run -p dbmis --example matroid_axioms     exhaustive oracle axiom checks
//! cargo run -p dbmis --example forest_reduction   colored forests as bounded instances
//! cargo run -p dbmis --example parity_roundtrip   parity reduction and solution lifting
//! cargo run -p dbmis --example exchange_search    bounded-exchange local search vs exact
//! cargo run -p dbmis --example bundled_search     bundle-exchange forest search
//! cargo run -p dbmis --example color_matchings    per-color matching union
//! cargo run -p dbmis --example branchings         colored branchings, three matroids
//! cargo run -p dbmis --example bmatching_split    b-matching split-graph reduction
//! cargo run -p dbmis --example ratio_bench        benchmark suites and reports
//! ```
//!
//! The `dbmis` binary exposes the same functionality as subcommands
//! (`gen`, `solve`, `reduce`, `oracle`, `bench`).

pub mod bench;
pub mod bmatching;
pub mod branching;
pub mod cli;
pub mod gen;
pub mod instance;
pub mod io;
pub mod matching;
pub mod matroid;
pub mod parity;
pub mod pcforest;
pub mod rng;
pub mod solvers;

pub(crate) mod combi;
pub(crate) mod union_find;

use thiserror::Error;

/// Ground set elements, vertices, edges, arcs, and colors are all dense
/// nonnegative indices assigned at construction time.
pub type ElementId = usize;
pub type VertexId = usize;
pub type EdgeId = usize;
pub type ArcId = usize;
pub type ColorId = usize;
/// Weights are exact nonnegative integers; all comparisons are exact.
pub type Weight = u64;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input: out-of-range ids, inconsistent sizes, bad parameters.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// A documented precondition of an operation was violated.
    #[error("contract violation: {0}")]
    ContractViolation(String),
    /// An enumeration cap or other resource limit was exceeded.
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    /// Instance or solution text that does not match the `v1` format.
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub use instance::{BoundedHypergraph, DbmisInstance, Hyperedge};
pub use matroid::{GroundSet, Matroid};
pub use parity::{ParityInstance, ReductionCertificate};
pub use pcforest::{BundledForest, EdgeColoredMultigraph};
