//! Deterministic additive spanners and a (2,1)-approximate distance oracle
//! for unweighted undirected graphs.
//!
//! - [`clustering`]: greedy t-clustering with BFS trees in residual graphs.
//! - [`spanner2`]: +2 spanner with at most `2n^{3/2} + n` edges.
//! - [`spanner8`]: +8 spanner with at most `26n^{4/3} + n` edges.
//! - [`oracle`]: constant-time distance estimates in `[d, 2d + 1]`.
//! - [`verify`]: brute-force checkers for all of the above.

pub mod clustering;
pub mod dist;
pub mod graph;
pub mod oracle;
pub mod spanner;
pub mod spanner2;
pub mod spanner8;
pub mod union_find;
pub mod verify;

pub use clustering::{build_clustering, Clustering};
pub use dist::{Dist, INF};
pub use graph::{Graph, GraphError, NodeId};
pub use oracle::{build_oracle, DistanceOracle};
pub use spanner::{Provenance, Spanner};
pub use spanner2::{build_2_spanner, TwoSpanner};
pub use spanner8::{build_8_spanner, EightSpanner};
