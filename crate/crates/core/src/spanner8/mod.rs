//! Additive 8-spanner with `O(n^{4/3})` edges.
//!
//! Pipeline: a `⌈n^{1/3}⌉`-clustering, then every cluster star and the whole
//! residual graph go into `H`, then center pairs whose spanner distance cannot
//! be certified within `+2` of the two-tree estimate get a path bought along
//! the witness BFS tree.

mod buy;
mod contract;
mod delta;

pub use buy::{
    buy_paths, BuyOutcome, InvariantViolation, PathRecord, TraceEvent, UpdateRule, RULE_FROM_SOURCE,
    RULE_RELAX, RULE_TO_TARGET,
};
pub use contract::{contract_tree, ContractedTree};
pub use delta::{compute_delta, DeltaTables};

use crate::clustering::{build_clustering, ceil_cbrt, Clustering};
use crate::graph::Graph;
use crate::spanner::{Provenance, Spanner};

#[derive(Clone, Debug, Default)]
pub struct EightSpannerOptions {
    /// Clustering threshold; `⌈n^{1/3}⌉` when absent.
    pub t: Option<usize>,
    /// Record every bound update and bought edge.
    pub trace: bool,
}

#[derive(Clone, Debug)]
pub struct EightSpanner {
    pub spanner: Spanner,
    pub clustering: Clustering,
    /// Tables as they stand after path buying.
    pub tables: DeltaTables,
    pub outcome: BuyOutcome,
}

/// Closed-form size bound `26 n^{4/3} + n`.
pub fn eight_spanner_edge_bound(n: usize) -> f64 {
    let n = n as f64;
    26.0 * n.powf(4.0 / 3.0) + n
}

/// Adds every cluster star and the residual graph.
pub fn seed_spanner(c: &Clustering) -> Spanner {
    let mut h = Spanner::new(c.n());
    for v in 0..c.n() {
        if let Some(r) = c.cluster_of(v) {
            let center = c.centers[r];
            if v != center {
                h.add(center, v, Provenance::ClusterStar);
            }
        }
    }
    for (u, v) in c.residual.iter() {
        h.add(u, v, Provenance::Residual);
    }
    h
}

pub fn build_8_spanner(g: &Graph) -> Result<EightSpanner, InvariantViolation> {
    build_8_spanner_with(g, &EightSpannerOptions::default())
}

pub fn build_8_spanner_with(g: &Graph, opts: &EightSpannerOptions) -> Result<EightSpanner, InvariantViolation> {
    let t = opts.t.unwrap_or_else(|| ceil_cbrt(g.n()));
    let clustering = build_clustering(g, t);
    let mut spanner = seed_spanner(&clustering);
    let mut tables = compute_delta(&clustering);
    let contracted: Vec<ContractedTree> = (0..clustering.ell()).map(|i| contract_tree(&clustering, i)).collect();
    let outcome = buy_paths(&clustering, &mut tables, &contracted, &mut spanner, opts.trace)?;
    Ok(EightSpanner { spanner, clustering, tables, outcome })
}
