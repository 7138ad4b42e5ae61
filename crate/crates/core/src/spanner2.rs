//! Additive 2-spanner: the union of all cluster BFS trees and the residual graph
//! of a `⌈√n⌉`-clustering.

use crate::clustering::{build_clustering, ceil_sqrt, Clustering};
use crate::graph::Graph;
use crate::spanner::{Provenance, Spanner};

#[derive(Clone, Debug)]
pub struct TwoSpanner {
    pub spanner: Spanner,
    pub clustering: Clustering,
}

impl TwoSpanner {
    /// The bound `n·ℓ + n·t` for the clustering actually used.
    pub fn structural_bound(&self) -> usize {
        let n = self.spanner.base_n;
        n * self.clustering.ell() + n * self.clustering.t
    }
}

/// Closed-form size bound `2n^{3/2} + n`, the extra `n` absorbing `t = ⌈√n⌉`.
pub fn two_spanner_edge_bound(n: usize) -> f64 {
    let n = n as f64;
    2.0 * n.powf(1.5) + n
}

pub fn build_2_spanner(g: &Graph) -> TwoSpanner {
    build_2_spanner_with_t(g, ceil_sqrt(g.n()))
}

pub fn build_2_spanner_with_t(g: &Graph, t: usize) -> TwoSpanner {
    let clustering = build_clustering(g, t);
    let mut spanner = Spanner::new(g.n());
    for (i, tree) in clustering.trees.iter().enumerate() {
        for (v, p) in tree.edges() {
            spanner.add(v, p, Provenance::Tree(i));
        }
    }
    for (u, v) in clustering.residual.iter() {
        spanner.add(u, v, Provenance::Residual);
    }
    TwoSpanner { spanner, clustering }
}
