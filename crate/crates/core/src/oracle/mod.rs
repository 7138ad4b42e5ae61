//! (2,1)-approximate distance oracle.
//!
//! For every node the oracle keeps its depth in each cluster BFS tree, its
//! distance to each center in the 8-spanner, and four portal centers. A
//! query takes the minimum of the residual sub-oracle's estimate and eight
//! portal candidates `d_T(p, u) + min(d_T(p, v), d_H(p, v))`.

mod format;
mod sub;

pub use format::{read_oracle, write_oracle, FORMAT_VERSION, MAGIC};
pub use sub::{DoublingSubOracle, ExactSubgraphOracle, SubOracle, DEFAULT_TABLE_THRESHOLD};

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::clustering::ceil_cbrt;
use crate::dist::{add, Dist, INF};
use crate::graph::{bfs_depths_into, DistMatrix, EdgeSet, Graph, NodeId};
use crate::spanner8::{build_8_spanner_with, EightSpannerOptions, InvariantViolation};

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("node {node} out of range (n = {n})")]
    NodeOutOfRange { node: NodeId, n: usize },
    #[error("malformed oracle file: {0}")]
    Format(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Build(#[from] InvariantViolation),
}

/// Portal centers of one node, as zero-based cluster indices.
pub type Portals = [u32; 4];

#[derive(Clone, Debug)]
pub struct DistanceOracle<S = ExactSubgraphOracle> {
    pub n: usize,
    pub t: usize,
    pub centers: Vec<NodeId>,
    /// `tree_dist[v * ℓ + i]`: depth of `v` in tree `i`.
    pub tree_dist: Vec<Dist>,
    /// `spanner_dist[v * ℓ + i]`: distance from center `i` to `v` in the 8-spanner.
    pub spanner_dist: Vec<Dist>,
    /// One entry per node when `ℓ > 0`, empty otherwise.
    pub portals: Vec<Portals>,
    pub residual: EdgeSet,
    pub sub: S,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleStats {
    pub n: usize,
    pub ell: usize,
    pub t: usize,
    pub residual_edges: usize,
    /// Words in the tree, spanner and portal tables.
    pub table_words: usize,
    pub sub_oracle_mode: &'static str,
    pub sub_oracle_words: usize,
    pub constant_time: bool,
}

/// Portals from the tree-depth row of one node.
///
/// The first portal minimizes depth over all trees; each next one minimizes
/// over trees with smaller index than the previous portal, and sticks at
/// index 0 once reached. Ties go to the lowest index.
pub fn compute_portals(row: &[Dist], prefix: &mut Vec<u32>) -> Portals {
    prefix.clear();
    let mut best = 0u32;
    for (k, &d) in row.iter().enumerate() {
        if d < row[best as usize] {
            best = k as u32;
        }
        prefix.push(best);
    }
    let mut p = [0u32; 4];
    p[0] = prefix[row.len() - 1];
    for j in 1..4 {
        p[j] = if p[j - 1] == 0 { 0 } else { prefix[p[j - 1] as usize - 1] };
    }
    p
}

impl<S> DistanceOracle<S> {
    pub fn ell(&self) -> usize {
        self.centers.len()
    }

    #[inline]
    pub fn tree_dist(&self, v: NodeId, i: usize) -> Dist {
        self.tree_dist[v * self.ell() + i]
    }

    #[inline]
    pub fn spanner_dist(&self, v: NodeId, i: usize) -> Dist {
        self.spanner_dist[v * self.ell() + i]
    }

    pub fn portals(&self, v: NodeId) -> Option<&Portals> {
        self.portals.get(v)
    }

    /// Swaps in a different residual-graph estimator.
    pub fn with_sub_oracle<T>(self, sub: T) -> DistanceOracle<T> {
        DistanceOracle {
            n: self.n,
            t: self.t,
            centers: self.centers,
            tree_dist: self.tree_dist,
            spanner_dist: self.spanner_dist,
            portals: self.portals,
            residual: self.residual,
            sub,
        }
    }
}

impl<S: SubOracle> DistanceOracle<S> {
    pub fn query(&self, u: NodeId, v: NodeId) -> Result<Dist, OracleError> {
        for node in [u, v] {
            if node >= self.n {
                return Err(OracleError::NodeOutOfRange { node, n: self.n });
            }
        }
        Ok(self.estimate(u, v))
    }

    /// Like [`query`](Self::query) without the range check.
    #[inline]
    pub fn estimate(&self, u: NodeId, v: NodeId) -> Dist {
        if u == v {
            return 0;
        }
        let mut best = self.sub.estimate(u, v);
        if self.ell() > 0 {
            for (a, b) in [(u, v), (v, u)] {
                for &i in &self.portals[a] {
                    let i = i as usize;
                    let far = self.tree_dist(b, i).min(self.spanner_dist(b, i));
                    best = best.min(add(self.tree_dist(a, i), far));
                }
            }
        }
        best
    }

    /// Estimates for every pair, row by row.
    pub fn all_pairs_estimates(&self) -> DistMatrix {
        let n = self.n;
        let mut data = vec![0; n * n];
        if n > 0 {
            data.par_chunks_mut(n).enumerate().for_each(|(u, row)| {
                for (v, slot) in row.iter_mut().enumerate() {
                    *slot = self.estimate(u, v);
                }
            });
        }
        DistMatrix::from_rows(n, data)
    }
}

impl DistanceOracle<ExactSubgraphOracle> {
    pub fn stats(&self) -> OracleStats {
        OracleStats {
            n: self.n,
            ell: self.ell(),
            t: self.t,
            residual_edges: self.residual.len(),
            table_words: self.tree_dist.len() + self.spanner_dist.len() + 4 * self.portals.len(),
            sub_oracle_mode: self.sub.mode(),
            sub_oracle_words: self.sub.size_words(),
            constant_time: self.sub.constant_time(),
        }
    }
}

/// Builds the oracle with the exact residual sub-oracle.
pub fn build_oracle(g: &Graph) -> Result<DistanceOracle, OracleError> {
    build_oracle_with(g, None, ExactSubgraphOracle::new)
}

/// Builds the oracle with a custom clustering threshold and sub-oracle.
pub fn build_oracle_with<S, F>(g: &Graph, t: Option<usize>, make_sub: F) -> Result<DistanceOracle<S>, OracleError>
where
    F: FnOnce(&EdgeSet, usize) -> S,
{
    let n = g.n();
    let t = t.unwrap_or_else(|| ceil_cbrt(n));
    let built = build_8_spanner_with(g, &EightSpannerOptions { t: Some(t), trace: false })?;
    let c = built.clustering;
    let ell = c.ell();

    let mut tree_dist = vec![INF; n * ell];
    for (i, tree) in c.trees.iter().enumerate() {
        for v in 0..n {
            tree_dist[v * ell + i] = tree.depth[v];
        }
    }

    let h = built.spanner.to_graph();
    let columns: Vec<Vec<Dist>> = c
        .centers
        .par_iter()
        .map(|&u| {
            let mut depth = vec![INF; n];
            bfs_depths_into(&h, u, &mut depth, &mut VecDeque::new());
            depth
        })
        .collect();
    let mut spanner_dist = vec![INF; n * ell];
    for (i, col) in columns.iter().enumerate() {
        for v in 0..n {
            spanner_dist[v * ell + i] = col[v];
        }
    }

    let mut portals = Vec::new();
    if ell > 0 {
        let mut prefix = Vec::with_capacity(ell);
        portals = (0..n).map(|v| compute_portals(&tree_dist[v * ell..(v + 1) * ell], &mut prefix)).collect();
    }

    let sub = make_sub(&c.residual, n);
    Ok(DistanceOracle {
        n,
        t,
        centers: c.centers,
        tree_dist,
        spanner_dist,
        portals,
        residual: c.residual,
        sub,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{exact_apsp, generate, Family};

    #[test]
    fn portal_chain_walks_down_indices() {
        let mut scratch = Vec::new();
        // minimum at 3, then best among 0..3 is 1, then 0, then stuck at 0
        assert_eq!(compute_portals(&[5, 2, 4, 1, 3], &mut scratch), [3, 1, 0, 0]);
        // ties go to the lowest index
        assert_eq!(compute_portals(&[2, 1, 1, 1], &mut scratch), [1, 0, 0, 0]);
        assert_eq!(compute_portals(&[INF, INF], &mut scratch), [0, 0, 0, 0]);
        assert_eq!(compute_portals(&[9, 8, 7, 6, 5], &mut scratch), [4, 3, 2, 1]);
    }

    #[test]
    fn path_falls_back_to_sub_oracle() {
        // t = 4 exceeds every closed neighborhood of a path
        let g = generate(&Family::Path { n: 30 }, 0).unwrap();
        let o = build_oracle(&g).unwrap();
        assert_eq!(o.ell(), 0);
        assert!(o.portals.is_empty());
        assert_eq!(o.all_pairs_estimates(), exact_apsp(&g));

        // P_5 only degenerates once t is forced above 3
        let p5 = generate(&Family::Path { n: 5 }, 0).unwrap();
        let o = build_oracle_with(&p5, Some(4), ExactSubgraphOracle::new).unwrap();
        assert_eq!(o.ell(), 0);
        assert_eq!(o.all_pairs_estimates(), exact_apsp(&p5));
    }

    #[test]
    fn complete_graph_answers_two() {
        let g = generate(&Family::Complete { n: 9 }, 0).unwrap();
        let o = build_oracle(&g).unwrap();
        assert_eq!(o.ell(), 1);
        for v in 0..9 {
            assert_eq!(o.portals(v), Some(&[0, 0, 0, 0]));
        }
        let center = o.centers[0];
        for u in 0..9 {
            for v in 0..9 {
                let want = if u == v {
                    0
                } else if u == center || v == center {
                    1
                } else {
                    2
                };
                assert_eq!(o.query(u, v).unwrap(), want, "({u},{v})");
            }
        }
    }

    #[test]
    fn rejects_out_of_range() {
        let g = generate(&Family::Path { n: 3 }, 0).unwrap();
        let o = build_oracle(&g).unwrap();
        assert!(matches!(o.query(0, 3), Err(OracleError::NodeOutOfRange { node: 3, n: 3 })));
    }
}
