use std::collections::VecDeque;

use rayon::prelude::*;

use super::bfs::{bfs_depths_into, Adjacency};
use super::NodeId;
use crate::dist::Dist;

/// Dense row-major `n × n` distance matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistMatrix {
    n: usize,
    data: Vec<Dist>,
}

impl DistMatrix {
    pub fn from_rows(n: usize, data: Vec<Dist>) -> Self {
        assert_eq!(data.len(), n * n);
        DistMatrix { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: NodeId, v: NodeId) -> Dist {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: NodeId) -> &[Dist] {
        &self.data[u * self.n..(u + 1) * self.n]
    }
}

/// Exact all-pairs distances: one BFS per node, run in parallel.
/// The result does not depend on scheduling since every row is independent.
pub fn exact_apsp<A: Adjacency + Sync + ?Sized>(g: &A) -> DistMatrix {
    let n = g.node_count();
    let mut data = vec![0; n * n];
    if n > 0 {
        data.par_chunks_mut(n).enumerate().for_each_init(
            || VecDeque::with_capacity(n),
            |queue, (root, row)| bfs_depths_into(g, root, row, queue),
        );
    }
    DistMatrix { n, data }
}
