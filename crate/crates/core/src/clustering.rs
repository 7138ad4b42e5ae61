//! Greedy t-clustering with per-center BFS trees in the shrinking residual graph.
//!
//! Centers are chosen one at a time. At step `i` the center is the node whose
//! closed neighborhood has the most nodes not yet claimed by an earlier
//! cluster; those unclaimed nodes become cluster `i`. The BFS tree of step `i`
//! is grown in the residual graph `G_{i-1}`, which keeps an edge as long as at
//! least one endpoint is still unclustered. The loop stops as soon as no
//! closed neighborhood has `t` unclaimed nodes left.

use crate::dist::{Dist, INF};
use crate::graph::{bfs_in, BfsTree, EdgeSet, Graph, NodeId};

/// Color of an unclustered node.
pub const UNCLUSTERED: u32 = 0;

#[derive(Clone, Debug)]
pub struct Clustering {
    pub t: usize,
    /// `centers[i]` is the center of cluster `i + 1`.
    pub centers: Vec<NodeId>,
    /// 0 for unclustered nodes, `i` (1-based) for members of cluster `i`.
    ///
    /// A center may itself carry the color of an earlier cluster: the greedy
    /// step maximizes over every node, clustered or not.
    pub color: Vec<u32>,
    pub cluster_sizes: Vec<usize>,
    /// `trees[i]` is the BFS tree of `centers[i]` in the residual graph just
    /// before cluster `i + 1` was fixed.
    pub trees: Vec<BfsTree>,
    /// Edges of the final residual graph, in sorted order.
    pub residual: EdgeSet,
    /// Nodes and arcs touched by the center scans, BFS runs and residual
    /// updates. A proxy for running time.
    pub work: u64,
}

impl Clustering {
    pub fn n(&self) -> usize {
        self.color.len()
    }

    /// Number of clusters.
    pub fn ell(&self) -> usize {
        self.centers.len()
    }

    /// Zero-based cluster index of `v`, if clustered.
    pub fn cluster_of(&self, v: NodeId) -> Option<usize> {
        match self.color[v] {
            UNCLUSTERED => None,
            c => Some(c as usize - 1),
        }
    }

    pub fn is_clustered(&self, v: NodeId) -> bool {
        self.color[v] != UNCLUSTERED
    }

    /// An edge of the input lies in the residual graph iff an endpoint is unclustered.
    pub fn in_residual(&self, u: NodeId, v: NodeId) -> bool {
        !self.is_clustered(u) || !self.is_clustered(v)
    }

    /// Depth of `v` in the BFS tree of cluster `i` (zero-based).
    #[inline]
    pub fn tree_depth(&self, i: usize, v: NodeId) -> Dist {
        self.trees[i].depth[v]
    }
}

/// Builds the greedy `t`-clustering of `g` in `O(n^2)` time.
///
/// Ties between equally good centers go to the smallest node id.
pub fn build_clustering(g: &Graph, t: usize) -> Clustering {
    assert!(t >= 1, "clustering threshold must be positive");
    let n = g.n();
    let mut work: u64 = 0;

    // |closed neighborhood \ clustered| for every node
    let mut unclaimed: Vec<usize> = (0..n).map(|v| g.degree(v) + 1).collect();
    let mut color = vec![UNCLUSTERED; n];
    let mut residual_adj: Vec<Vec<NodeId>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    let mut dirty = Vec::new();

    let mut centers = Vec::new();
    let mut cluster_sizes = Vec::new();
    let mut trees = Vec::new();

    loop {
        work += n as u64;
        let Some((center, best)) = unclaimed
            .iter()
            .copied()
            .enumerate()
            .fold(None, |acc: Option<(usize, usize)>, (v, s)| match acc {
                Some((_, b)) if b >= s => acc,
                _ => Some((v, s)),
            })
        else {
            break;
        };
        if best < t {
            break;
        }

        let members: Vec<NodeId> = std::iter::once(center)
            .chain(g.neighbors(center).iter().copied())
            .filter(|&v| color[v] == UNCLUSTERED)
            .collect();
        debug_assert_eq!(members.len(), best);

        let tree = bfs_in(&residual_adj, center);
        work += (0..n)
            .filter(|&v| tree.depth[v] != INF)
            .map(|v| 1 + residual_adj[v].len() as u64)
            .sum::<u64>();
        trees.push(tree);

        let label = centers.len() as u32 + 1;
        centers.push(center);
        cluster_sizes.push(members.len());
        for &x in &members {
            color[x] = label;
        }
        for &x in &members {
            unclaimed[x] -= 1;
            for &y in g.neighbors(x) {
                unclaimed[y] -= 1;
            }
            work += 1 + g.degree(x) as u64;
        }

        // Drop residual edges whose endpoints are now both clustered. Only
        // members and their clustered residual neighbors can lose edges.
        dirty.clear();
        for &x in &members {
            dirty.push(x);
            dirty.extend(residual_adj[x].iter().copied().filter(|&y| color[y] != UNCLUSTERED));
        }
        dirty.sort_unstable();
        dirty.dedup();
        for &z in &dirty {
            work += residual_adj[z].len() as u64;
            residual_adj[z].retain(|&w| color[w] == UNCLUSTERED);
        }
    }

    let residual: EdgeSet = g
        .edges()
        .filter(|&(u, v)| color[u] == UNCLUSTERED || color[v] == UNCLUSTERED)
        .collect();
    debug_assert_eq!(residual_adj.iter().map(Vec::len).sum::<usize>(), 2 * residual.len());

    Clustering { t, centers, color, cluster_sizes, trees, residual, work }
}

/// `⌈√n⌉`, at least 1.
pub fn ceil_sqrt(n: usize) -> usize {
    ceil_root(n, 2)
}

/// `⌈n^{1/3}⌉`, at least 1.
pub fn ceil_cbrt(n: usize) -> usize {
    ceil_root(n, 3)
}

fn ceil_root(n: usize, k: u32) -> usize {
    if n <= 1 {
        return 1;
    }
    let mut r = (n as f64).powf(1.0 / k as f64).round() as usize;
    while r.pow(k) < n {
        r += 1;
    }
    while r > 1 && (r - 1).pow(k) >= n {
        r -= 1;
    }
    r
}
