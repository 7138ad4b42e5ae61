use std::collections::VecDeque;

use super::{Graph, NodeId};
use crate::dist::{Dist, INF};

/// Read access to sorted neighbor lists. Implemented by [`Graph`] and by the
/// raw adjacency vectors the clustering keeps for its shrinking residual graph.
pub trait Adjacency {
    fn node_count(&self) -> usize;
    fn neighbors(&self, v: NodeId) -> &[NodeId];
}

impl Adjacency for [Vec<NodeId>] {
    fn node_count(&self) -> usize {
        self.len()
    }

    fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self[v]
    }
}

impl Adjacency for Vec<Vec<NodeId>> {
    fn node_count(&self) -> usize {
        self.len()
    }

    fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self[v]
    }
}

/// A BFS (shortest-path) tree stored as parent and depth arrays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BfsTree {
    pub root: NodeId,
    pub parent: Vec<Option<NodeId>>,
    pub depth: Vec<Dist>,
}

impl BfsTree {
    pub fn reaches(&self, v: NodeId) -> bool {
        self.depth[v] != INF
    }

    /// Tree edges as `(child, parent)` pairs.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.parent.iter().enumerate().filter_map(|(v, p)| p.map(|p| (v, p)))
    }

    /// Number of reached nodes, root included.
    pub fn reached(&self) -> usize {
        self.depth.iter().filter(|&&d| d != INF).count()
    }
}

/// BFS from `root`, expanding neighbors in increasing id order so each
/// node's parent is its smallest-id neighbor on the previous level.
pub fn bfs(g: &Graph, root: NodeId) -> BfsTree {
    bfs_in(g, root)
}

pub fn bfs_in<A: Adjacency + ?Sized>(g: &A, root: NodeId) -> BfsTree {
    let n = g.node_count();
    assert!(root < n, "bfs root {root} out of range (n = {n})");
    let mut depth = vec![INF; n];
    let mut parent = vec![None; n];
    let mut queue = VecDeque::with_capacity(n);
    depth[root] = 0;
    queue.push_back(root);
    while let Some(u) = queue.pop_front() {
        let next = depth[u] + 1;
        for &v in g.neighbors(u) {
            if depth[v] == INF {
                depth[v] = next;
                parent[v] = Some(u);
                queue.push_back(v);
            }
        }
    }
    BfsTree { root, parent, depth }
}

/// Depth array only; avoids the parent allocation for distance sweeps.
pub(crate) fn bfs_depths_into<A: Adjacency + ?Sized>(
    g: &A,
    root: NodeId,
    depth: &mut [Dist],
    queue: &mut VecDeque<NodeId>,
) {
    depth.fill(INF);
    queue.clear();
    depth[root] = 0;
    queue.push_back(root);
    while let Some(u) = queue.pop_front() {
        let next = depth[u] + 1;
        for &v in g.neighbors(u) {
            if depth[v] == INF {
                depth[v] = next;
                queue.push_back(v);
            }
        }
    }
}
