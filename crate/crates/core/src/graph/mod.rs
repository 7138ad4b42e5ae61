//! Undirected unweighted simple graphs, BFS, edge-list I/O and seeded generators.

mod apsp;
mod bfs;
mod edge_set;
mod generate;
mod io;

pub use apsp::{exact_apsp, DistMatrix};
pub use bfs::{bfs, bfs_in, Adjacency, BfsTree};
pub(crate) use bfs::bfs_depths_into;
pub use edge_set::{canonical, EdgeSet};
pub use generate::{generate, Family};
pub use io::{parse_edge_list, read_edge_list, write_edge_list};

use std::collections::HashSet;

use thiserror::Error;

pub type NodeId = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("node id {node} out of range (n = {n}) at line {line}")]
    NodeOutOfRange { line: usize, node: usize, n: usize },
    #[error("duplicate edge ({u}, {v}) at line {line}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("self-loop at line {line} on node {node}")]
    SelfLoop { line: usize, node: usize },
    #[error("header announced {expected} edges but {found} were read")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("infeasible generator parameters: {0}")]
    InfeasibleParams(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for GraphError {
    fn from(e: std::io::Error) -> Self {
        GraphError::Io(e.to_string())
    }
}

/// An undirected simple graph on nodes `0..n` with sorted adjacency lists.
///
/// Every adjacency list is strictly increasing, so any traversal that walks
/// neighbors in list order is deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<NodeId>>,
    m: usize,
}

impl Graph {
    /// A graph with `n` nodes and no edges.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    /// Builds a graph from an edge list, rejecting self-loops, duplicates and
    /// out-of-range ids. The `line` in errors is the 1-based edge index.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        Self::from_numbered_edges(n, edges.into_iter().enumerate().map(|(i, e)| (i + 1, e)))
    }

    pub(crate) fn from_numbered_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, (NodeId, NodeId))>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut seen = HashSet::new();
        for (line, (u, v)) in edges {
            for node in [u, v] {
                if node >= n {
                    return Err(GraphError::NodeOutOfRange { line, node, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { line, node: u });
            }
            let (a, b) = canonical(u, v);
            if !seen.insert((a, b)) {
                return Err(GraphError::DuplicateEdge { line, u: a, v: b });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        Ok(Graph { adj, m: seen.len() })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges in canonical `(min, max)` orientation, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// The subgraph on the same node set containing exactly `edges`.
    pub fn from_edge_set(n: usize, edges: &EdgeSet) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges.iter() {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        Graph { adj, m: edges.len() }
    }

    /// True if every edge of `self` is an edge of `other` and the node counts agree.
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n() == other.n() && self.edges().all(|(u, v)| other.has_edge(u, v))
    }
}

impl Adjacency for Graph {
    fn node_count(&self) -> usize {
        self.n()
    }

    fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.adj[v]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacency_is_sorted_and_symmetric() {
        let g = Graph::from_edges(4, [(2, 0), (0, 1), (3, 0)]).unwrap();
        assert_eq!(g.neighbors(0), &[1, 2, 3]);
        assert_eq!(g.neighbors(3), &[0]);
        assert_eq!(g.m(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 1)]),
            Err(GraphError::SelfLoop { line: 2, node: 1 })
        );
        assert_eq!(
            Graph::from_edges(3, [(0, 7)]),
            Err(GraphError::NodeOutOfRange { line: 1, node: 7, n: 3 })
        );
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 2), (1, 0)]),
            Err(GraphError::DuplicateEdge { line: 3, u: 0, v: 1 })
        );
    }
}
