//! Spanner subgraphs with per-edge provenance.

use serde::{Deserialize, Serialize};

use crate::graph::{EdgeSet, Graph, NodeId};

/// Why an edge is in the spanner. Recorded at first insertion only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Edge of the BFS tree of cluster `i` (zero-based).
    Tree(usize),
    /// Edge of the final residual graph.
    Residual,
    /// Edge from a center to a member of its cluster.
    ClusterStar,
    /// Bought while connecting centers `i` and `j` (zero-based).
    BoughtPath { i: usize, j: usize },
}

/// A subgraph `H` of some input graph, on the same node set.
#[derive(Clone, Debug)]
pub struct Spanner {
    pub base_n: usize,
    pub edges: EdgeSet,
    /// Parallel to the insertion order of `edges`.
    pub provenance: Vec<Provenance>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProvenanceCounts {
    pub tree: usize,
    pub residual: usize,
    pub cluster_star: usize,
    pub bought: usize,
}

impl Spanner {
    pub fn new(base_n: usize) -> Self {
        Spanner { base_n, edges: EdgeSet::new(), provenance: Vec::new() }
    }

    /// Adds an edge if absent. Returns whether it was new.
    pub fn add(&mut self, u: NodeId, v: NodeId, why: Provenance) -> bool {
        let fresh = self.edges.insert(u, v);
        if fresh {
            self.provenance.push(why);
        }
        fresh
    }

    pub fn contains(&self, u: NodeId, v: NodeId) -> bool {
        self.edges.contains(u, v)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_edge_set(self.base_n, &self.edges)
    }

    /// Edges together with their provenance, in insertion order.
    pub fn tagged_edges(&self) -> impl Iterator<Item = ((NodeId, NodeId), Provenance)> + '_ {
        self.edges.iter().zip(self.provenance.iter().copied())
    }

    pub fn counts(&self) -> ProvenanceCounts {
        let mut c = ProvenanceCounts::default();
        for p in &self.provenance {
            match p {
                Provenance::Tree(_) => c.tree += 1,
                Provenance::Residual => c.residual += 1,
                Provenance::ClusterStar => c.cluster_star += 1,
                Provenance::BoughtPath { .. } => c.bought += 1,
            }
        }
        c
    }

    /// Wraps an arbitrary subgraph, e.g. one read back from disk. Every edge is
    /// tagged `Residual` since the real provenance is unknown.
    pub fn from_graph(h: &Graph) -> Self {
        let mut s = Spanner::new(h.n());
        for (u, v) in h.edges() {
            s.add(u, v, Provenance::Residual);
        }
        s
    }
}
