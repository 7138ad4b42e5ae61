use indexmap::IndexSet;

use super::NodeId;

/// Orders an undirected pair as `(min, max)`.
#[inline]
pub fn canonical(u: NodeId, v: NodeId) -> (NodeId, NodeId) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A set of undirected edges with O(1) membership that remembers insertion order.
///
/// Pairs are stored canonically, so `(3, 1)` and `(1, 3)` are the same edge.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeSet {
    edges: IndexSet<(NodeId, NodeId)>,
}

impl EdgeSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts the edge, returning `true` if it was not present.
    ///
    /// Panics on self-loops.
    pub fn insert(&mut self, u: NodeId, v: NodeId) -> bool {
        assert_ne!(u, v, "edge sets hold no self-loops");
        self.edges.insert(canonical(u, v))
    }

    pub fn contains(&self, u: NodeId, v: NodeId) -> bool {
        self.edges.contains(&canonical(u, v))
    }

    pub fn remove(&mut self, u: NodeId, v: NodeId) -> bool {
        self.edges.shift_remove(&canonical(u, v))
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edges in insertion order.
    pub fn iter(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.edges.iter().copied()
    }

    /// Edges in sorted canonical order.
    pub fn sorted(&self) -> Vec<(NodeId, NodeId)> {
        let mut v: Vec<_> = self.iter().collect();
        v.sort_unstable();
        v
    }
}

impl FromIterator<(NodeId, NodeId)> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = (NodeId, NodeId)>>(iter: I) -> Self {
        let mut s = EdgeSet::new();
        for (u, v) in iter {
            s.insert(u, v);
        }
        s
    }
}
