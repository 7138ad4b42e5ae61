use crate::clustering::Clustering;
use crate::dist::Dist;
use crate::graph::NodeId;
use crate::union_find::UnionFind;

/// A cluster BFS tree with every residual edge contracted.
///
/// Tree edges with an unclustered endpoint lie in the residual graph and are
/// merged away; the edges that survive join two clustered nodes and are the
/// only ones path buying ever has to add.
#[derive(Clone, Debug)]
pub struct ContractedTree {
    /// Zero-based cluster index of the tree.
    pub center: usize,
    /// Supernode id of every original node. Nodes the tree does not reach are
    /// singleton supernodes.
    pub supernode: Vec<usize>,
    /// Surviving edges as `(child supernode, parent supernode, (child, parent))`.
    pub tree_edges: Vec<(usize, usize, (NodeId, NodeId))>,
    /// Sorted adjacency over supernodes.
    pub adjacency: Vec<Vec<usize>>,
    pub original_depth: Vec<Dist>,
}

impl ContractedTree {
    pub fn supernode_count(&self) -> usize {
        self.adjacency.len()
    }

    /// Whether the tree edge `(a, b)` survives contraction.
    #[inline]
    pub fn survives(&self, a: NodeId, b: NodeId) -> bool {
        self.supernode[a] != self.supernode[b]
    }
}

/// Contracts tree `i` of the clustering in `O(n α(n))`.
pub fn contract_tree(c: &Clustering, i: usize) -> ContractedTree {
    let tree = &c.trees[i];
    let n = c.n();
    let mut uf = UnionFind::new(n);
    for (v, p) in tree.edges() {
        if c.in_residual(v, p) {
            uf.union(v, p);
        }
    }

    let mut label = vec![usize::MAX; n];
    let mut supernode = vec![0; n];
    let mut count = 0;
    for (v, slot) in supernode.iter_mut().enumerate() {
        let r = uf.find(v);
        if label[r] == usize::MAX {
            label[r] = count;
            count += 1;
        }
        *slot = label[r];
    }

    let mut adjacency = vec![Vec::new(); count];
    let mut tree_edges = Vec::new();
    for (v, p) in tree.edges() {
        let (a, b) = (supernode[v], supernode[p]);
        if a != b {
            tree_edges.push((a, b, (v, p)));
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
    }
    for list in adjacency.iter_mut() {
        list.sort_unstable();
    }

    ContractedTree { center: i, supernode, tree_edges, adjacency, original_depth: tree.depth.clone() }
}
