//! Path buying between cluster centers.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::contract::ContractedTree;
use super::delta::DeltaTables;
use crate::clustering::Clustering;
use crate::dist::{add, to_option, Dist, INF};
use crate::graph::{BfsTree, NodeId};
use crate::spanner::{Provenance, Spanner};

/// Which update rule changed an upper bound: 3 is the triangle relaxation,
/// 11 the bound from `u_i` to a path node's center, 12 the bound from that
/// center to `u_j`.
pub type UpdateRule = u8;
pub const RULE_RELAX: UpdateRule = 3;
pub const RULE_FROM_SOURCE: UpdateRule = 11;
pub const RULE_TO_TARGET: UpdateRule = 12;

/// One step of the path-buying run, in execution order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "event", rename_all = "snake_case")]
pub enum TraceEvent {
    /// A new edge entered the spanner.
    Edge { u: NodeId, v: NodeId },
    /// `upper(i, j)` dropped from `old` (`None` = infinity) to `new`.
    Update { i: usize, j: usize, old: Option<Dist>, new: Dist, rule: UpdateRule },
}

/// Statistics for one bought path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathRecord {
    pub i: usize,
    pub j: usize,
    /// Tree the path was taken from.
    pub k: usize,
    /// Edges of the path in the uncontracted tree.
    pub tree_len: usize,
    /// Nodes of the contracted path (`s`).
    pub nodes: usize,
    pub new_edges: usize,
    pub max_per_color: usize,
    pub unclustered_nodes: usize,
}

#[derive(Clone, Debug, Default)]
pub struct BuyOutcome {
    pub paths: Vec<PathRecord>,
    /// Edges added to the spanner that were not already present.
    pub bought_edges: usize,
    pub trace: Option<Vec<TraceEvent>>,
}

/// Proven-impossible situations. Hitting one means an implementation bug.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvariantViolation {
    #[error("path for centers ({i}, {j}) contains unclustered node {node}")]
    UnclusteredOnPath { i: usize, j: usize, node: NodeId },
    #[error("path for centers ({i}, {j}) has {count} nodes of color {color}, at most 5 allowed")]
    ColorOverflow { i: usize, j: usize, color: u32, count: usize },
    #[error("path for centers ({i}, {j}) has {nodes} nodes, cap is {cap}")]
    PathTooLong { i: usize, j: usize, nodes: usize, cap: usize },
    #[error("no witness tree for centers ({i}, {j}) with finite estimate")]
    MissingWitness { i: usize, j: usize },
    #[error("tree path for centers ({i}, {j}) has length {len} > estimate {delta}")]
    TreePathTooLong { i: usize, j: usize, len: usize, delta: Dist },
}

/// Nodes on the tree path from `a` to `b`, in order. Both must be reached.
fn tree_path(tree: &BfsTree, a: NodeId, b: NodeId) -> Vec<NodeId> {
    let (mut x, mut y) = (a, b);
    let mut front = vec![x];
    let mut back = vec![y];
    while tree.depth[x] > tree.depth[y] {
        x = tree.parent[x].expect("reached non-root has a parent");
        front.push(x);
    }
    while tree.depth[y] > tree.depth[x] {
        y = tree.parent[y].expect("reached non-root has a parent");
        back.push(y);
    }
    while x != y {
        x = tree.parent[x].expect("reached non-root has a parent");
        y = tree.parent[y].expect("reached non-root has a parent");
        front.push(x);
        back.push(y);
    }
    back.pop();
    front.extend(back.into_iter().rev());
    front
}

struct Recorder {
    trace: Option<Vec<TraceEvent>>,
}

impl Recorder {
    fn lower(&mut self, dt: &mut DeltaTables, i: usize, j: usize, value: Dist, rule: UpdateRule) {
        let slot = dt.upper_mut(i, j);
        if value < *slot {
            if let Some(t) = self.trace.as_mut() {
                t.push(TraceEvent::Update { i, j, old: to_option(*slot), new: value, rule });
            }
            *slot = value;
        }
    }
}

/// Runs path buying over all ordered center pairs `(i, j)`, `i != j`, in
/// row-major order.
///
/// `h` must already hold the cluster stars and the residual graph. For each
/// pair the bound `upper(i, j)` is first relaxed through every intermediate
/// center; if it still exceeds `delta(i, j) + 2`, the surviving edges of the
/// witness tree's path from `u_i` to `u_j` are bought and the bounds from
/// `u_i` to, and to `u_j` from, every center seen along the path are lowered.
pub fn buy_paths(
    c: &Clustering,
    dt: &mut DeltaTables,
    contracted: &[ContractedTree],
    h: &mut Spanner,
    trace: bool,
) -> Result<BuyOutcome, InvariantViolation> {
    let ell = c.ell();
    let cap = 5 * ell;
    let mut rec = Recorder { trace: trace.then(Vec::new) };
    let mut out = BuyOutcome::default();
    let mut per_color = vec![0usize; ell + 1];

    for i in 0..ell {
        for j in 0..ell {
            if i == j {
                continue;
            }
            for k in 0..ell {
                let via = add(dt.upper(i, k), dt.upper(k, j));
                rec.lower(dt, i, j, via, RULE_RELAX);
            }
            let delta = dt.delta(i, j);
            if dt.upper(i, j) <= add(delta, 2) {
                continue;
            }
            // upper > delta + 2 forces delta finite
            let k = dt.witness(i, j).ok_or(InvariantViolation::MissingWitness { i, j })?;
            let ct = &contracted[k];
            let (ui, uj) = (c.centers[i], c.centers[j]);
            let path = tree_path(&c.trees[k], ui, uj);
            let tree_len = path.len() - 1;
            if tree_len as Dist > delta {
                return Err(InvariantViolation::TreePathTooLong { i, j, len: tree_len, delta });
            }

            // positions on the tree path kept after contraction, with y = position
            let last = path.len() - 1;
            let kept: Vec<usize> = (0..path.len())
                .filter(|&q| {
                    q == 0
                        || q == last
                        || ct.survives(path[q - 1], path[q])
                        || ct.survives(path[q], path[q + 1])
                })
                .collect();

            per_color.iter_mut().for_each(|x| *x = 0);
            let mut unclustered = 0;
            for &q in &kept {
                let w = path[q];
                match c.color[w] {
                    0 => unclustered += 1,
                    col => per_color[col as usize] += 1,
                }
            }
            let (worst_color, max_per_color) = per_color
                .iter()
                .copied()
                .enumerate()
                .max_by_key(|&(col, cnt)| (cnt, std::cmp::Reverse(col)))
                .unwrap_or((0, 0));
            if unclustered > 0 {
                let node = kept.iter().map(|&q| path[q]).find(|&w| !c.is_clustered(w)).unwrap_or(ui);
                return Err(InvariantViolation::UnclusteredOnPath { i, j, node });
            }
            if max_per_color > 5 {
                return Err(InvariantViolation::ColorOverflow {
                    i,
                    j,
                    color: worst_color as u32,
                    count: max_per_color,
                });
            }
            if kept.len() > cap {
                return Err(InvariantViolation::PathTooLong { i, j, nodes: kept.len(), cap });
            }

            let mut new_edges = 0;
            for q in 1..path.len() {
                let (a, b) = (path[q - 1], path[q]);
                if ct.survives(a, b) && h.add(a, b, Provenance::BoughtPath { i, j }) {
                    new_edges += 1;
                    if let Some(t) = rec.trace.as_mut() {
                        t.push(TraceEvent::Edge { u: a.min(b), v: a.max(b) });
                    }
                }
            }
            out.bought_edges += new_edges;

            for &q in &kept {
                let r = c.cluster_of(path[q]).expect("checked clustered above");
                let y = q as Dist;
                rec.lower(dt, i, r, y + 1, RULE_FROM_SOURCE);
                rec.lower(dt, r, j, delta - y + 1, RULE_TO_TARGET);
            }

            out.paths.push(PathRecord {
                i,
                j,
                k,
                tree_len,
                nodes: kept.len(),
                new_edges,
                max_per_color,
                unclustered_nodes: unclustered,
            });
        }
    }
    debug_assert!((0..ell).all(|i| (0..ell).all(|j| dt.upper(i, j) <= add(dt.delta(i, j), 2)
        || dt.delta(i, j) == INF)));
    out.trace = rec.trace;
    Ok(out)
}
