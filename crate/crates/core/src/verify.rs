//! Brute-force checkers for every guarantee of the constructions.
//!
//! Nothing here calls into the construction code paths. The checkers only use
//! graph primitives (BFS, exact all-pairs distances) and the plain data the
//! constructions hand back, so a bug in a construction cannot hide itself.

use std::collections::{HashMap, HashSet, VecDeque};

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::clustering::Clustering;
use crate::dist::{add, Dist, INF};
use crate::graph::{bfs, bfs_depths_into, canonical, exact_apsp, DistMatrix, EdgeSet, Graph, NodeId};
use crate::oracle::{DistanceOracle, SubOracle};
use crate::spanner::Spanner;
use crate::spanner8::{DeltaTables, EightSpanner, TraceEvent};

/// Largest graph checked over all pairs; bigger inputs are sampled.
pub const EXHAUSTIVE_LIMIT: usize = 300;
/// Sources used when sampling.
pub const SAMPLED_SOURCES: usize = 200;
pub const SAMPLE_SEED: u64 = 0x5EED_5EED;
/// Largest graph accepted by [`replay_delta_log`].
pub const REPLAY_LIMIT: usize = 120;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Node { v: NodeId },
    Pair { u: NodeId, v: NodeId },
    Edge { u: NodeId, v: NodeId },
    Centers { i: usize, j: usize },
    Cluster { i: usize },
    Record { index: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witness: Option<Witness>,
    pub observed: Option<f64>,
    pub bound: Option<f64>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub passed: usize,
    pub failed: usize,
}

impl VerificationReport {
    fn push(&mut self, check: Check) {
        if check.passed {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
        self.checks.push(check);
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn extend(&mut self, other: VerificationReport) {
        for c in other.checks {
            self.push(c);
        }
    }
}

/// Builder for one check: it passes unless a witness is recorded.
struct Probe {
    name: String,
    witness: Option<Witness>,
    observed: Option<f64>,
    bound: Option<f64>,
    note: Option<String>,
}

impl Probe {
    fn new(name: impl Into<String>) -> Self {
        Probe { name: name.into(), witness: None, observed: None, bound: None, note: None }
    }

    fn fail(&mut self, w: Witness) {
        if self.witness.is_none() {
            self.witness = Some(w);
        }
    }

    fn failed(&self) -> bool {
        self.witness.is_some()
    }

    fn observed(mut self, x: f64) -> Self {
        self.observed = Some(x);
        self
    }

    fn bound(mut self, x: f64) -> Self {
        self.bound = Some(x);
        self
    }

    fn note(mut self, s: impl Into<String>) -> Self {
        self.note = Some(s.into());
        self
    }

    fn finish(self, report: &mut VerificationReport) {
        report.push(Check {
            passed: self.witness.is_none(),
            name: self.name,
            witness: self.witness,
            observed: self.observed,
            bound: self.bound,
            note: self.note,
        });
    }
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("replay needs n <= {limit}, got {n}")]
    TooLarge { n: usize, limit: usize },
}

fn closed_unclaimed(g: &Graph, v: NodeId, claimed: &[bool]) -> usize {
    usize::from(!claimed[v]) + g.neighbors(v).iter().filter(|&&w| !claimed[w]).count()
}

fn distance_rows(g: &Graph, sources: &[NodeId]) -> Vec<Vec<Dist>> {
    let mut queue = VecDeque::new();
    sources
        .iter()
        .map(|&s| {
            let mut d = vec![INF; g.n()];
            bfs_depths_into(g, s, &mut d, &mut queue);
            d
        })
        .collect()
}

/// Per source, whether *every* shortest path to each target stays inside the
/// residual graph. A pair whose flag is false has some shortest path that
/// leaves it.
fn all_shortest_paths_residual(g: &Graph, residual: &EdgeSet, src: NodeId) -> (Vec<Dist>, Vec<bool>) {
    let n = g.n();
    let tree = bfs(g, src);
    let mut order: Vec<NodeId> = (0..n).filter(|&v| tree.depth[v] != INF).collect();
    order.sort_by_key(|&v| tree.depth[v]);
    let mut inside = vec![false; n];
    inside[src] = true;
    for &v in order.iter().skip(1) {
        let dv = tree.depth[v];
        inside[v] = g
            .neighbors(v)
            .iter()
            .filter(|&&p| tree.depth[p] != INF && tree.depth[p] + 1 == dv)
            .all(|&p| inside[p] && residual.contains(p, v));
    }
    (tree.depth, inside)
}

/// Re-derives the greedy clustering from scratch and compares every part of `c`.
pub fn verify_clustering(g: &Graph, c: &Clustering) -> VerificationReport {
    let n = g.n();
    let ell = c.centers.len();
    let t = c.t;
    let mut report = VerificationReport::default();

    let mut shape = Probe::new("clustering shape");
    if c.color.len() != n || c.trees.len() != ell || c.cluster_sizes.len() != ell {
        shape.fail(Witness::Cluster { i: ell });
    }
    if let Some(i) = c.centers.iter().position(|&u| u >= n) {
        shape.fail(Witness::Cluster { i });
    }
    let broken = shape.failed();
    shape.finish(&mut report);
    if broken {
        return report;
    }

    let mut membership = Probe::new("colored nodes are adjacent to their center");
    for v in 0..n {
        let col = c.color[v] as usize;
        if col > ell {
            membership.fail(Witness::Node { v });
        } else if col >= 1 {
            let u = c.centers[col - 1];
            if v != u && !g.has_edge(u, v) {
                membership.fail(Witness::Node { v });
            }
        }
    }
    membership.finish(&mut report);

    let mut contents = Probe::new("clusters are disjoint and match the greedy replay");
    let mut sizes = Probe::new("every cluster has at least t nodes").bound(t as f64);
    let mut greedy = Probe::new("each center maximizes its unclaimed closed neighborhood");
    let mut trees = Probe::new("each tree is a BFS tree of the residual graph before its cluster");
    let mut claimed = vec![false; n];
    let mut min_size = usize::MAX;

    for (i, &u) in c.centers.iter().enumerate() {
        let mut expected: Vec<NodeId> =
            std::iter::once(u).chain(g.neighbors(u).iter().copied()).filter(|&v| !claimed[v]).collect();
        expected.sort_unstable();
        let label = (i + 1) as u32;
        let actual: Vec<NodeId> = (0..n).filter(|&v| c.color[v] == label).collect();
        if expected != actual || c.cluster_sizes[i] != expected.len() {
            let odd = expected
                .iter()
                .find(|v| !actual.contains(v))
                .or_else(|| actual.iter().find(|v| !expected.contains(v)))
                .copied()
                .unwrap_or(u);
            contents.fail(Witness::Node { v: odd });
        }
        min_size = min_size.min(expected.len());
        if expected.len() < t {
            sizes.fail(Witness::Cluster { i });
        }
        for w in 0..n {
            let s = closed_unclaimed(g, w, &claimed);
            if s > expected.len() || (s == expected.len() && w < u) {
                greedy.fail(Witness::Node { v: w });
                break;
            }
        }

        let before = Graph::from_edges(n, g.edges().filter(|&(a, b)| !(claimed[a] && claimed[b]))).unwrap();
        let truth = bfs(&before, u);
        let tree = &c.trees[i];
        if tree.root != u || tree.depth.len() != n || tree.parent.len() != n {
            trees.fail(Witness::Cluster { i });
        } else {
            for v in 0..n {
                let ok = tree.depth[v] == truth.depth[v]
                    && match tree.parent[v] {
                        None => v == u || truth.depth[v] == INF,
                        Some(p) => {
                            p < n && before.has_edge(v, p) && add(tree.depth[p], 1) == tree.depth[v]
                        }
                    };
                if !ok {
                    trees.fail(Witness::Node { v });
                    break;
                }
            }
        }

        for v in expected {
            claimed[v] = true;
        }
    }
    contents.finish(&mut report);
    if ell > 0 {
        sizes = sizes.observed(min_size as f64);
    }
    sizes.finish(&mut report);
    greedy.finish(&mut report);
    trees.finish(&mut report);

    let mut done = Probe::new("no unclaimed closed neighborhood reaches t").bound(t as f64);
    let mut largest = 0;
    for v in 0..n {
        let s = closed_unclaimed(g, v, &claimed);
        largest = largest.max(s);
        if s >= t {
            done.fail(Witness::Node { v });
        }
    }
    done.observed(largest as f64).finish(&mut report);

    let mut count = Probe::new("ell <= n / t").observed(ell as f64).bound(n as f64 / t as f64);
    if ell * t > n {
        count.fail(Witness::Cluster { i: ell });
    }
    count.finish(&mut report);

    let mut residual = Probe::new("residual graph is exactly the edges with an unclustered endpoint");
    let expected: HashSet<(NodeId, NodeId)> = g.edges().filter(|&(a, b)| !(claimed[a] && claimed[b])).collect();
    for (a, b) in c.residual.iter() {
        if !expected.contains(&canonical(a, b)) {
            residual.fail(Witness::Edge { u: a, v: b });
        }
    }
    if let Some(&(a, b)) = expected.iter().find(|&&(a, b)| !c.residual.contains(a, b)) {
        residual.fail(Witness::Edge { u: a, v: b });
    }
    residual.finish(&mut report);

    let mut budget = Probe::new("residual edges <= n t").observed(c.residual.len() as f64).bound((n * t) as f64);
    if c.residual.len() > n * t {
        budget.fail(Witness::Cluster { i: ell });
    }
    budget.finish(&mut report);

    report
}

/// Every pair with a shortest path leaving the residual graph has some tree
/// `i` with `depth_i(u) + depth_i(v) <= d(u, v) + 2`.
pub fn check_detour(g: &Graph, c: &Clustering) -> VerificationReport {
    let mut probe = Probe::new("detour through some cluster tree costs at most +2");
    let mut checked = 0usize;
    for u in 0..g.n() {
        let (dist, inside) = all_shortest_paths_residual(g, &c.residual, u);
        for v in u + 1..g.n() {
            if dist[v] == INF || inside[v] {
                continue;
            }
            checked += 1;
            let best = c.trees.iter().map(|t| add(t.depth[u], t.depth[v])).min().unwrap_or(INF);
            if best > dist[v] + 2 {
                probe.fail(Witness::Pair { u, v });
            }
        }
    }
    let mut report = VerificationReport::default();
    probe.observed(checked as f64).note("observed = pairs whose shortest paths leave the residual graph").finish(&mut report);
    report
}

/// Checks `d_G(u_i, u_j) <= delta(i, j)` for all center pairs, and
/// `delta(i, j) <= d_G(u_i, u_j) + 2` whenever a shortest path leaves the
/// residual graph.
pub fn check_delta_sandwich(g: &Graph, c: &Clustering, dt: &DeltaTables) -> VerificationReport {
    let ell = c.centers.len();
    let mut lower = Probe::new("delta never underestimates center distances");
    let mut upper = Probe::new("delta within +2 when shortest paths leave the residual graph");
    let mut sym = Probe::new("delta is symmetric with zero diagonal");
    for i in 0..ell {
        let (dist, inside) = all_shortest_paths_residual(g, &c.residual, c.centers[i]);
        for j in 0..ell {
            let d = dist[c.centers[j]];
            let est = dt.delta(i, j);
            if est < d {
                lower.fail(Witness::Centers { i, j });
            }
            if d != INF && !inside[c.centers[j]] && est > d + 2 {
                upper.fail(Witness::Centers { i, j });
            }
            if est != dt.delta(j, i) || (i == j && est != 0) {
                sym.fail(Witness::Centers { i, j });
            }
        }
    }
    let mut report = VerificationReport::default();
    lower.finish(&mut report);
    upper.finish(&mut report);
    sym.finish(&mut report);
    report
}

/// Exhaustive (or, above [`EXHAUSTIVE_LIMIT`], sampled) additive stretch check.
pub fn check_stretch(g: &Graph, h: &Graph, k: Dist) -> VerificationReport {
    let mut report = VerificationReport::default();
    let mut sub = Probe::new("spanner is a subgraph");
    if h.n() != g.n() {
        sub.fail(Witness::Node { v: h.n().min(g.n()) });
    } else if let Some((u, v)) = h.edges().find(|&(u, v)| !g.has_edge(u, v)) {
        sub.fail(Witness::Edge { u, v });
    }
    let broken = sub.failed();
    sub.finish(&mut report);
    if broken {
        return report;
    }

    let n = g.n();
    let (sources, note): (Vec<NodeId>, String) = if n <= EXHAUSTIVE_LIMIT {
        ((0..n).collect(), "exhaustive".into())
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        let mut s = index::sample(&mut rng, n, SAMPLED_SOURCES.min(n)).into_vec();
        s.sort_unstable();
        (s, format!("sampled: {} sources, seed {:#x}", SAMPLED_SOURCES.min(n), SAMPLE_SEED))
    };

    let mut probe = Probe::new(format!("additive stretch <= {k}")).bound(k as f64).note(note);
    let mut worst: Option<(Dist, NodeId, NodeId)> = None;
    let mut queue = VecDeque::new();
    let (mut dg, mut dh) = (vec![INF; n], vec![INF; n]);
    for &u in &sources {
        bfs_depths_into(g, u, &mut dg, &mut queue);
        bfs_depths_into(h, u, &mut dh, &mut queue);
        for v in 0..n {
            if dg[v] == INF {
                continue;
            }
            let stretch = if dh[v] == INF { INF } else { dh[v] - dg[v] };
            if worst.is_none_or(|(w, _, _)| stretch > w) {
                worst = Some((stretch, u, v));
            }
            if stretch > k {
                probe.fail(Witness::Pair { u, v });
            }
        }
    }
    let observed = worst.map_or(0.0, |(s, _, _)| if s == INF { f64::INFINITY } else { s as f64 });
    probe.observed(observed).finish(&mut report);
    report
}

/// Which closed-form edge bound to audit against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeBudget {
    /// `2n^{3/2} + n`; tree edges `<= nℓ`, residual `<= nt`.
    TwoSpanner,
    /// `26n^{4/3} + n`; star `<= n`, residual `<= nt`, bought `<= 25ℓ²`.
    EightSpanner,
}

pub fn check_edge_budget(h: &Spanner, budget: EdgeBudget, t: usize, ell: usize) -> VerificationReport {
    let n = h.base_n;
    let nf = n as f64;
    let counts = h.counts();
    let mut report = VerificationReport::default();
    let mut item = |name: &str, observed: usize, bound: f64| {
        let mut p = Probe::new(name).observed(observed as f64).bound(bound);
        if observed as f64 > bound {
            p.fail(Witness::Cluster { i: ell });
        }
        p.finish(&mut report);
    };
    match budget {
        EdgeBudget::TwoSpanner => {
            item("edges <= 2 n^1.5 + n", h.len(), 2.0 * nf.powf(1.5) + nf);
            item("edges <= n ell + n t", h.len(), (n * ell + n * t) as f64);
            item("tree edges <= n ell", counts.tree, (n * ell) as f64);
            item("residual edges <= n t", counts.residual, (n * t) as f64);
        }
        EdgeBudget::EightSpanner => {
            item("edges <= 26 n^(4/3) + n", h.len(), 26.0 * nf.powf(4.0 / 3.0) + nf);
            item("star edges <= n", counts.cluster_star, nf);
            item("residual edges <= n t", counts.residual, (n * t) as f64);
            item("bought edges <= 25 ell^2", counts.bought, (25 * ell * ell) as f64);
        }
    }
    report
}

/// Path-buying post-conditions: per-color cap, path length cap, terminal
/// bounds against exact spanner distances, and center stretch.
pub fn check_path_buying(g: &Graph, built: &EightSpanner) -> VerificationReport {
    let c = &built.clustering;
    let dt = &built.tables;
    let ell = c.centers.len();
    let mut report = VerificationReport::default();

    let mut zero = Probe::new("bought paths avoid unclustered nodes");
    let mut five = Probe::new("bought paths have at most 5 nodes per color").bound(5.0);
    let mut cap = Probe::new("bought paths have at most 5 ell nodes").bound((5 * ell) as f64);
    let (mut worst_color, mut longest) = (0, 0);
    for (idx, p) in built.outcome.paths.iter().enumerate() {
        worst_color = worst_color.max(p.max_per_color);
        longest = longest.max(p.nodes);
        if p.unclustered_nodes > 0 {
            zero.fail(Witness::Record { index: idx });
        }
        if p.max_per_color > 5 {
            five.fail(Witness::Record { index: idx });
        }
        if p.nodes > 5 * ell {
            cap.fail(Witness::Record { index: idx });
        }
    }
    // bought edges are clustered on both ends, independent of the records
    for ((u, v), why) in built.spanner.tagged_edges() {
        if matches!(why, crate::spanner::Provenance::BoughtPath { .. })
            && (c.color[u] == 0 || c.color[v] == 0 || !g.has_edge(u, v))
        {
            zero.fail(Witness::Edge { u, v });
        }
    }
    zero.finish(&mut report);
    five.observed(worst_color as f64).finish(&mut report);
    cap.observed(longest as f64).finish(&mut report);

    let h = built.spanner.to_graph();
    let dh = distance_rows(&h, &c.centers);
    let dg = distance_rows(g, &c.centers);
    let mut tight = Probe::new("terminal upper <= delta + 2");
    let mut sound = Probe::new("terminal upper >= spanner distance");
    let mut stretch = Probe::new("center stretch <= +4").bound(4.0);
    let mut worst = 0;
    for i in 0..ell {
        for j in 0..ell {
            let uj = c.centers[j];
            if dt.delta(i, j) != INF && dt.upper(i, j) > dt.delta(i, j) + 2 {
                tight.fail(Witness::Centers { i, j });
            }
            if dt.upper(i, j) < dh[i][uj] {
                sound.fail(Witness::Centers { i, j });
            }
            if dg[i][uj] != INF {
                let s = dh[i][uj].saturating_sub(dg[i][uj]);
                worst = worst.max(s);
                if dh[i][uj] == INF || s > 4 {
                    stretch.fail(Witness::Centers { i, j });
                }
            } else if dh[i][uj] != INF {
                stretch.fail(Witness::Centers { i, j });
            }
        }
    }
    tight.finish(&mut report);
    sound.finish(&mut report);
    stretch.observed(worst as f64).finish(&mut report);
    report
}

/// Replays a path-buying trace on top of the seeded spanner (stars plus
/// residual graph), checking that every logged bound is at least the exact
/// spanner distance at that moment, and that the log is self-consistent.
pub fn replay_delta_log(trace: &[TraceEvent], g: &Graph, c: &Clustering) -> Result<VerificationReport, VerifyError> {
    let n = g.n();
    if n > REPLAY_LIMIT {
        return Err(VerifyError::TooLarge { n, limit: REPLAY_LIMIT });
    }
    let ell = c.centers.len();
    let mut adj: Vec<Vec<NodeId>> = vec![Vec::new(); n];
    let mut present = HashSet::new();
    let mut link = |adj: &mut Vec<Vec<NodeId>>, u: NodeId, v: NodeId| {
        if present.insert(canonical(u, v)) {
            adj[u].push(v);
            adj[v].push(u);
        }
    };
    for v in 0..n {
        if c.color[v] != 0 {
            let u = c.centers[c.color[v] as usize - 1];
            if u != v {
                link(&mut adj, u, v);
            }
        }
    }
    for (u, v) in g.edges() {
        if c.color[u] == 0 || c.color[v] == 0 {
            link(&mut adj, u, v);
        }
    }

    let mut sound = Probe::new("every logged bound >= spanner distance at that point");
    let mut consistent = Probe::new("trace is internally consistent");
    let mut bounds: HashMap<(usize, usize), Dist> = HashMap::new();
    let mut cache: HashMap<usize, Vec<Dist>> = HashMap::new();
    let mut queue = VecDeque::new();
    for (index, ev) in trace.iter().enumerate() {
        match *ev {
            TraceEvent::Edge { u, v } => {
                if u >= n || v >= n || !g.has_edge(u, v) {
                    consistent.fail(Witness::Record { index });
                    continue;
                }
                link(&mut adj, u, v);
                cache.clear();
            }
            TraceEvent::Update { i, j, old, new, .. } => {
                if i >= ell || j >= ell {
                    consistent.fail(Witness::Record { index });
                    continue;
                }
                let current = *bounds.entry((i, j)).or_insert(if i == j { 0 } else { INF });
                let old = old.unwrap_or(INF);
                if old != current || new >= old {
                    consistent.fail(Witness::Record { index });
                }
                bounds.insert((i, j), new);
                let row = cache.entry(i).or_insert_with(|| {
                    let mut d = vec![INF; n];
                    bfs_depths_into(&adj, c.centers[i], &mut d, &mut queue);
                    d
                });
                if new < row[c.centers[j]] {
                    sound.fail(Witness::Record { index });
                }
            }
        }
    }
    let mut report = VerificationReport::default();
    sound.observed(trace.len() as f64).finish(&mut report);
    consistent.finish(&mut report);
    Ok(report)
}

/// Checks `d <= estimate <= 2d + 1` for all pairs (infinite exactly when
/// disconnected) and that the batch matrix matches per-pair queries.
pub fn check_oracle<S: SubOracle>(g: &Graph, o: &DistanceOracle<S>) -> VerificationReport {
    let d = exact_apsp(g);
    check_oracle_against(&d, o)
}

pub fn check_oracle_against<S: SubOracle>(d: &DistMatrix, o: &DistanceOracle<S>) -> VerificationReport {
    let n = d.n();
    let mut report = VerificationReport::default();
    let mut range = Probe::new("d <= estimate <= 2d + 1");
    let mut batch = Probe::new("all-pairs estimates equal per-pair queries");
    let matrix = o.all_pairs_estimates();
    let mut worst_excess: i64 = i64::MIN;
    for u in 0..n {
        for v in 0..n {
            let truth = d.get(u, v);
            let est = o.query(u, v).unwrap_or(0);
            if matrix.get(u, v) != est {
                batch.fail(Witness::Pair { u, v });
            }
            if truth == INF {
                if est != INF {
                    range.fail(Witness::Pair { u, v });
                }
                continue;
            }
            if est < truth || est == INF || est > 2 * truth + 1 {
                range.fail(Witness::Pair { u, v });
            }
            if est != INF {
                worst_excess = worst_excess.max(est as i64 - (2 * truth as i64 + 1));
            }
        }
    }
    let observed = if worst_excess == i64::MIN { 0.0 } else { worst_excess as f64 };
    range.observed(observed).note("observed = max(estimate - (2d + 1))").bound(0.0).finish(&mut report);
    batch.finish(&mut report);
    report
}

/// Recomputes the portal chain by a plain quadratic scan.
pub fn check_portals<S>(o: &DistanceOracle<S>) -> VerificationReport {
    let ell = o.ell();
    let mut chain = Probe::new("portals follow the lowest-index argmin chain");
    let mut mono = Probe::new("portal indices are non-increasing, strictly until index 0");
    if ell == 0 {
        if !o.portals.is_empty() {
            chain.fail(Witness::Node { v: 0 });
        }
    } else {
        for v in 0..o.n {
            let argmin_below = |limit: usize| -> usize {
                let mut best = 0;
                for i in 0..limit {
                    if o.tree_dist(v, i) < o.tree_dist(v, best) {
                        best = i;
                    }
                }
                best
            };
            let mut expect = [0usize; 4];
            expect[0] = argmin_below(ell);
            for j in 1..4 {
                expect[j] = if expect[j - 1] == 0 { 0 } else { argmin_below(expect[j - 1]) };
            }
            let got = o.portals[v].map(|x| x as usize);
            if got != expect {
                chain.fail(Witness::Node { v });
            }
            for j in 1..4 {
                if !(got[j] < got[j - 1] || (got[j] == 0 && got[j - 1] == 0)) {
                    mono.fail(Witness::Node { v });
                }
            }
        }
    }
    let mut report = VerificationReport::default();
    chain.finish(&mut report);
    mono.finish(&mut report);
    report
}
