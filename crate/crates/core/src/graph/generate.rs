use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{Graph, GraphError, NodeId};

/// Graph families for the test corpus and benchmarks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum Family {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    /// `n` nodes total, node 0 is the hub.
    Star { n: usize },
    /// `rows × cols` lattice, node `r * cols + c`.
    Grid { rows: usize, cols: usize },
    /// `m` distinct edges drawn uniformly at random.
    Gnm { n: usize, m: usize },
}

impl Family {
    pub fn node_count(&self) -> usize {
        match *self {
            Family::Path { n }
            | Family::Cycle { n }
            | Family::Complete { n }
            | Family::Star { n }
            | Family::Gnm { n, .. } => n,
            Family::Grid { rows, cols } => rows * cols,
        }
    }

    pub fn label(&self) -> String {
        match *self {
            Family::Path { n } => format!("path(n={n})"),
            Family::Cycle { n } => format!("cycle(n={n})"),
            Family::Complete { n } => format!("complete(n={n})"),
            Family::Star { n } => format!("star(n={n})"),
            Family::Grid { rows, cols } => format!("grid({rows}x{cols})"),
            Family::Gnm { n, m } => format!("gnm(n={n},m={m})"),
        }
    }
}

/// Maps a linear index in `0..n(n-1)/2` to the pair `(u, v)`, `u < v`, in
/// lexicographic order.
fn unrank_pair(n: usize, mut k: usize) -> (NodeId, NodeId) {
    let mut u = 0;
    loop {
        let row = n - 1 - u;
        if k < row {
            return (u, u + 1 + k);
        }
        k -= row;
        u += 1;
    }
}

/// Builds a member of `family`. The seed only matters for `Gnm`; the same
/// `(family, seed)` always yields the identical graph.
pub fn generate(family: &Family, seed: u64) -> Result<Graph, GraphError> {
    let edges: Vec<(NodeId, NodeId)> = match *family {
        Family::Path { n } => (1..n).map(|v| (v - 1, v)).collect(),
        Family::Cycle { n } => {
            if n < 3 {
                return Err(GraphError::InfeasibleParams(format!("cycle needs n >= 3, got {n}")));
            }
            (1..n).map(|v| (v - 1, v)).chain(std::iter::once((0, n - 1))).collect()
        }
        Family::Complete { n } => (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect(),
        Family::Star { n } => (1..n).map(|v| (0, v)).collect(),
        Family::Grid { rows, cols } => {
            let mut e = Vec::new();
            for r in 0..rows {
                for c in 0..cols {
                    let v = r * cols + c;
                    if c + 1 < cols {
                        e.push((v, v + 1));
                    }
                    if r + 1 < rows {
                        e.push((v, v + cols));
                    }
                }
            }
            e
        }
        Family::Gnm { n, m } => {
            let pairs = n * n.saturating_sub(1) / 2;
            if m > pairs {
                return Err(GraphError::InfeasibleParams(format!(
                    "gnm with n = {n} has only {pairs} possible edges, asked for {m}"
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut ranks = index::sample(&mut rng, pairs, m).into_vec();
            ranks.sort_unstable();
            ranks.into_iter().map(|k| unrank_pair(n, k)).collect()
        }
    };
    Graph::from_edges(family.node_count(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unrank_covers_all_pairs_in_order() {
        let n = 6;
        let all: Vec<_> = (0..15).map(|k| unrank_pair(n, k)).collect();
        let expected: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        assert_eq!(all, expected);
    }

    #[test]
    fn fixed_families() {
        assert_eq!(generate(&Family::Complete { n: 5 }, 0).unwrap().m(), 10);
        let c4 = generate(&Family::Cycle { n: 4 }, 0).unwrap();
        assert_eq!(c4.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        let grid = generate(&Family::Grid { rows: 3, cols: 4 }, 0).unwrap();
        assert_eq!(grid.n(), 12);
        assert_eq!(grid.m(), 3 * 3 + 2 * 4);
        assert_eq!(generate(&Family::Star { n: 10 }, 0).unwrap().degree(0), 9);
    }

    #[test]
    fn gnm_is_deterministic() {
        let f = Family::Gnm { n: 50, m: 400 };
        let a = generate(&f, 7).unwrap();
        let b = generate(&f, 7).unwrap();
        assert_eq!(a.m(), 400);
        assert_eq!(a, b);
        assert_ne!(a, generate(&f, 8).unwrap());
    }

    #[test]
    fn gnm_rejects_too_many_edges() {
        assert!(matches!(
            generate(&Family::Gnm { n: 4, m: 7 }, 0),
            Err(GraphError::InfeasibleParams(_))
        ));
        assert_eq!(generate(&Family::Gnm { n: 4, m: 6 }, 0).unwrap().m(), 6);
    }
}
