use crate::clustering::Clustering;
use crate::dist::{add, Dist, INF};

/// Center-to-center distance tables.
///
/// `delta(i, j)` is the best two-tree estimate
/// `min_k depth_{T_k}(u_i) + depth_{T_k}(u_j)`, and `upper(i, j)` is the running
/// upper bound on the spanner distance between `u_i` and `u_j` maintained
/// while paths are bought. Indices are zero-based cluster indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaTables {
    pub ell: usize,
    pub delta: Vec<Dist>,
    /// Smallest `k` attaining `delta(i, j)`, `None` when the minimum is infinite.
    pub delta_witness: Vec<Option<usize>>,
    pub upper: Vec<Dist>,
}

impl DeltaTables {
    #[inline]
    pub fn delta(&self, i: usize, j: usize) -> Dist {
        self.delta[i * self.ell + j]
    }

    #[inline]
    pub fn witness(&self, i: usize, j: usize) -> Option<usize> {
        self.delta_witness[i * self.ell + j]
    }

    #[inline]
    pub fn upper(&self, i: usize, j: usize) -> Dist {
        self.upper[i * self.ell + j]
    }

    #[inline]
    pub(crate) fn upper_mut(&mut self, i: usize, j: usize) -> &mut Dist {
        &mut self.upper[i * self.ell + j]
    }
}

/// Fills `delta` and its witnesses in `O(ℓ^3)`; `upper` starts at 0 on the
/// diagonal and infinity elsewhere.
pub fn compute_delta(c: &Clustering) -> DeltaTables {
    let ell = c.ell();
    // depth_of[k][i] = depth of center i in tree k
    let depth_of: Vec<Vec<Dist>> = c
        .trees
        .iter()
        .map(|tree| c.centers.iter().map(|&u| tree.depth[u]).collect())
        .collect();

    let mut delta = vec![INF; ell * ell];
    let mut delta_witness = vec![None; ell * ell];
    for i in 0..ell {
        for j in 0..ell {
            let mut best = INF;
            let mut arg = None;
            for (k, row) in depth_of.iter().enumerate() {
                let d = add(row[i], row[j]);
                if d < best {
                    best = d;
                    arg = Some(k);
                }
            }
            delta[i * ell + j] = best;
            delta_witness[i * ell + j] = arg;
        }
    }

    let mut upper = vec![INF; ell * ell];
    for i in 0..ell {
        upper[i * ell + i] = 0;
    }
    DeltaTables { ell, delta, delta_witness, upper }
}
