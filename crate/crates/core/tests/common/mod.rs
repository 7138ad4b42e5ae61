#![allow(dead_code)]

use addspan::graph::{generate, Family, Graph};

pub const SIZES: [usize; 4] = [50, 100, 200, 300];
pub const SEEDS: [u64; 5] = [1, 2, 3, 4, 5];

pub struct Instance {
    pub label: String,
    pub graph: Graph,
}

fn grid_for(n: usize) -> Family {
    // squarest grid with at most n nodes
    let rows = (n as f64).sqrt() as usize;
    Family::Grid { rows, cols: n / rows }
}

/// Sparse `2n`, medium `⌈n^{1.5}⌉` and dense `⌊n²/8⌋` edge counts.
pub fn densities(n: usize) -> [usize; 3] {
    [2 * n, (n as f64).powf(1.5).ceil() as usize, n * n / 8]
}

/// The standard corpus: fixed families at every size plus gnm at every
/// size, density and seed.
pub fn corpus() -> Vec<Instance> {
    let mut out = Vec::new();
    for &n in &SIZES {
        for fam in [
            Family::Path { n },
            Family::Cycle { n },
            Family::Star { n },
            grid_for(n),
            Family::Complete { n },
        ] {
            out.push(Instance { label: fam.label(), graph: generate(&fam, 0).unwrap() });
        }
        for m in densities(n) {
            for &seed in &SEEDS {
                let fam = Family::Gnm { n, m };
                out.push(Instance { label: format!("{} seed={seed}", fam.label()), graph: generate(&fam, seed).unwrap() });
            }
        }
    }
    out
}
