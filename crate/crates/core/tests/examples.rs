//! Worked examples on specific seeded graphs, each checked against an
//! independent brute-force computation.

mod common;

use addspan::clustering::{build_clustering, ceil_cbrt, ceil_sqrt};
use addspan::graph::{exact_apsp, generate, Family, Graph};
use addspan::oracle::build_oracle;
use addspan::spanner2::build_2_spanner;
use addspan::spanner8::{build_8_spanner, compute_delta, eight_spanner_edge_bound};
use addspan::verify::{check_delta_sandwich, check_path_buying, check_portals, check_stretch, verify_clustering};
use addspan::INF;

fn gnm(n: usize, m: usize, seed: u64) -> Graph {
    generate(&Family::Gnm { n, m }, seed).unwrap()
}

fn assert_clean(report: &addspan::verify::VerificationReport) {
    let bad: Vec<_> = report.failures().collect();
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn gnm_generation_is_reproducible() {
    let a = gnm(50, 400, 7);
    let b = gnm(50, 400, 7);
    assert_eq!(a.m(), 400);
    assert_eq!(a.edges().collect::<Vec<_>>(), b.edges().collect::<Vec<_>>());
    assert_ne!(a.edges().collect::<Vec<_>>(), gnm(50, 400, 8).edges().collect::<Vec<_>>());
}

#[test]
fn clustering_on_gnm_200() {
    let g = gnm(200, 3000, 1);
    let c = build_clustering(&g, ceil_cbrt(200));
    assert!(c.ell() > 0);
    assert_clean(&verify_clustering(&g, &c));
}

#[test]
fn clustering_work_is_quadratic() {
    // the counter covers every scan and BFS; 6 n^2 is the budget the bench reports against
    const K: u64 = 6;
    for inst in common::corpus() {
        let n = inst.graph.n() as u64;
        for t in [ceil_sqrt(inst.graph.n()), ceil_cbrt(inst.graph.n())] {
            let c = build_clustering(&inst.graph, t);
            assert!(c.work <= K * n * n, "{} t={t}: work {} > {}", inst.label, c.work, K * n * n);
        }
    }
}

#[test]
fn same_color_nodes_are_close() {
    let g = gnm(120, 1500, 4);
    let c = build_clustering(&g, ceil_cbrt(120));
    let d = exact_apsp(&g);
    for u in 0..120 {
        for v in 0..120 {
            if c.color[u] != 0 && c.color[u] == c.color[v] {
                assert!(d.get(u, v) <= 2, "({u},{v})");
            }
        }
    }
}

#[test]
fn two_spanner_on_gnm_100() {
    let g = gnm(100, 2000, 3);
    let h = build_2_spanner(&g);
    assert!(h.spanner.len() <= 2000);
    assert!(h.spanner.len() <= h.structural_bound());
    let hg = h.spanner.to_graph();
    let (dg, dh) = (exact_apsp(&g), exact_apsp(&hg));
    let mut worst = 0;
    for u in 0..100 {
        for v in 0..100 {
            worst = worst.max(dh.get(u, v) - dg.get(u, v));
        }
    }
    assert!(worst <= 2, "stretch {worst}");
}

#[test]
fn two_spanner_keeps_components_apart() {
    let mut edges: Vec<_> = gnm(40, 300, 2).edges().collect();
    edges.extend(gnm(40, 300, 3).edges().map(|(u, v)| (u + 40, v + 40)));
    let g = Graph::from_edges(80, edges).unwrap();
    let h = build_2_spanner(&g).spanner.to_graph();
    let dh = exact_apsp(&h);
    assert_eq!(dh.get(0, 79), INF);
    assert_clean(&check_stretch(&g, &h, 2));
}

#[test]
fn delta_sandwich_on_gnm_150() {
    let g = gnm(150, 2500, 5);
    let c = build_clustering(&g, ceil_cbrt(150));
    let dt = compute_delta(&c);
    for i in 0..c.ell() {
        assert_eq!(dt.delta(i, i), 0);
    }
    assert_clean(&check_delta_sandwich(&g, &c, &dt));
}

#[test]
fn path_buying_on_gnm_250() {
    let g = gnm(250, 8000, 11);
    let h = build_8_spanner(&g).unwrap();
    let ell = h.clustering.ell();
    assert!(h.outcome.bought_edges <= 25 * ell * ell);
    for i in 0..ell {
        for j in 0..ell {
            let d = h.tables.delta(i, j);
            if d != INF {
                assert!(h.tables.upper(i, j) <= d + 2, "({i},{j})");
            }
        }
    }
    assert_clean(&check_path_buying(&g, &h));
}

#[test]
fn eight_spanner_on_larger_gnm() {
    let n = 400;
    for m in common::densities(n) {
        for seed in common::SEEDS {
            let g = gnm(n, m, seed);
            let h = build_8_spanner(&g).unwrap();
            assert!(h.spanner.len() as f64 <= eight_spanner_edge_bound(n));
            assert_clean(&check_stretch(&g, &h.spanner.to_graph(), 8));
        }
    }
}

#[test]
fn complete_graph_gets_stretch_two() {
    for n in [5, 17, 40] {
        let g = generate(&Family::Complete { n }, 0).unwrap();
        let h = build_8_spanner(&g).unwrap().spanner.to_graph();
        let r = check_stretch(&g, &h, 2);
        assert_clean(&r);
    }
}

#[test]
fn portals_on_gnm_200() {
    let g = gnm(200, 5000, 13);
    let o = build_oracle(&g).unwrap();
    assert!(o.ell() > 0);
    assert_clean(&check_portals(&o));
}

#[test]
fn oracle_on_complete_graph() {
    let g = generate(&Family::Complete { n: 9 }, 0).unwrap();
    let o = build_oracle(&g).unwrap();
    for u in 0..9 {
        assert_eq!(o.query(u, u).unwrap(), 0);
        for v in 0..9 {
            if u != v {
                let est = o.query(u, v).unwrap();
                assert!((1..=3).contains(&est));
            }
        }
    }
}
