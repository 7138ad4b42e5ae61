use proptest::prelude::*;

use addspan::clustering::build_clustering;
use addspan::graph::{bfs, exact_apsp, parse_edge_list, write_edge_list, Graph};
use addspan::oracle::{build_oracle_with, compute_portals, ExactSubgraphOracle};
use addspan::spanner2::build_2_spanner_with_t;
use addspan::spanner8::{build_8_spanner_with, EightSpannerOptions};
use addspan::verify::{check_oracle, check_path_buying, check_stretch, replay_delta_log, verify_clustering};
use addspan::INF;

/// Random simple graphs on up to `max_n` nodes, edges kept with probability
/// drawn per case so both sparse and dense inputs show up.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, 0.02f64..0.9).prop_flat_map(|(n, p)| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(proptest::bool::weighted(p), pairs).prop_map(move |keep| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if keep[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn clean(r: &addspan::verify::VerificationReport) -> bool {
    r.all_passed()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bfs_matches_apsp(g in arb_graph(40)) {
        let d = exact_apsp(&g);
        for root in 0..g.n() {
            prop_assert_eq!(&bfs(&g, root).depth[..], d.row(root));
        }
    }

    #[test]
    fn apsp_is_a_metric(g in arb_graph(30)) {
        let d = exact_apsp(&g);
        let n = g.n();
        for u in 0..n {
            prop_assert_eq!(d.get(u, u), 0);
            for v in 0..n {
                prop_assert_eq!(d.get(u, v), d.get(v, u));
                for w in 0..n {
                    if d.get(u, w) != INF && d.get(w, v) != INF {
                        prop_assert!(d.get(u, v) <= d.get(u, w) + d.get(w, v));
                    }
                }
            }
        }
    }

    #[test]
    fn edge_list_roundtrip(g in arb_graph(40)) {
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf).unwrap();
        let back = parse_edge_list(std::str::from_utf8(&buf).unwrap()).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn clustering_is_valid_for_any_threshold(g in arb_graph(50), t in 1usize..8) {
        let c = build_clustering(&g, t);
        prop_assert!(c.ell() * t <= g.n());
        prop_assert!(clean(&verify_clustering(&g, &c)));
    }

    #[test]
    fn two_spanner_stretch(g in arb_graph(50), t in 1usize..8) {
        let h = build_2_spanner_with_t(&g, t);
        prop_assert!(h.spanner.len() <= h.structural_bound());
        prop_assert!(clean(&check_stretch(&g, &h.spanner.to_graph(), 2)));
    }

    #[test]
    fn eight_spanner_invariants(g in arb_graph(60), t in 1usize..6) {
        let h = build_8_spanner_with(&g, &EightSpannerOptions { t: Some(t), trace: true }).unwrap();
        prop_assert!(clean(&check_stretch(&g, &h.spanner.to_graph(), 8)));
        prop_assert!(clean(&check_path_buying(&g, &h)));
        let log = h.outcome.trace.as_ref().unwrap();
        prop_assert!(clean(&replay_delta_log(log, &g, &h.clustering).unwrap()));
    }

    #[test]
    fn oracle_guarantee(g in arb_graph(50), t in 1usize..6) {
        let o = build_oracle_with(&g, Some(t), ExactSubgraphOracle::new).unwrap();
        prop_assert!(clean(&check_oracle(&g, &o)));
    }

    #[test]
    fn portal_indices_descend(row in proptest::collection::vec(0u32..6, 1..20)) {
        let p = compute_portals(&row, &mut Vec::new());
        for j in 0..4 {
            let limit = if j == 0 { row.len() } else { p[j - 1] as usize };
            if j > 0 && limit == 0 {
                prop_assert_eq!(p[j], 0);
                continue;
            }
            let best = *row[..limit].iter().min().unwrap();
            prop_assert_eq!(row[p[j] as usize], best);
            prop_assert!(row[..p[j] as usize].iter().all(|&d| d > best));
        }
    }
}
