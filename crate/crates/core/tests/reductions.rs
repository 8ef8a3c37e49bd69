mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wildcard_diversity::reductions::harness::{max_independent_set, twice_subdivided};
use wildcard_diversity::reductions::{
    distance_graph, embed_subdivided, reduce_is_to_diversity, reduce_is_to_r2, Graph, R2Mode,
};
use wildcard_diversity::solver::oracle_solve;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, any::<u64>(), 0.0f64..=1.0).prop_map(|(n, seed, p)| Graph::random_gnp(n, p, &mut ChaCha8Rng::seed_from_u64(seed)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn distance_law(g in graph(8)) {
        let inst = reduce_is_to_diversity(&g, 1).unwrap();
        let n = g.n();
        prop_assert_eq!(inst.d(), g.m() + n * (n - 1));
        for i in 0..n {
            prop_assert_eq!(inst.row(i).to_string().matches('1').count(), n - 1);
            for j in i + 1..n {
                let want = if g.has_edge(i + 1, j + 1) { 2 * n - 4 } else { 2 * n - 2 };
                prop_assert_eq!(inst.row(i).delta_unchecked(inst.row(j)), want);
            }
        }
    }

    #[test]
    fn is_equivalence(g in graph(6), k in 1usize..=3) {
        let yes = oracle_solve(&reduce_is_to_diversity(&g, k).unwrap()).unwrap().is_yes();
        prop_assert_eq!(yes, common::independence_number(&g) >= k);
    }

    #[test]
    fn embedding_isomorphism(h in graph(8)) {
        let rows = embed_subdivided(&h);
        prop_assert!(rows.iter().all(|r| r.len() == h.n() + h.m()));
        let g = distance_graph(&rows, 1).unwrap();
        prop_assert_eq!(g.edge_set(), h.subdivided_with_leaves().edge_set());
    }

    #[test]
    fn subdivision_rows_are_close(g in graph(7)) {
        let n = g.n();
        for mode in R2Mode::ALL {
            let inst = reduce_is_to_r2(&g, 0, mode);
            prop_assert_eq!((inst.d(), inst.r(), inst.k()), (2 * n, 2, g.m()));
            for (l, &(i, j)) in g.edges().iter().enumerate() {
                let (e1, e2) = (inst.row(n + 2 * l), inst.row(n + 2 * l + 1));
                let want = if mode == R2Mode::Verbatim && j == i + 1 { 1 } else { 2 };
                prop_assert_eq!(e1.delta_unchecked(e2), want);
            }
        }
    }

    #[test]
    fn independence_number_agrees(g in graph(9)) {
        prop_assert_eq!(max_independent_set(&g), common::independence_number(&g));
    }

    #[test]
    fn disjoint_pairs_edges_match_the_subdivision(g in graph(6)) {
        // every row pair at distance <= 2 that is not an edge of the
        // twice-subdivided graph shares an endpoint with the other row
        let inst = reduce_is_to_r2(&g, 0, R2Mode::DisjointPairs);
        let target = twice_subdivided(&g);
        for (a, b) in target.edges() {
            prop_assert!(inst.row(a - 1).delta_unchecked(inst.row(b - 1)) <= 2);
        }
    }
}

#[test]
fn graph_file_round_trip() {
    let g = Graph::random_with_edges(7, 9, &mut ChaCha8Rng::seed_from_u64(1));
    let back: Graph = g.to_string().parse().unwrap();
    assert_eq!(g, back);
}
