mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wildcard_diversity::fo::{self, corpus, eval_fo, parse_fo, phi_v, rewrite_fo, Formula};
use wildcard_diversity::reductions::Graph;

const VARS: [&str; 3] = ["x", "y", "z"];

/// Random sentences over x, y, z; quantifiers are placed so that every
/// variable occurrence is bound.
fn sentence() -> impl Strategy<Value = Formula> {
    fn body(depth: u32, bound: Vec<&'static str>) -> BoxedStrategy<Formula> {
        let atom = {
            let b = bound.clone();
            (0..b.len(), 0..b.len(), any::<bool>())
                .prop_map(move |(i, j, e)| if e { fo::edge(b[i], b[j]) } else { fo::eq(b[i], b[j]) })
                .boxed()
        };
        if depth == 0 {
            return atom;
        }
        let quant = {
            let b = bound.clone();
            (0..VARS.len(), any::<bool>()).prop_flat_map(move |(v, ex)| {
                let mut inner = b.clone();
                inner.push(VARS[v]);
                body(depth - 1, inner).prop_map(move |f| if ex { fo::exists(VARS[v], f) } else { fo::forall(VARS[v], f) })
            })
        };
        let binary = (body(depth - 1, bound.clone()), body(depth - 1, bound.clone()), 0..3u8).prop_map(|(a, b, op)| match op {
            0 => fo::and(a, b),
            1 => fo::or(a, b),
            _ => fo::implies(a, b),
        });
        let negation = body(depth - 1, bound).prop_map(fo::not);
        prop_oneof![atom, quant, binary, negation].boxed()
    }
    (0..VARS.len(), any::<bool>(), 1u32..=4).prop_flat_map(|(v, ex, depth)| {
        body(depth, vec![VARS[v]]).prop_map(move |f| if ex { fo::exists(VARS[v], f) } else { fo::forall(VARS[v], f) })
    })
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (0usize..=4, any::<u64>(), 0.0f64..=1.0).prop_map(|(n, seed, p)| Graph::random_gnp(n, p, &mut ChaCha8Rng::seed_from_u64(seed)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn evaluator_matches_truth_tables(phi in sentence(), g in small_graph()) {
        prop_assert_eq!(eval_fo(&g, &phi).unwrap(), common::truth_table(&g, &phi));
    }

    #[test]
    fn printing_round_trips(phi in sentence()) {
        let text = phi.to_string();
        prop_assert_eq!(parse_fo(&text).unwrap(), phi);
    }

    #[test]
    fn rewrite_is_a_small_sentence(phi in sentence()) {
        let psi = rewrite_fo(&phi, &phi_v()).unwrap();
        prop_assert!(psi.is_sentence());
        prop_assert!(psi.size() <= 20 * phi.size());
    }

    #[test]
    fn rewrite_relativises_to_the_classifier(phi in sentence(), g in small_graph()) {
        // with the classifier x=x every vertex qualifies, so on edge-free
        // sentences the rewrite only relativises to the whole domain
        let trivial = fo::parse_formula("x=x").unwrap();
        let psi = rewrite_fo(&phi, &trivial).unwrap();
        if !phi.to_string().contains("E(") {
            prop_assert_eq!(eval_fo(&g, &psi).unwrap(), eval_fo(&g, &phi).unwrap());
        }
    }
}

#[test]
fn corpus_sentences_respect_the_size_bound() {
    for phi in corpus() {
        let psi = rewrite_fo(&phi, &phi_v()).unwrap();
        assert!(psi.size() <= 20 * phi.size(), "{phi}");
    }
}

#[test]
fn truth_table_on_fixed_examples() {
    let k3 = Graph::complete(3);
    let f = parse_fo("exists x. exists y. (~(x=y) & E(x,y))").unwrap();
    assert!(common::truth_table(&k3, &f));
    let p3 = Graph::path(3);
    assert!(common::truth_table(&p3, &parse_fo("forall x. exists y. E(x,y)").unwrap()));
}
