//! Independent set to diversity: rows of the subdivided-edge encoding, the
//! distance law, and agreement of the two answers on a 5-cycle.

use wildcard_diversity::reductions::harness::has_independent_set;
use wildcard_diversity::reductions::{reduce_is_to_diversity, Graph};
use wildcard_diversity::solve;

fn main() {
    let g: Graph = "5 5\n1 2\n2 3\n3 4\n4 5\n1 5\n".parse().unwrap();
    for k in 1..=3 {
        let inst = reduce_is_to_diversity(&g, k).unwrap();
        let diverse = solve(&inst).is_yes();
        println!(
            "k={k}: d={} r={} independent set {} diversity {}",
            inst.d(),
            inst.r(),
            has_independent_set(&g, k),
            diverse
        );
    }
}
