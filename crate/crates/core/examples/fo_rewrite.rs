//! Rewrite a sentence about a graph into one about its hypercube embedding
//! and evaluate both.

use wildcard_diversity::fo::{eval_fo, parse_fo, phi_v, rewrite_fo};
use wildcard_diversity::reductions::{distance_graph, embed_subdivided, Graph};

fn main() {
    let phi = parse_fo("exists x. exists y. (~x=y & E(x,y))").unwrap();
    let psi = rewrite_fo(&phi, &phi_v()).unwrap();
    println!("phi: {phi}");
    println!("psi: {psi}");
    println!("size {} -> {}", phi.size(), psi.size());
    for g in [Graph::empty(3), Graph::path(3)] {
        let image = distance_graph(&embed_subdivided(&g), 1).unwrap();
        println!(
            "n={} m={}: phi {} psi {}",
            g.n(),
            g.m(),
            eval_fo(&g, &phi).unwrap(),
            eval_fo(&image, &psi).unwrap()
        );
    }
}
