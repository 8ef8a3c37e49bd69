//! Embed a graph with subdivided edges and pendant leaves into the hypercube
//! and recover it as the distance-1 graph of the rows.

use wildcard_diversity::reductions::{distance_graph, embed_subdivided, Graph};

fn main() {
    let h = Graph::path(3);
    let rows = embed_subdivided(&h);
    for (i, row) in rows.iter().enumerate() {
        println!("{:>2}: {row}", i + 1);
    }
    let recovered = distance_graph(&rows, 1).unwrap();
    let expected = h.subdivided_with_leaves();
    println!("recovered {} edges, expected {}", recovered.m(), expected.m());
    assert_eq!(recovered.edge_set(), expected.edge_set());
}
