//! Run the threshold-2 reduction over every graph on at most four vertices in
//! both encodings and print the agreement table.

use wildcard_diversity::reductions::harness::r2_harness;
use wildcard_diversity::reductions::Graph;

fn main() {
    let graphs: Vec<Graph> = (1..=4).flat_map(Graph::all_up_to_isomorphism).collect();
    let report = r2_harness(&graphs, &[1, 2, 3]).unwrap();
    println!("{} cells, {} agree", report.total, report.agreements);
    for &i in &report.discrepancies {
        let c = &report.cells[i];
        println!(
            "  {:?} n={} edges={:?} k={}: IS {} diversity {}",
            c.mode, c.n, c.edges, c.k, c.independent_set, c.diversity
        );
    }
}
