//! Time the solver on the dense and constructed-NO benchmark instances.

use std::time::Instant;

use wildcard_diversity::cli::bench::{dense_instance, small_no_instance};
use wildcard_diversity::solve;

fn main() {
    for (name, inst) in [("dense", dense_instance(0)), ("small-no", small_no_instance(0))] {
        let t = Instant::now();
        let out = solve(&inst);
        println!("{name:>9}: {} rows, d={}, {:?} in {:.2?}", inst.len(), inst.d(), out.answer, t.elapsed());
    }
}
