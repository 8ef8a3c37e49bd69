//! Force the pruning step on a small instance by lowering the thresholds.
//! Answers under overrides are cross-checked against the exhaustive oracle.

use wildcard_diversity::solver::{oracle_solve, solve_with, Overrides, TraceStep};
use wildcard_diversity::Instance;

fn main() {
    let instance = Instance::from_rows(2, 1, &["00000", "10000", "01000", "00100", "00010", "00001"]);
    let overrides = Overrides { zeta_gate: Some(3), sunflower_target: Some(3) };
    let out = solve_with(&instance, overrides);
    for step in &out.trace {
        if let TraceStep::Pruned { row, center, alpha, sunflower } = step {
            println!("pruned row {row} around {center}: alpha {alpha}, sunflower of {sunflower}");
        } else {
            println!("{step:?}");
        }
    }
    let truth = oracle_solve(&instance).unwrap().answer;
    println!("answer {:?}, oracle {:?}", out.answer, truth);
    assert_eq!(out.answer, truth);
}
