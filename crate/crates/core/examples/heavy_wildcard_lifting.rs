//! Remove a row with many wildcards, solve the rest, and lift the witness back.

use wildcard_diversity::solver::{heavy_threshold, lift_heavy_wildcard, oracle_solve, reduce_heavy_wildcard};
use wildcard_diversity::{verify_solution, Instance};

fn main() {
    let instance = Instance::from_rows(3, 1, &["000000", "??????", "111100", "001111"]);
    println!("heavy threshold: {}", heavy_threshold(instance.k(), instance.r()));

    let (reduced, record) = reduce_heavy_wildcard(&instance).expect("row 1 is heavy");
    println!("removed row {} ({}), k is now {}", record.position, record.row, reduced.k());

    let child = oracle_solve(&reduced).unwrap().witness.expect("reduced instance is YES");
    let lifted = lift_heavy_wildcard(&reduced, &child, &record).unwrap();
    println!("lifted row: {}", lifted.completed[record.position]);
    println!("{}", verify_solution(&instance, &lifted));
}
