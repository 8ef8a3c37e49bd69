//! Parse an instance in the text format, solve it, and check the witness.

use wildcard_diversity::{solve, verify_solution, Instance};

const INPUT: &str = "\
# d k r
6 3 2
0000??
111100
??1111
010101
";

fn main() {
    let instance: Instance = INPUT.parse().expect("well-formed instance");
    let outcome = solve(&instance);
    println!("answer: {:?}", outcome.answer);
    for step in &outcome.trace {
        println!("  {step:?}");
    }
    if let Some(w) = &outcome.witness {
        println!("selected rows: {:?}", w.selected);
        for i in &w.selected {
            println!("  row {i}: {}", w.completed[*i]);
        }
        println!("{}", verify_solution(&instance, w));
    }
}
