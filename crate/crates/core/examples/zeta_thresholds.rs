//! Print the neighbourhood thresholds and sunflower targets for small k and r.

use wildcard_diversity::solver::thresholds::{sunflower_target, zeta, zeta_plus};

fn main() {
    println!("{:>3} {:>3} {:>22} {:>22} {:>7}", "k", "r", "zeta", "zeta+", "target");
    for k in 2..=4 {
        for r in 0..=3 {
            println!(
                "{k:>3} {r:>3} {:>22} {:>22} {:>7}",
                zeta(k, r).unwrap(),
                zeta_plus(k, r).unwrap(),
                sunflower_target(k, r).unwrap()
            );
        }
    }
}
