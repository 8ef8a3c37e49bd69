//! Find a sunflower in a random 3-uniform family just above the guarantee.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wildcard_diversity::sunflower::{erdos_rado_bound, find_sunflower, SetFamily};

fn main() {
    let (b, a) = (3, 4);
    let size = erdos_rado_bound(b, a) as usize + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let members = (0..size)
        .map(|_| sample(&mut rng, 12, b).into_iter().map(|e| e as u32).collect())
        .collect();
    let family = SetFamily::new(members);
    let s = find_sunflower(&family, b, a).unwrap().expect("non-empty family");
    println!("family of {size} sets, sunflower with {} members", s.len());
    println!("core {:?}", s.core);
    for m in &s.members {
        println!("  {:?}", family.members()[*m]);
    }
    assert!(s.is_valid_in(&family));
}
