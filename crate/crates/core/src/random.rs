//! Seeded random instances for benchmarks and tests.

use rand::Rng;

use crate::instance::Instance;
use crate::vector::{Entry, PartialVector};

/// Shape of a random instance. Entries are uniform bits; each becomes a
/// wildcard with probability `density`, until `max_wildcards` are placed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InstanceShape {
    pub rows: usize,
    pub d: usize,
    pub k: usize,
    pub r: usize,
    pub density: f64,
    pub max_wildcards: usize,
}

impl InstanceShape {
    pub fn complete(rows: usize, d: usize, k: usize, r: usize) -> Self {
        Self {
            rows,
            d,
            k,
            r,
            density: 0.0,
            max_wildcards: 0,
        }
    }

    pub fn generate(&self, rng: &mut impl Rng) -> Instance {
        let mut budget = self.max_wildcards;
        let rows = (0..self.rows)
            .map(|_| {
                let entries: Vec<Entry> = (0..self.d)
                    .map(|_| {
                        let bit = Entry::from_bit(rng.random());
                        if budget > 0 && self.density > 0.0 && rng.random_bool(self.density.min(1.0)) {
                            budget -= 1;
                            Entry::Unknown
                        } else {
                            bit
                        }
                    })
                    .collect();
                PartialVector::from_entries(&entries)
            })
            .collect();
        Instance::new(self.d, self.k, self.r, rows).expect("rows of length d")
    }
}
