//! Seeded timing suites.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::report::digest;
use crate::instance::Instance;
use crate::random::InstanceShape;
use crate::solver::{solve, Answer};
use crate::vector::{Entry, PartialVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    /// Wildcard-free |M| = 10^4, d = 128, k = 3, r = 4.
    Dense,
    /// A NO-instance with |M| = 15, k = 3, r = 2 and at most 10 wildcards.
    SmallNo,
    /// Grid over |M|, d, k, r and wildcard density.
    Scaling,
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub suite: String,
    pub rows: usize,
    pub d: usize,
    pub k: usize,
    pub r: usize,
    pub density: f64,
    pub wildcards: usize,
    pub digest: String,
    pub answer: Answer,
    pub stages: Vec<(String, f64)>,
    pub total_millis: f64,
}

/// The dense suite's instance for `seed`.
pub fn dense_instance(seed: u64) -> Instance {
    InstanceShape::complete(10_000, 128, 3, 4).generate(&mut ChaCha8Rng::seed_from_u64(seed))
}

/// A NO-instance with 15 rows in dimension 6, `k = 3`, `r = 2` and at most 10
/// wildcards. Rows lie in two clusters around antipodal centres; each row is
/// a centre with at most one coordinate flipped or made unknown, so rows of
/// one cluster stay within distance 2 under every completion while the
/// clusters are at least 4 apart. Three rows always include two from one
/// cluster, but two rows from different clusters do work, so the search has
/// to go past pairs. Coordinates are permuted and XOR-masked by the seed.
pub fn small_no_instance(seed: u64) -> Instance {
    const D: usize = 6;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..D).collect();
    perm.shuffle(&mut rng);
    let mask: Vec<bool> = (0..D).map(|_| rng.random()).collect();
    let mut wildcards = 0;
    let rows = (0..15)
        .map(|i| {
            let centre = i % 2 == 1;
            let mut entries = [Entry::from_bit(centre); D];
            let j = rng.random_range(0..D);
            match rng.random_range(0..3) {
                0 if wildcards < 10 => {
                    wildcards += 1;
                    entries[j] = Entry::Unknown;
                }
                1 => entries[j] = Entry::from_bit(!centre),
                _ => {}
            }
            let placed: Vec<Entry> = (0..D)
                .map(|c| {
                    let e = entries[perm[c]];
                    match (e, mask[c]) {
                        (Entry::Unknown, _) | (_, false) => e,
                        (e, true) => e.flipped().expect("known entry"),
                    }
                })
                .collect();
            PartialVector::from_entries(&placed)
        })
        .collect();
    Instance::new(D, 3, 2, rows).expect("rows of length 6")
}

fn scaling_shapes() -> Vec<InstanceShape> {
    let mut out = Vec::new();
    for rows in [100, 1_000, 10_000] {
        for d in [32, 128] {
            for (k, r) in [(2, 1), (3, 4), (4, 2)] {
                for density in [0.0, 0.05] {
                    out.push(InstanceShape {
                        rows,
                        d,
                        k,
                        r,
                        density,
                        max_wildcards: usize::MAX,
                    });
                }
            }
        }
    }
    out
}

fn measure(suite: &str, inst: &Instance, density: f64) -> BenchRow {
    let start = Instant::now();
    let out = solve(inst);
    let total = start.elapsed();
    BenchRow {
        suite: suite.to_string(),
        rows: inst.len(),
        d: inst.d(),
        k: inst.k(),
        r: inst.r(),
        density,
        wildcards: inst.total_unknowns(),
        digest: digest(&[inst.to_string().as_bytes()]),
        answer: out.answer,
        stages: out.timings.iter().map(|(s, d)| (s.to_string(), d.as_secs_f64() * 1e3)).collect(),
        total_millis: total.as_secs_f64() * 1e3,
    }
}

pub fn run(suites: &[Suite], seed: u64) -> Vec<BenchRow> {
    let mut rows = Vec::new();
    for suite in suites {
        match suite {
            Suite::Dense => rows.push(measure("dense", &dense_instance(seed), 0.0)),
            Suite::SmallNo => {
                let inst = small_no_instance(seed);
                let density = inst.total_unknowns() as f64 / (inst.len() * inst.d()) as f64;
                rows.push(measure("small-no", &inst, density));
            }
            Suite::Scaling => {
                for (i, shape) in scaling_shapes().iter().enumerate() {
                    let inst = shape.generate(&mut ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64)));
                    rows.push(measure("scaling", &inst, shape.density));
                }
            }
        }
    }
    rows
}

pub fn table(rows: &[BenchRow]) -> String {
    let mut out = format!(
        "{:<9} {:>6} {:>4} {:>2} {:>2} {:>7} {:>5} {:<12} {:<3} {:>10}  stages (ms)\n",
        "suite", "rows", "d", "k", "r", "density", "wild", "digest", "ans", "total ms"
    );
    for b in rows {
        let stages: Vec<String> = b.stages.iter().map(|(s, ms)| format!("{s}={ms:.2}")).collect();
        out.push_str(&format!(
            "{:<9} {:>6} {:>4} {:>2} {:>2} {:>7.3} {:>5} {:<12} {:<3} {:>10.2}  {}\n",
            b.suite,
            b.rows,
            b.d,
            b.k,
            b.r,
            b.density,
            b.wildcards,
            &b.digest[..12],
            b.answer.to_string(),
            b.total_millis,
            stages.join(" ")
        ));
    }
    out
}
