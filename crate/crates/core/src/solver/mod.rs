//! Exact decision procedure with constructive witnesses.
//!
//! The pipeline ([`solve`]) removes rows with too many wildcards, caps exact
//! duplicates, tries a greedy certificate, and otherwise either brute-forces a
//! small instance, greedily solves one with bounded neighbourhoods, or finds
//! and deletes an irrelevant row via a sunflower. [`oracle_solve`] is an
//! independent exhaustive search used as ground truth.

mod brute;
mod greedy;
mod heavy;
mod oracle;
mod pipeline;
mod prune;
pub mod thresholds;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::error::ModelError;
use crate::solution::Solution;
use crate::sunflower::SunflowerError;

pub use brute::brute_force_small;
pub use greedy::greedy_bounded_neighborhood;
pub use heavy::{heavy_threshold, lift_heavy_wildcard, reduce_heavy_wildcard, RemovedRow};
pub use oracle::{oracle_solve, oracle_solve_with, OracleLimits};
pub use pipeline::{cap_duplicates, solve, solve_with};
pub use prune::{find_irrelevant_vector, set_image, Prune, SetElement};
pub use thresholds::{Overrides, Thresholds};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Answer {
    Yes,
    No,
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Answer::Yes => "YES",
            Answer::No => "NO",
        })
    }
}

/// One step taken by [`solve`]. Row indices refer to the original instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum TraceStep {
    DuplicateCapped { row: usize },
    HeavyWildcard { row: usize, k_before: usize },
    Shortcut { k: usize },
    GreedyFastPath,
    BruteForce { rows: usize },
    BoundedGreedy,
    Pruned { row: usize, center: usize, alpha: usize, sunflower: usize },
    Fallback { reason: String },
}

/// Answer, witness (present iff `Yes`), the steps taken, and wall-clock time
/// per pipeline stage.
#[derive(Debug, Clone)]
pub struct SolveOutcome {
    pub answer: Answer,
    pub witness: Option<Solution>,
    pub trace: Vec<TraceStep>,
    pub timings: Vec<(&'static str, std::time::Duration)>,
}

impl SolveOutcome {
    pub(crate) fn from_witness(witness: Option<Solution>) -> Self {
        Self {
            answer: if witness.is_some() { Answer::Yes } else { Answer::No },
            witness,
            trace: Vec::new(),
            timings: Vec::new(),
        }
    }

    pub fn is_yes(&self) -> bool {
        self.answer == Answer::Yes
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("k must be at least 1")]
    ZeroK,
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("witness does not verify: {0}")]
    InvalidWitness(String),
    #[error("no set size reaches the pigeonhole bound (largest class {largest} sets of size {alpha})")]
    Pigeonhole { alpha: usize, largest: usize },
    #[error("sunflower of {found} members, needed {needed}")]
    SunflowerTooSmall { found: usize, needed: u64 },
    #[error("oracle infeasible: {0}")]
    OracleInfeasible(String),
    #[error(transparent)]
    Sunflower(#[from] SunflowerError),
    #[error(transparent)]
    Model(#[from] ModelError),
}
