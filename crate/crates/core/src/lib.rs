//! Diversity of partially known binary vectors.
//!
//! Given rows over `{0, 1, ?}`, decide whether the wildcards can be filled so
//! that some `k` rows are pairwise at Hamming distance greater than `r`, and
//! produce the completion and selection when they can.

pub mod cli;
pub mod error;
pub mod fo;
pub mod instance;
pub mod random;
pub mod reductions;
pub mod solution;
pub mod solver;
pub mod sunflower;
pub mod vector;

pub use error::{ModelError, ParseError};
pub use instance::Instance;
pub use solution::{verify_solution, Solution, SolutionFile, VerifyReport, Violation};
pub use solver::{solve, Answer, SolveOutcome};
pub use vector::{Entry, PartialVector};
