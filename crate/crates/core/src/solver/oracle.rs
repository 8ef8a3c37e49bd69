//! Exhaustive ground truth.
//!
//! Deliberately shares nothing with the solver beyond the instance type: rows
//! are re-encoded into plain bit words here, every completion of every row is
//! enumerated in lexicographic order, and for each completion the `k`-subsets
//! are searched in lexicographic order. The first hit is therefore the
//! lexicographically least (completion, subset) pair.

use super::{SolveOutcome, SolverError};
use crate::instance::Instance;
use crate::solution::Solution;
use crate::vector::{Entry, PartialVector};

/// Refusal limits for [`oracle_solve_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_unknowns: usize,
    pub max_rows: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        Self {
            max_unknowns: 20,
            max_rows: 16,
        }
    }
}

/// [`oracle_solve_with`] under the default limits (20 wildcards, 16 rows).
pub fn oracle_solve(instance: &Instance) -> Result<SolveOutcome, SolverError> {
    oracle_solve_with(instance, OracleLimits::default())
}

pub fn oracle_solve_with(instance: &Instance, limits: OracleLimits) -> Result<SolveOutcome, SolverError> {
    let n = instance.len();
    if n > limits.max_rows {
        return Err(SolverError::OracleInfeasible(format!(
            "{n} rows exceed the limit of {}",
            limits.max_rows
        )));
    }
    let d = instance.d();
    let words = d.div_ceil(64);
    let mut base = vec![vec![0u64; words]; n];
    // (row, coordinate) of every wildcard, row-major: the first is the most
    // significant position of the completion counter.
    let mut holes = Vec::new();
    for (i, row) in instance.rows().iter().enumerate() {
        for (j, e) in row.entries().enumerate() {
            match e {
                Entry::One => base[i][j / 64] |= 1 << (j % 64),
                Entry::Zero => {}
                Entry::Unknown => holes.push((i, j)),
            }
        }
    }
    if holes.len() > limits.max_unknowns || holes.len() >= 64 {
        return Err(SolverError::OracleInfeasible(format!(
            "{} wildcards exceed the limit of {}",
            holes.len(),
            limits.max_unknowns
        )));
    }

    let (k, need) = (instance.k(), instance.r() + 1);
    let w = holes.len();
    let mut rows = base.clone();
    for mask in 0u64..(1u64 << w) {
        rows.clone_from(&base);
        for (b, &(i, j)) in holes.iter().enumerate() {
            if mask >> (w - 1 - b) & 1 == 1 {
                rows[i][j / 64] |= 1 << (j % 64);
            }
        }
        let mut subset = Vec::with_capacity(k);
        if first_subset(&rows, k, need, 0, &mut subset) {
            let completed = rows
                .iter()
                .map(|words| {
                    let bits: Vec<bool> = (0..d).map(|j| words[j / 64] >> (j % 64) & 1 == 1).collect();
                    PartialVector::from_bits(&bits)
                })
                .collect();
            return Ok(SolveOutcome::from_witness(Some(Solution::new(completed, subset))));
        }
    }
    Ok(SolveOutcome::from_witness(None))
}

fn distance(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x ^ y).count_ones() as usize).sum()
}

/// Lexicographically first `k`-subset extending `subset` whose rows are
/// pairwise at distance `>= need`.
fn first_subset(rows: &[Vec<u64>], k: usize, need: usize, start: usize, subset: &mut Vec<usize>) -> bool {
    if subset.len() == k {
        return true;
    }
    for i in start..rows.len() {
        if rows.len() - i < k - subset.len() {
            break;
        }
        if subset.iter().all(|&s| distance(&rows[s], &rows[i]) >= need) {
            subset.push(i);
            if first_subset(rows, k, need, i + 1, subset) {
                return true;
            }
            subset.pop();
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solution::verify_solution;
    use crate::solver::Answer;

    #[test]
    fn single_wildcard_row() {
        let out = oracle_solve(&Instance::from_rows(1, 0, &["?"])).unwrap();
        assert_eq!(out.answer, Answer::Yes);
    }

    #[test]
    fn two_wildcards_complete_oppositely() {
        let inst = Instance::from_rows(2, 0, &["?", "?"]);
        let w = oracle_solve(&inst).unwrap().witness.unwrap();
        // least completion that works is (0, 1)
        assert_eq!(w.completed[0].to_string(), "0");
        assert_eq!(w.completed[1].to_string(), "1");
        assert!(verify_solution(&inst, &w).passed());
    }

    #[test]
    fn refuses_beyond_limits() {
        let inst = Instance::from_rows(1, 0, &["?????", "?????", "?????", "?????", "?????"]);
        assert!(matches!(oracle_solve(&inst), Err(SolverError::OracleInfeasible(_))));
        let many = Instance::new(1, 1, 0, vec![PartialVector::zeros(1); 17]).unwrap();
        assert!(oracle_solve(&many).is_err());
        let roomy = OracleLimits { max_unknowns: 20, max_rows: 20 };
        assert!(oracle_solve_with(&many, roomy).unwrap().is_yes());
    }

    #[test]
    fn no_instance() {
        assert!(!oracle_solve(&Instance::from_rows(2, 1, &["00", "01"])).unwrap().is_yes());
        assert!(!oracle_solve(&Instance::from_rows(2, 0, &["1"])).unwrap().is_yes());
    }

    #[test]
    fn wide_rows() {
        let mut a = PartialVector::zeros(70);
        a.set(69, Entry::Unknown);
        let b = PartialVector::zeros(70);
        let inst = Instance::new(70, 2, 0, vec![a, b]).unwrap();
        let w = oracle_solve(&inst).unwrap().witness.unwrap();
        assert_eq!(w.completed[0].get(69), Entry::One);
    }
}
