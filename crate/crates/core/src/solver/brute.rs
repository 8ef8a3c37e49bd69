use super::{SolveOutcome, TraceStep};
use crate::instance::Instance;
use crate::solution::Solution;
use crate::vector::{Entry, PartialVector};

/// Exhaustive search over `k`-subsets of rows in lexicographic order and, for
/// each, over the 0/1 assignments to the wildcards of the chosen rows. Rows
/// outside the selection complete to 0.
///
/// Subsets containing a pair that no completion can separate by `r + 1` are
/// skipped, and assignments are extended row by row, so the first witness
/// found is the same as with plain enumeration. Cost is exponential in the
/// wildcard count of the chosen rows; meant for small instances.
pub fn brute_force_small(instance: &Instance) -> SolveOutcome {
    let witness = search(instance);
    let mut out = SolveOutcome::from_witness(witness);
    out.trace.push(TraceStep::BruteForce { rows: instance.len() });
    out
}

fn search(instance: &Instance) -> Option<Solution> {
    let (k, n) = (instance.k(), instance.len());
    if k > n {
        return None;
    }
    let mut state = State {
        rows: instance.rows(),
        need: instance.r() + 1,
        k,
        chosen: Vec::with_capacity(k),
        fixed: Vec::with_capacity(k),
    };
    if !state.subsets(0) {
        return None;
    }
    let mut completed: Vec<PartialVector> = instance.rows().iter().map(PartialVector::complete_with_zeros).collect();
    for (&i, c) in state.chosen.iter().zip(state.fixed) {
        completed[i] = c;
    }
    Some(Solution::new(completed, state.chosen))
}

struct State<'a> {
    rows: &'a [PartialVector],
    need: usize,
    k: usize,
    chosen: Vec<usize>,
    fixed: Vec<PartialVector>,
}

impl State<'_> {
    fn subsets(&mut self, start: usize) -> bool {
        if self.chosen.len() == self.k {
            self.fixed.clear();
            return self.assign(0);
        }
        let remaining = self.k - self.chosen.len();
        for i in start..=self.rows.len() - remaining {
            let row = &self.rows[i];
            if self
                .chosen
                .iter()
                .all(|&c| self.rows[c].max_completed_distance(row) >= self.need)
            {
                self.chosen.push(i);
                if self.subsets(i + 1) {
                    return true;
                }
                self.chosen.pop();
            }
        }
        false
    }

    /// Completes chosen rows `t..` given completions of the earlier ones.
    fn assign(&mut self, t: usize) -> bool {
        if t == self.chosen.len() {
            return true;
        }
        let rows = self.rows;
        let row = &rows[self.chosen[t]];
        let holes = row.unknown_positions();
        let w = holes.len();
        assert!(w < 64, "row {} has {w} wildcards, too many to enumerate", self.chosen[t]);
        for mask in 0u64..(1u64 << w) {
            let mut c = row.clone();
            for (b, &j) in holes.iter().enumerate() {
                // first wildcard is the most significant bit: lexicographic order
                c.set(j, Entry::from_bit(mask >> (w - 1 - b) & 1 == 1));
            }
            if self.fixed.iter().all(|f| f.delta_unchecked(&c) >= self.need) {
                self.fixed.push(c);
                if self.assign(t + 1) {
                    return true;
                }
                self.fixed.pop();
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solution::verify_solution;
    use crate::solver::Answer;

    fn pv(s: &str) -> PartialVector {
        s.parse().unwrap()
    }

    #[test]
    fn close_pair_is_no() {
        let out = brute_force_small(&Instance::from_rows(2, 1, &["00", "01"]));
        assert_eq!(out.answer, Answer::No);
        assert!(out.witness.is_none());
    }

    #[test]
    fn completes_wildcard_apart() {
        let inst = Instance::from_rows(2, 1, &["0?", "11"]);
        let out = brute_force_small(&inst);
        let w = out.witness.unwrap();
        assert_eq!(w.completed, vec![pv("00"), pv("11")]);
        assert!(verify_solution(&inst, &w).passed());
    }

    #[test]
    fn empty_selection() {
        let inst = Instance::new(0, 0, 5, vec![]).unwrap();
        let out = brute_force_small(&inst);
        assert_eq!(out.answer, Answer::Yes);
        assert!(out.witness.unwrap().selected.is_empty());
    }

    #[test]
    fn first_subset_in_lexicographic_order() {
        let inst = Instance::from_rows(2, 0, &["0", "0", "1", "?"]);
        let w = brute_force_small(&inst).witness.unwrap();
        assert_eq!(w.selected, vec![0, 2]);
        assert_eq!(w.completed[3], pv("0"));
    }

    #[test]
    fn more_rows_requested_than_exist() {
        assert!(!brute_force_small(&Instance::from_rows(3, 0, &["0", "1"])).is_yes());
    }
}
