use std::collections::HashMap;
use std::time::{Duration, Instant};

use super::brute::brute_force_small;
use super::greedy::{greedy_bounded_neighborhood, greedy_pick, zero_completion};
use super::heavy::{lift_heavy_wildcard, reduce_heavy_wildcard, RemovedRow};
use super::prune::find_irrelevant_vector;
use super::{Answer, Overrides, SolveOutcome, Thresholds, TraceStep};
use crate::instance::Instance;
use crate::solution::{verify_solution, Solution};
use crate::vector::PartialVector;

/// Keeps the first `k` copies of every distinct partial row. Returns the
/// capped instance and, for each kept row, its index in `instance`.
///
/// A diversity set uses at most `k` rows in total, so the dropped copies
/// never matter. `k = 0` keeps everything.
pub fn cap_duplicates(instance: &Instance) -> (Instance, Vec<usize>) {
    let k = instance.k();
    if k == 0 {
        return (instance.clone(), (0..instance.len()).collect());
    }
    let mut seen: HashMap<&PartialVector, usize> = HashMap::new();
    let kept: Vec<usize> = (0..instance.len())
        .filter(|&i| {
            let c = seen.entry(instance.row(i)).or_default();
            *c += 1;
            *c <= k
        })
        .collect();
    let rows = kept.iter().map(|&i| instance.row(i).clone()).collect();
    let capped = instance.with_rows(rows).expect("same dimension");
    (capped, kept)
}

/// Decides the instance exactly, with a verified witness on `Yes`.
pub fn solve(instance: &Instance) -> SolveOutcome {
    solve_with(instance, Overrides::default())
}

/// [`solve`] with test-only threshold overrides. With overrides the
/// pruning and bounded-greedy steps are no longer backed by the size
/// argument, so answers should be cross-checked against the oracle.
pub fn solve_with(instance: &Instance, overrides: Overrides) -> SolveOutcome {
    let mut run = Run {
        trace: Vec::new(),
        clock: Clock::default(),
        overrides,
    };
    let mut origin: Vec<usize> = (0..instance.len()).collect();

    let t = Instant::now();
    let (capped0, kept0) = cap_duplicates(instance);
    run.note_capped(&mut origin, &kept0);
    let mut levels: Vec<(Instance, RemovedRow)> = Vec::new();
    let mut current = capped0.clone();
    while let Ok((reduced, record)) = reduce_heavy_wildcard(&current) {
        run.trace.push(TraceStep::HeavyWildcard {
            row: origin.remove(record.position),
            k_before: record.k_before,
        });
        levels.push((current, record));
        current = reduced;
    }
    let (kernel, kept1) = cap_duplicates(&current);
    run.note_capped(&mut origin, &kept1);
    run.clock.add("reduce", t.elapsed());

    let found = run.decide(&kernel, &origin);

    let t = Instant::now();
    let witness = found.map(|(sol, kept)| {
        let mut sol = expand(&kernel, &kept, sol);
        sol = expand(&current, &kept1, sol);
        let mut child = current;
        for (parent, record) in levels.into_iter().rev() {
            sol = lift_heavy_wildcard(&child, &sol, &record).expect("lifting a verified witness");
            child = parent;
        }
        expand(instance, &kept0, sol)
    });
    if let Some(w) = &witness {
        let report = verify_solution(instance, w);
        assert!(report.passed(), "solver produced an invalid witness:\n{report}");
    }
    run.clock.add("lift", t.elapsed());

    SolveOutcome {
        answer: if witness.is_some() { Answer::Yes } else { Answer::No },
        witness,
        trace: run.trace,
        timings: run.clock.stages,
    }
}

/// Witness for `parent` from one for its sub-instance made of rows `kept`;
/// the other rows complete to 0 and are not selected.
fn expand(parent: &Instance, kept: &[usize], sol: Solution) -> Solution {
    let mut completed: Vec<PartialVector> = parent.rows().iter().map(PartialVector::complete_with_zeros).collect();
    for (c, &p) in sol.completed.into_iter().zip(kept) {
        completed[p] = c;
    }
    let selected = sol.selected.iter().map(|&i| kept[i]).collect();
    Solution::new(completed, selected)
}

#[derive(Default)]
struct Clock {
    stages: Vec<(&'static str, Duration)>,
}

impl Clock {
    fn add(&mut self, stage: &'static str, elapsed: Duration) {
        match self.stages.iter_mut().find(|(s, _)| *s == stage) {
            Some((_, d)) => *d += elapsed,
            None => self.stages.push((stage, elapsed)),
        }
    }
}

struct Run {
    trace: Vec<TraceStep>,
    clock: Clock,
    overrides: Overrides,
}

impl Run {
    fn note_capped(&mut self, origin: &mut Vec<usize>, kept: &[usize]) {
        let mut keep = kept.iter().peekable();
        for (i, &o) in origin.iter().enumerate() {
            if keep.peek() == Some(&&i) {
                keep.next();
            } else {
                self.trace.push(TraceStep::DuplicateCapped { row: o });
            }
        }
        *origin = kept.iter().map(|&i| origin[i]).collect();
    }

    /// Decides a kernel (no heavy rows, duplicates capped). Returns a witness
    /// for the sub-instance on rows `kept` of `kernel`.
    fn decide(&mut self, kernel: &Instance, origin: &[usize]) -> Option<(Solution, Vec<usize>)> {
        let k = kernel.k();
        let all: Vec<usize> = (0..kernel.len()).collect();
        if k <= 1 {
            self.trace.push(TraceStep::Shortcut { k });
            if k == 1 && kernel.is_empty() {
                return None;
            }
            let pick = if k == 1 { vec![0] } else { vec![] };
            return Some((zero_completion(kernel, pick), all));
        }

        let t = Instant::now();
        let greedy = greedy_pick(kernel);
        self.clock.add("greedy", t.elapsed());
        if let Some(picks) = greedy {
            self.trace.push(TraceStep::GreedyFastPath);
            return Some((zero_completion(kernel, picks), all));
        }

        let th = Thresholds::with_overrides(k, kernel.r(), self.overrides).expect("k >= 2");
        let mut work = kernel.clone();
        let mut kept = all;
        loop {
            if (work.len() as u64) < (k as u64).saturating_mul(th.zeta_gate) {
                return self.brute(&work, kept);
            }
            let t = Instant::now();
            let sizes: Vec<usize> = (0..work.len())
                .map(|v| work.hamming_neighborhood(v, work.r()).expect("valid row").len())
                .collect();
            if sizes.iter().all(|&s| (s as u64) < th.zeta_gate) {
                let result = greedy_bounded_neighborhood(&work, &th);
                self.clock.add("bounded_greedy", t.elapsed());
                match result {
                    Ok(sol) => {
                        self.trace.push(TraceStep::BoundedGreedy);
                        return Some((sol, kept));
                    }
                    Err(e) => {
                        self.trace.push(TraceStep::Fallback { reason: e.to_string() });
                        return self.brute(&work, kept);
                    }
                }
            }
            let max = *sizes.iter().max().expect("non-empty");
            let centre = sizes.iter().position(|&s| s == max).expect("max exists");
            let result = find_irrelevant_vector(&work, centre, &th);
            self.clock.add("prune", t.elapsed());
            match result {
                Ok(p) => {
                    self.trace.push(TraceStep::Pruned {
                        row: origin[kept[p.row]],
                        center: origin[kept[centre]],
                        alpha: p.alpha,
                        sunflower: p.sunflower_size,
                    });
                    work = work.without_row(p.row).expect("valid row");
                    kept.remove(p.row);
                }
                Err(e) => {
                    self.trace.push(TraceStep::Fallback { reason: e.to_string() });
                    return self.brute(&work, kept);
                }
            }
        }
    }

    fn brute(&mut self, work: &Instance, kept: Vec<usize>) -> Option<(Solution, Vec<usize>)> {
        let t = Instant::now();
        let out = brute_force_small(work);
        self.clock.add("brute", t.elapsed());
        self.trace.extend(out.trace);
        out.witness.map(|s| (s, kept))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::oracle_solve;

    #[test]
    fn far_pair_is_yes() {
        let inst = Instance::from_rows(2, 2, &["000", "111"]);
        let out = solve(&inst);
        assert!(out.is_yes());
        assert_eq!(out.witness.unwrap().selected, vec![0, 1]);
    }

    #[test]
    fn close_pair_is_no() {
        let out = solve(&Instance::from_rows(2, 1, &["00", "01"]));
        assert_eq!(out.answer, Answer::No);
        assert!(out.trace.contains(&TraceStep::BruteForce { rows: 2 }));
    }

    #[test]
    fn zero_dimension() {
        let rows = vec![PartialVector::zeros(0); 3];
        for (k, yes) in [(0, true), (1, true), (2, false)] {
            let inst = Instance::new(0, k, 0, rows.clone()).unwrap();
            assert_eq!(solve(&inst).is_yes(), yes, "k={k}");
        }
        assert!(!solve(&Instance::new(0, 1, 0, vec![]).unwrap()).is_yes());
    }

    #[test]
    fn duplicates_are_capped_and_restored() {
        let inst = Instance::from_rows(2, 0, &["01", "01", "01", "10"]);
        let (capped, kept) = cap_duplicates(&inst);
        assert_eq!(capped.len(), 3);
        assert_eq!(kept, vec![0, 1, 3]);
        let out = solve(&inst);
        assert!(out.trace.contains(&TraceStep::DuplicateCapped { row: 2 }));
        let w = out.witness.unwrap();
        assert_eq!(w.completed.len(), 4);
        assert!(verify_solution(&inst, &w).passed());
    }

    #[test]
    fn heavy_rows_are_lifted() {
        let inst = Instance::from_rows(3, 1, &["0000??", "??????", "111111"]);
        let out = solve(&inst);
        assert!(out.trace.iter().any(|s| matches!(s, TraceStep::HeavyWildcard { row: 1, .. })));
        let w = out.witness.unwrap();
        assert!(verify_solution(&inst, &w).passed());
        assert!(oracle_solve(&inst).unwrap().is_yes());
    }

    #[test]
    fn tiny_gate_agrees_with_oracle() {
        let inst = Instance::from_rows(2, 0, &["0?", "00", "01"]);
        let o = Overrides { zeta_gate: Some(1), sunflower_target: None };
        let out = solve_with(&inst, o);
        assert_eq!(out.answer, oracle_solve(&inst).unwrap().answer);
    }

    #[test]
    fn pruning_path_with_overrides() {
        let inst = Instance::from_rows(2, 1, &["00000", "10000", "01000", "00100", "00010", "00001"]);
        let o = Overrides { zeta_gate: Some(3), sunflower_target: Some(3) };
        let out = solve_with(&inst, o);
        assert!(out.trace.iter().any(|s| matches!(s, TraceStep::Pruned { .. })), "{:?}", out.trace);
        assert_eq!(out.answer, oracle_solve(&inst).unwrap().answer);
    }
}
