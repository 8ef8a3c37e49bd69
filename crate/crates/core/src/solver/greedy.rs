use super::{SolverError, Thresholds};
use crate::instance::Instance;
use crate::solution::Solution;
use crate::vector::PartialVector;

/// `k` rounds of: take the lowest-index surviving row and delete every
/// surviving row within known-entry distance `r` of it. Returns the picks, or
/// `None` if the rows run out first.
///
/// Any success is a certificate: completing the remaining wildcards can only
/// increase distances.
pub(crate) fn greedy_pick(instance: &Instance) -> Option<Vec<usize>> {
    greedy_pick_limited(instance, None).ok().flatten()
}

/// As [`greedy_pick`], but fails with an error if a round deletes `limit` or
/// more rows besides the pick.
fn greedy_pick_limited(instance: &Instance, limit: Option<u64>) -> Result<Option<Vec<usize>>, SolverError> {
    let rows = instance.rows();
    let mut alive = vec![true; rows.len()];
    let mut picks = Vec::with_capacity(instance.k());
    let mut next = 0;
    while picks.len() < instance.k() {
        while next < rows.len() && !alive[next] {
            next += 1;
        }
        if next == rows.len() {
            return Ok(None);
        }
        let p = next;
        picks.push(p);
        let mut deleted = 0u64;
        for j in p..rows.len() {
            if alive[j] && rows[p].delta_unchecked(&rows[j]) <= instance.r() {
                alive[j] = false;
                deleted += 1;
            }
        }
        if let Some(limit) = limit {
            if deleted > limit {
                return Err(SolverError::NotApplicable(format!(
                    "round deleted {} rows besides row {p}, gate allows {}",
                    deleted - 1,
                    limit.saturating_sub(1)
                )));
            }
        }
    }
    Ok(Some(picks))
}

/// Every row completed with zeros, `selected` as given.
pub(crate) fn zero_completion(instance: &Instance, selected: Vec<usize>) -> Solution {
    let completed = instance.rows().iter().map(PartialVector::complete_with_zeros).collect();
    Solution::new(completed, selected)
}

/// Solves an instance that is large (`|M| >= k * gate`) and whose
/// `r`-neighbourhoods are all smaller than the gate, by the greedy procedure.
pub fn greedy_bounded_neighborhood(
    instance: &Instance,
    thresholds: &Thresholds,
) -> Result<Solution, SolverError> {
    let k = instance.k();
    if k == 0 {
        return Ok(zero_completion(instance, Vec::new()));
    }
    let gate = thresholds.zeta_gate;
    let n = instance.len() as u64;
    if n < (k as u64).saturating_mul(gate) {
        return Err(SolverError::NotApplicable(format!(
            "{n} rows, need at least k * gate = {}",
            (k as u64).saturating_mul(gate)
        )));
    }
    for v in 0..instance.len() {
        let size = instance.hamming_neighborhood(v, instance.r())?.len() as u64;
        if size >= gate {
            return Err(SolverError::NotApplicable(format!(
                "row {v} has an r-neighbourhood of {size} >= gate {gate}"
            )));
        }
    }
    let picks = greedy_pick_limited(instance, Some(gate))?
        .ok_or_else(|| SolverError::NotApplicable("greedy ran out of rows".into()))?;
    Ok(zero_completion(instance, picks))
}
