//! Rows with many wildcards.
//!
//! A row with more than `(k - 1)(r + 1)` unknown entries can always be
//! completed to sit at distance `r + 1` from any `k - 1` other vectors, so it
//! can be set aside with `k` decremented and added back afterwards.

use super::SolverError;
use crate::instance::Instance;
use crate::solution::{verify_solution, Solution};
use crate::vector::PartialVector;

/// `(k - 1)(r + 1)`; rows with strictly more wildcards are heavy.
pub fn heavy_threshold(k: usize, r: usize) -> usize {
    k.saturating_sub(1).saturating_mul(r.saturating_add(1))
}

/// What [`reduce_heavy_wildcard`] removed, enough to lift a witness back.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemovedRow {
    pub position: usize,
    pub row: PartialVector,
    pub k_before: usize,
}

/// Removes the lowest-index heavy row and decrements `k`.
pub fn reduce_heavy_wildcard(instance: &Instance) -> Result<(Instance, RemovedRow), SolverError> {
    let k = instance.k();
    if k == 0 {
        return Err(SolverError::NotApplicable("k = 0".into()));
    }
    let limit = heavy_threshold(k, instance.r());
    let position = instance
        .rows()
        .iter()
        .position(|v| v.unknown_count() > limit)
        .ok_or_else(|| {
            SolverError::NotApplicable(format!("no row has more than {limit} unknown entries"))
        })?;
    let reduced = instance.without_row(position)?.with_k(k - 1);
    let record = RemovedRow {
        position,
        row: instance.row(position).clone(),
        k_before: k,
    };
    Ok((reduced, record))
}

/// Completes `v` so that it is at distance at least `r + 1` from each of
/// `selected`: the first `|selected| * (r + 1)` wildcard coordinates of `v`
/// are cut into consecutive blocks of `r + 1`, block `i` is set opposite to
/// `selected[i]`, and every remaining wildcard becomes 0.
///
/// `v` must have at least `|selected| * (r + 1)` wildcards and every selected
/// vector must be fully known.
pub(crate) fn lifted_vector(v: &PartialVector, selected: &[&PartialVector], r: usize) -> PartialVector {
    let holes = v.unknown_positions();
    let block = r + 1;
    assert!(
        holes.len() >= selected.len() * block,
        "lifting needs {} wildcards, row has {}",
        selected.len() * block,
        holes.len()
    );
    let mut out = v.complete_with_zeros();
    for (i, s) in selected.iter().enumerate() {
        for &j in &holes[i * block..(i + 1) * block] {
            let opposite = s.get(j).flipped().expect("selected vectors are complete");
            out.set(j, opposite);
        }
    }
    out
}

/// Turns a witness for the reduced instance (`k - 1` selected) into one for
/// the instance `record` was removed from: the removed row is re-inserted at
/// its position, completed by [`lifted_vector`] against the selected rows in
/// ascending index order, and added to the selection.
pub fn lift_heavy_wildcard(
    reduced_instance: &Instance,
    reduced: &Solution,
    record: &RemovedRow,
) -> Result<Solution, SolverError> {
    let report = verify_solution(reduced_instance, reduced);
    if !report.passed() {
        return Err(SolverError::InvalidWitness(report.to_string()));
    }
    if record.position > reduced.completed.len() {
        return Err(SolverError::InvalidWitness(format!(
            "removed row position {} past {} rows",
            record.position,
            reduced.completed.len()
        )));
    }
    let r = reduced_instance.r();
    if record.row.unknown_count() < reduced.selected.len() * (r + 1) {
        return Err(SolverError::NotApplicable(
            "removed row has too few wildcards to lift".into(),
        ));
    }
    let selected: Vec<&PartialVector> = reduced.selected.iter().map(|&i| &reduced.completed[i]).collect();
    let lifted = lifted_vector(&record.row, &selected, r);

    let mut completed = reduced.completed.clone();
    completed.insert(record.position, lifted);
    let mut picks: Vec<usize> = reduced
        .selected
        .iter()
        .map(|&i| if i >= record.position { i + 1 } else { i })
        .collect();
    picks.push(record.position);
    Ok(Solution::new(completed, picks))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pv(s: &str) -> PartialVector {
        s.parse().unwrap()
    }

    #[test]
    fn removes_first_heavy_row() {
        let inst = Instance::from_rows(2, 1, &["????0", "00000"]);
        let (reduced, rec) = reduce_heavy_wildcard(&inst).unwrap();
        assert_eq!(reduced.k(), 1);
        assert_eq!(reduced.rows(), &[pv("00000")]);
        assert_eq!(rec.position, 0);
        assert_eq!(rec.row, pv("????0"));
    }

    #[test]
    fn any_wildcard_is_heavy_when_k_is_one() {
        let inst = Instance::from_rows(1, 7, &["000", "0?0"]);
        let (reduced, rec) = reduce_heavy_wildcard(&inst).unwrap();
        assert_eq!(rec.position, 1);
        assert_eq!(reduced.k(), 0);
    }

    #[test]
    fn not_applicable_without_heavy_rows() {
        let inst = Instance::from_rows(2, 1, &["??00", "0000"]);
        assert!(matches!(reduce_heavy_wildcard(&inst), Err(SolverError::NotApplicable(_))));
        assert!(reduce_heavy_wildcard(&inst.with_k(0)).is_err());
    }

    #[test]
    fn lift_against_single_vector() {
        // v = ???0, r = 1, one selected vector 0000: the first two wildcard
        // coordinates flip to 1, the third completes to 0.
        let original = Instance::from_rows(2, 1, &["???0", "0000"]);
        let (reduced, rec) = reduce_heavy_wildcard(&original).unwrap();
        let witness = Solution::new(vec![pv("0000")], vec![0]);
        let lifted = lift_heavy_wildcard(&reduced, &witness, &rec).unwrap();
        assert_eq!(lifted.completed, vec![pv("1100"), pv("0000")]);
        assert_eq!(lifted.selected, vec![0, 1]);
        assert!(verify_solution(&original, &lifted).passed());
    }

    #[test]
    fn lift_to_empty_selection() {
        let original = Instance::from_rows(1, 0, &["1?0?"]);
        let (reduced, rec) = reduce_heavy_wildcard(&original).unwrap();
        let witness = Solution::new(vec![], vec![]);
        let lifted = lift_heavy_wildcard(&reduced, &witness, &rec).unwrap();
        assert_eq!(lifted.completed, vec![pv("1000")]);
        assert_eq!(lifted.selected, vec![0]);
        assert!(verify_solution(&original, &lifted).passed());
    }

    #[test]
    fn lift_uses_consecutive_blocks() {
        // k = 3, r = 0: blocks of one wildcard each, against 0011 and 1100.
        let original = Instance::from_rows(3, 0, &["0011", "??1?", "1100"]);
        let (reduced, rec) = reduce_heavy_wildcard(&original).unwrap();
        assert_eq!(rec.position, 1);
        let witness = Solution::new(vec![pv("0011"), pv("1100")], vec![0, 1]);
        let lifted = lift_heavy_wildcard(&reduced, &witness, &rec).unwrap();
        assert_eq!(lifted.completed[1], pv("1010"));
        assert_eq!(lifted.selected, vec![0, 1, 2]);
        assert!(verify_solution(&original, &lifted).passed());
    }

    #[test]
    fn lift_rejects_invalid_reduced_witness() {
        let original = Instance::from_rows(3, 1, &["??????", "000000", "000001"]);
        let (reduced, rec) = reduce_heavy_wildcard(&original).unwrap();
        let bad = Solution::new(vec![pv("000000"), pv("000001")], vec![0, 1]);
        assert!(matches!(
            lift_heavy_wildcard(&reduced, &bad, &rec),
            Err(SolverError::InvalidWitness(_))
        ));
    }
}
