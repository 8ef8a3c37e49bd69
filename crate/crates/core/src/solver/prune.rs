//! Irrelevant-row search.
//!
//! Around a row `v` with a large `r`-neighbourhood, neighbours are grouped by
//! their pattern on the wildcard coordinates `Z` of `v`; the largest group is
//! encoded as sets over `{wild_j, diff_j : j not in Z}` (wildcard at `j`, or
//! known and different from `v` at `j`), and a large enough sunflower in one
//! size class contains a member whose removal cannot change the answer.

use std::collections::BTreeMap;

use super::heavy::heavy_threshold;
use super::{SolverError, Thresholds};
use crate::instance::Instance;
use crate::sunflower::{erdos_rado_bound, find_sunflower, SetFamily};
use crate::vector::{Entry, PartialVector};

/// An element of the set image of a neighbour. Coordinates are 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SetElement {
    /// The neighbour has a wildcard at this coordinate.
    Wild(usize),
    /// The neighbour is known here and differs from the centre.
    Differs(usize),
}

impl SetElement {
    fn id(self) -> u32 {
        match self {
            SetElement::Wild(j) => 2 * j as u32,
            SetElement::Differs(j) => 2 * j as u32 + 1,
        }
    }
}

/// Set image of `x` relative to centre `v`, over coordinates where `v` is known.
pub fn set_image(v: &PartialVector, x: &PartialVector) -> Vec<SetElement> {
    let mut out = Vec::new();
    for j in 0..v.len() {
        let centre = v.get(j);
        if centre == Entry::Unknown {
            continue;
        }
        match x.get(j) {
            Entry::Unknown => out.push(SetElement::Wild(j)),
            e if e != centre => out.push(SetElement::Differs(j)),
            _ => {}
        }
    }
    out
}

/// A row found to be irrelevant, with the data that justified it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prune {
    pub row: usize,
    /// Size of the set images in the sunflower.
    pub alpha: usize,
    pub core_size: usize,
    pub sunflower_size: usize,
}

/// Finds a row whose removal preserves the answer, using the `r`-neighbourhood
/// of row `v`.
///
/// Requires every row to have at most `(k - 1)(r + 1)` wildcards, `N_r(v)` to
/// reach the gate, and no partial row to occur more than `k` times.
pub fn find_irrelevant_vector(
    instance: &Instance,
    v: usize,
    thresholds: &Thresholds,
) -> Result<Prune, SolverError> {
    instance.check_index(v)?;
    let (k, r) = (instance.k(), instance.r());
    if k == 0 {
        return Err(SolverError::NotApplicable("k = 0".into()));
    }
    let budget = heavy_threshold(k, r);
    if let Some(i) = instance.rows().iter().position(|x| x.unknown_count() > budget) {
        return Err(SolverError::NotApplicable(format!(
            "row {i} has more than {budget} wildcards"
        )));
    }
    let mut multiplicity: BTreeMap<&PartialVector, usize> = BTreeMap::new();
    for row in instance.rows() {
        *multiplicity.entry(row).or_default() += 1;
    }
    if multiplicity.values().any(|&m| m > k) {
        return Err(SolverError::NotApplicable(format!(
            "some row occurs more than k = {k} times"
        )));
    }
    let neighbourhood = instance.hamming_neighborhood(v, r)?;
    if (neighbourhood.len() as u64) < thresholds.zeta_gate {
        return Err(SolverError::NotApplicable(format!(
            "N_r(v) has {} rows, gate is {}",
            neighbourhood.len(),
            thresholds.zeta_gate
        )));
    }

    let centre = instance.row(v);
    let wild = centre.unknown_positions();

    // Largest class of neighbours agreeing on the wildcard coordinates of v;
    // ties go to the class whose first member has the lowest index.
    let mut classes: BTreeMap<Vec<Entry>, Vec<usize>> = BTreeMap::new();
    for &x in &neighbourhood {
        let pattern = wild.iter().map(|&z| instance.row(x).get(z)).collect();
        classes.entry(pattern).or_default().push(x);
    }
    let class = classes
        .into_values()
        .max_by(|a, b| a.len().cmp(&b.len()).then(b[0].cmp(&a[0])))
        .expect("neighbourhood contains v");

    let images: Vec<(usize, Vec<SetElement>)> = class
        .iter()
        .map(|&x| (x, set_image(centre, instance.row(x))))
        .collect();
    let max_alpha = budget + r;
    let target = thresholds.sunflower_target;
    let mut by_size = vec![0usize; max_alpha + 1];
    for (_, img) in &images {
        if img.len() <= max_alpha {
            by_size[img.len()] += 1;
        }
    }
    let alpha = (1..=max_alpha)
        .find(|&a| by_size[a] as u64 >= erdos_rado_bound(a, target as usize))
        .ok_or_else(|| {
            let (alpha, largest) = by_size
                .iter()
                .enumerate()
                .skip(1)
                .max_by_key(|&(a, c)| (*c, std::cmp::Reverse(a)))
                .map_or((0, 0), |(a, &c)| (a, c));
            SolverError::Pigeonhole { alpha, largest }
        })?;

    let (rows, sets): (Vec<usize>, Vec<Vec<u32>>) = images
        .into_iter()
        .filter(|(_, img)| img.len() == alpha)
        .map(|(x, img)| (x, img.into_iter().map(SetElement::id).collect()))
        .unzip();
    let family = SetFamily::new(sets);
    let sunflower = find_sunflower(&family, alpha, target as usize)?
        .filter(|s| s.len() as u64 >= target)
        .ok_or(SolverError::SunflowerTooSmall {
            found: 0,
            needed: target,
        })?;
    let row = sunflower
        .members
        .iter()
        .map(|&m| rows[m])
        .min()
        .expect("sunflower is non-empty");
    Ok(Prune {
        row,
        alpha,
        core_size: sunflower.core.len(),
        sunflower_size: sunflower.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{oracle_solve, Overrides};

    fn pv(s: &str) -> PartialVector {
        s.parse().unwrap()
    }

    fn small(k: usize, r: usize) -> Thresholds {
        let o = Overrides { zeta_gate: Some(5), sunflower_target: Some(3) };
        Thresholds::with_overrides(k, r, o).unwrap()
    }

    #[test]
    fn set_image_marks_wildcards_and_differences() {
        // coordinates 1 and 2 in 1-based terms
        assert_eq!(
            set_image(&pv("0000"), &pv("1?00")),
            vec![SetElement::Differs(0), SetElement::Wild(1)]
        );
        // coordinates where the centre is unknown are skipped
        assert_eq!(set_image(&pv("?0"), &pv("1?")), vec![SetElement::Wild(1)]);
    }

    #[test]
    fn prunes_a_unit_vector() {
        let inst = Instance::from_rows(2, 1, &["0000", "1000", "0100", "0010", "0001"]);
        let p = find_irrelevant_vector(&inst, 0, &small(2, 1)).unwrap();
        assert_eq!(p.row, 1);
        assert_eq!((p.alpha, p.core_size), (1, 0));
        let before = oracle_solve(&inst).unwrap().answer;
        let after = oracle_solve(&inst.without_row(p.row).unwrap()).unwrap().answer;
        assert_eq!(before, after);
    }

    #[test]
    fn rejects_heavy_rows() {
        let inst = Instance::from_rows(2, 1, &["0000", "1000", "0100", "0010", "???1"]);
        assert!(matches!(
            find_irrelevant_vector(&inst, 0, &small(2, 1)),
            Err(SolverError::NotApplicable(_))
        ));
    }

    #[test]
    fn rejects_small_neighbourhood_and_uncapped_duplicates() {
        let inst = Instance::from_rows(2, 1, &["0000", "1000", "0100", "0010", "0001"]);
        let real = Thresholds::new(2, 1).unwrap();
        assert!(find_irrelevant_vector(&inst, 0, &real).is_err());
        let dup = Instance::from_rows(1, 1, &["0000", "0000", "1000", "0100", "0010"]);
        assert!(find_irrelevant_vector(&dup, 0, &small(1, 1)).is_err());
        assert!(find_irrelevant_vector(&inst, 9, &small(2, 1)).is_err());
    }

    #[test]
    fn pigeonhole_failure_is_reported() {
        // Only two size-1 images, while a target of 4 needs 3 of them.
        let inst = Instance::from_rows(3, 1, &["0000", "1000", "0100", "0000", "0000"]);
        let o = Overrides { zeta_gate: Some(5), sunflower_target: Some(4) };
        let t = Thresholds::with_overrides(3, 1, o).unwrap();
        assert!(matches!(
            find_irrelevant_vector(&inst, 0, &t),
            Err(SolverError::Pigeonhole { .. })
        ));
    }
}
