//! Sunflowers in uniform set families.
//!
//! The search is the classical Erdős–Rado recursion: take a maximal family of
//! pairwise disjoint members; if it is large enough it is a sunflower with an
//! empty core, otherwise every member meets its union, so some element of the
//! union is shared by many members and we recurse on those with the element
//! moved into the core. When the most frequent element does not lead to a
//! large enough sunflower the remaining union elements are tried in order;
//! the union has at most `b * (a - 1)` elements, so for fixed `a` and `b` the
//! running time stays polynomial in the family size.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

/// Element identifier of the ground universe.
pub type Element = u32;

/// A family of finite sets. Members are identified by their position.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SetFamily {
    members: Vec<Vec<Element>>,
}

impl SetFamily {
    /// Each member is sorted and deduplicated.
    pub fn new(members: Vec<Vec<Element>>) -> Self {
        let members = members
            .into_iter()
            .map(|mut m| {
                m.sort_unstable();
                m.dedup();
                m
            })
            .collect();
        Self { members }
    }

    pub fn members(&self) -> &[Vec<Element>] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// A core plus the positions of the family members forming the sunflower.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sunflower {
    pub core: Vec<Element>,
    pub members: Vec<usize>,
}

impl Sunflower {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Checks the defining property directly: distinct members, each
    /// containing the core, with every pairwise intersection equal to it.
    pub fn is_valid_in(&self, family: &SetFamily) -> bool {
        let core: BTreeSet<Element> = self.core.iter().copied().collect();
        let mut seen = BTreeSet::new();
        let mut sets = Vec::with_capacity(self.members.len());
        for &m in &self.members {
            if m >= family.len() || !seen.insert(m) {
                return false;
            }
            let set: BTreeSet<Element> = family.members[m].iter().copied().collect();
            if !core.is_subset(&set) {
                return false;
            }
            sets.push(set);
        }
        for (i, s) in sets.iter().enumerate() {
            for t in &sets[i + 1..] {
                if s.intersection(t).ne(core.iter()) {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SunflowerError {
    #[error("member {index} has {found} elements, expected {expected}")]
    NonUniform {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("sunflower size target must be at least 1")]
    ZeroTarget,
}

/// `b! * (a - 1)^b`, saturating at `u64::MAX`: the family size from which a
/// sunflower with `a` members is guaranteed.
pub fn erdos_rado_bound(b: usize, a: usize) -> u64 {
    let base = a.saturating_sub(1) as u64;
    (1..=b as u64).fold(1u64, |acc, i| acc.saturating_mul(i).saturating_mul(base))
}

/// Searches a `b`-uniform family for a sunflower with `a` members.
///
/// Returns the first sunflower with `a` members found (truncated to exactly
/// `a`), or failing that the largest valid sunflower seen along the way.
/// `None` only for an empty family. The search follows the Erdős–Rado
/// induction, so a family with more than [`erdos_rado_bound`]`(b, a)` members
/// always yields `a` members.
pub fn find_sunflower(
    family: &SetFamily,
    b: usize,
    a: usize,
) -> Result<Option<Sunflower>, SunflowerError> {
    if a == 0 {
        return Err(SunflowerError::ZeroTarget);
    }
    if let Some((index, m)) = family.members.iter().enumerate().find(|(_, m)| m.len() != b) {
        return Err(SunflowerError::NonUniform {
            index,
            expected: b,
            found: m.len(),
        });
    }
    if family.is_empty() {
        return Ok(None);
    }
    let all: Vec<usize> = (0..family.len()).collect();
    let mut search = Search {
        family,
        target: a,
        best: None,
    };
    let mut core = Vec::new();
    if let Some(found) = search.run(&all, &mut core) {
        return Ok(Some(found));
    }
    Ok(search.best)
}

struct Search<'a> {
    family: &'a SetFamily,
    target: usize,
    best: Option<Sunflower>,
}

impl Search<'_> {
    /// Every member listed in `ids` contains all of `core`.
    fn run(&mut self, ids: &[usize], core: &mut Vec<Element>) -> Option<Sunflower> {
        let petals = |m: usize| {
            let core = &*core;
            self.family.members[m]
                .iter()
                .copied()
                .filter(move |e| !core.contains(e))
        };

        let mut used = BTreeSet::new();
        let mut disjoint = Vec::new();
        for &m in ids {
            if petals(m).all(|e| !used.contains(&e)) {
                used.extend(petals(m));
                disjoint.push(m);
                if disjoint.len() == self.target {
                    break;
                }
            }
        }
        let candidate = Sunflower {
            core: {
                let mut c = core.clone();
                c.sort_unstable();
                c
            },
            members: disjoint,
        };
        if candidate.len() >= self.target {
            return Some(candidate);
        }
        if self.best.as_ref().is_none_or(|b| b.len() < candidate.len()) {
            self.best = Some(candidate);
        }
        if used.is_empty() {
            return None;
        }

        let mut freq: BTreeMap<Element, usize> = used.iter().map(|&e| (e, 0)).collect();
        for &m in ids {
            for e in petals(m) {
                if let Some(c) = freq.get_mut(&e) {
                    *c += 1;
                }
            }
        }
        let mut order: Vec<(Element, usize)> = freq.into_iter().collect();
        order.sort_by(|x, y| y.1.cmp(&x.1).then(x.0.cmp(&y.0)));

        for (e, count) in order {
            if count < self.target {
                break;
            }
            let sub: Vec<usize> = ids
                .iter()
                .copied()
                .filter(|&m| self.family.members[m].binary_search(&e).is_ok())
                .collect();
            core.push(e);
            let found = self.run(&sub, core);
            core.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
}
