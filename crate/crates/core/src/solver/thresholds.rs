//! Size thresholds of the kernelization.
//!
//! All values saturate at [`SATURATION_CAP`]. They are only ever compared
//! against row counts, so saturation can only make a gate harder to pass.

use serde::Serialize;

use super::SolverError;

/// `2^63 - 1`.
pub const SATURATION_CAP: u64 = (1u64 << 63) - 1;

fn sat_mul(a: u64, b: u64) -> u64 {
    a.checked_mul(b).map_or(SATURATION_CAP, |x| x.min(SATURATION_CAP))
}

fn sat_add(a: u64, b: u64) -> u64 {
    a.saturating_add(b).min(SATURATION_CAP)
}

fn sat_pow(base: u64, exp: u64) -> u64 {
    let mut acc = 1u64;
    for _ in 0..exp {
        acc = sat_mul(acc, base);
        if acc == SATURATION_CAP || acc == 0 {
            break;
        }
    }
    acc
}

/// `sum_{alpha=1..=terms} alpha! * base^alpha`, saturating.
fn factorial_power_sum(base: u64, terms: u64) -> u64 {
    let mut sum = 0u64;
    let mut term = 1u64;
    for alpha in 1..=terms {
        term = sat_mul(sat_mul(term, alpha), base);
        sum = sat_add(sum, term);
        if term == 0 || sum == SATURATION_CAP {
            break;
        }
    }
    sum
}

struct Shape {
    /// `(k - 1)(r + 1)`: the wildcard budget per row.
    budget: u64,
    /// `(k - 1) * 2 * (3(k - 1)(r + 1) + 2r)`: the petal-blocking count.
    blocking: u64,
    /// Largest possible size of a set-system member, `(k - 1)(r + 1) + r`.
    max_alpha: u64,
}

fn shape(k: usize, r: usize) -> Result<Shape, SolverError> {
    if k == 0 {
        return Err(SolverError::ZeroK);
    }
    let (k1, r) = ((k - 1) as u64, r as u64);
    let budget = sat_mul(k1, sat_add(r, 1));
    let blocking = sat_mul(sat_mul(k1, 2), sat_add(sat_mul(3, budget), sat_mul(2, r)));
    Ok(Shape {
        budget,
        blocking,
        max_alpha: sat_add(budget, r),
    })
}

/// The neighbourhood-size threshold `zeta(k, r)` of the bounded-neighbourhood
/// and irrelevant-vector arguments.
pub fn zeta(k: usize, r: usize) -> Result<u64, SolverError> {
    let s = shape(k, r)?;
    Ok(sat_mul(
        sat_pow(3, s.budget),
        factorial_power_sum(s.blocking, s.max_alpha),
    ))
}

/// Sunflower size used when hunting for an irrelevant vector:
/// `(k - 1) * 2 * (3(k - 1)(r + 1) + 2r) + 2`. One more than the blocking
/// count plus the vector being replaced.
pub fn sunflower_target(k: usize, r: usize) -> Result<u64, SolverError> {
    Ok(sat_add(shape(k, r)?.blocking, 2))
}

/// The gate actually used by the solver:
/// `3^((k-1)(r+1)) * (k + sum_{alpha} alpha! * (target - 1)^alpha)`.
/// The extra `k` absorbs up to `k` identical rows with an empty set image.
pub fn zeta_plus(k: usize, r: usize) -> Result<u64, SolverError> {
    let s = shape(k, r)?;
    let target = sunflower_target(k, r)?;
    let inner = sat_add(k as u64, factorial_power_sum(target - 1, s.max_alpha));
    Ok(sat_mul(sat_pow(3, s.budget), inner))
}

/// Test-only replacements for the gate and the sunflower target, so the
/// bounded-neighbourhood and pruning paths can run on small instances.
/// Runs using them are not certified by the kernelization argument.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Overrides {
    pub zeta_gate: Option<u64>,
    pub sunflower_target: Option<u64>,
}

impl Overrides {
    pub fn is_empty(&self) -> bool {
        self.zeta_gate.is_none() && self.sunflower_target.is_none()
    }
}

/// Thresholds for one `(k, r)` pair, with any overrides applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Thresholds {
    pub zeta: u64,
    pub zeta_gate: u64,
    pub sunflower_target: u64,
    pub overrides: Overrides,
}

impl Thresholds {
    pub fn new(k: usize, r: usize) -> Result<Self, SolverError> {
        Ok(Self {
            zeta: zeta(k, r)?,
            zeta_gate: zeta_plus(k, r)?,
            sunflower_target: sunflower_target(k, r)?,
            overrides: Overrides::default(),
        })
    }

    pub fn with_overrides(k: usize, r: usize, overrides: Overrides) -> Result<Self, SolverError> {
        let base = Self::new(k, r)?;
        Ok(Self {
            zeta_gate: overrides.zeta_gate.unwrap_or(base.zeta_gate),
            sunflower_target: overrides.sunflower_target.unwrap_or(base.sunflower_target),
            overrides,
            ..base
        })
    }

    pub fn is_overridden(&self) -> bool {
        !self.overrides.is_empty()
    }
}
