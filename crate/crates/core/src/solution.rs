//! Witnesses, their verification, and the solution file format.
//!
//! A solution file is `NO`, or `YES` followed by the completed rows in input
//! order and a final `S: i1 i2 ...` line of 0-based selected row indices.

use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;
use crate::instance::{content_lines, Instance};
use crate::vector::PartialVector;

/// A completion of every row, aligned with the instance rows by index, plus
/// the selected diversity set (sorted, 0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub completed: Vec<PartialVector>,
    pub selected: Vec<usize>,
}

impl Solution {
    pub fn new(completed: Vec<PartialVector>, mut selected: Vec<usize>) -> Self {
        selected.sort_unstable();
        Self {
            completed,
            selected,
        }
    }
}

/// One reason a witness fails to certify an instance. Coordinates are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    RowCount { expected: usize, found: usize },
    RowLength { row: usize, expected: usize, found: usize },
    Incomplete { row: usize, coordinate: usize },
    CompletionMismatch { row: usize, coordinate: usize },
    SelectionSize { expected: usize, found: usize },
    SelectionOutOfRange { index: usize },
    DuplicateSelection { index: usize },
    PairTooClose { a: usize, b: usize, distance: usize, required: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::RowCount { expected, found } => {
                write!(f, "row count: {found} completed rows for {expected} instance rows")
            }
            Violation::RowLength { row, expected, found } => {
                write!(f, "row {row}: length {found}, expected {expected}")
            }
            Violation::Incomplete { row, coordinate } => {
                write!(f, "row {row}: coordinate {coordinate} left unknown")
            }
            Violation::CompletionMismatch { row, coordinate } => write!(
                f,
                "completion mismatch: row {row} overwrites known coordinate {coordinate}"
            ),
            Violation::SelectionSize { expected, found } => {
                write!(f, "selection size {found}, expected k = {expected}")
            }
            Violation::SelectionOutOfRange { index } => {
                write!(f, "selected index {index} is not a row")
            }
            Violation::DuplicateSelection { index } => {
                write!(f, "row {index} selected more than once")
            }
            Violation::PairTooClose { a, b, distance, required } => write!(
                f,
                "pair distance: rows {a} and {b} are at distance {distance} < {required}"
            ),
        }
    }
}

/// Outcome of [`verify_solution`]: passes iff there are no violations.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return writeln!(f, "PASS");
        }
        writeln!(f, "FAIL")?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}

/// Checks that `solution` completes every row of `instance`, selects exactly
/// `k` distinct rows, and that every selected pair is at distance `>= r + 1`.
pub fn verify_solution(instance: &Instance, solution: &Solution) -> VerifyReport {
    let mut violations = Vec::new();
    let rows = instance.rows();

    if solution.completed.len() != rows.len() {
        violations.push(Violation::RowCount {
            expected: rows.len(),
            found: solution.completed.len(),
        });
    }
    let mut row_ok = vec![false; solution.completed.len()];
    for (i, (done, orig)) in solution.completed.iter().zip(rows).enumerate() {
        if done.len() != orig.len() {
            violations.push(Violation::RowLength {
                row: i,
                expected: orig.len(),
                found: done.len(),
            });
            continue;
        }
        let mut ok = true;
        for (j, (c, o)) in done.entries().zip(orig.entries()).enumerate() {
            if c.flipped().is_none() {
                violations.push(Violation::Incomplete { row: i, coordinate: j + 1 });
                ok = false;
                break;
            }
            if o.flipped().is_some() && c != o {
                violations.push(Violation::CompletionMismatch { row: i, coordinate: j + 1 });
                ok = false;
                break;
            }
        }
        row_ok[i] = ok;
    }

    if solution.selected.len() != instance.k() {
        violations.push(Violation::SelectionSize {
            expected: instance.k(),
            found: solution.selected.len(),
        });
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut usable = Vec::new();
    for &s in &solution.selected {
        if s >= solution.completed.len() || s >= rows.len() {
            violations.push(Violation::SelectionOutOfRange { index: s });
        } else if !seen.insert(s) {
            violations.push(Violation::DuplicateSelection { index: s });
        } else if row_ok[s] {
            usable.push(s);
        }
    }
    let required = instance.r() + 1;
    for (x, &a) in usable.iter().enumerate() {
        for &b in &usable[x + 1..] {
            let distance = solution.completed[a].delta_unchecked(&solution.completed[b]);
            if distance < required {
                violations.push(Violation::PairTooClose { a, b, distance, required });
            }
        }
    }
    VerifyReport { violations }
}

/// Contents of a solution file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolutionFile {
    No,
    Yes(Solution),
}

impl fmt::Display for SolutionFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolutionFile::No => writeln!(f, "NO"),
            SolutionFile::Yes(sol) => {
                writeln!(f, "YES")?;
                for row in &sol.completed {
                    writeln!(f, "{row}")?;
                }
                write!(f, "S:")?;
                for s in &sol.selected {
                    write!(f, " {s}")?;
                }
                writeln!(f)
            }
        }
    }
}

impl FromStr for SolutionFile {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut lines = content_lines(text);
        let (line, first) = lines
            .next()
            .ok_or_else(|| ParseError::new(1, "empty solution file"))?;
        match first.trim() {
            "NO" => {
                if let Some((line, _)) = lines.next() {
                    return Err(ParseError::new(line, "unexpected content after NO"));
                }
                return Ok(SolutionFile::No);
            }
            "YES" => {}
            other => {
                return Err(ParseError::new(line, format!("expected YES or NO, got {other:?}")))
            }
        }
        let mut completed = Vec::new();
        let mut selected = None;
        for (line, content) in lines {
            if selected.is_some() {
                return Err(ParseError::new(line, "content after the S: line"));
            }
            if let Some(rest) = content.strip_prefix("S:") {
                let idx = rest
                    .split_whitespace()
                    .map(|t| {
                        t.parse::<usize>()
                            .map_err(|_| ParseError::new(line, format!("bad row index {t:?}")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                selected = Some(idx);
            } else {
                let row = PartialVector::parse(content).map_err(|col| {
                    ParseError::new(line, format!("illegal character at column {}", col + 1))
                })?;
                completed.push(row);
            }
        }
        let last = text.lines().count().max(1);
        let selected = selected.ok_or_else(|| ParseError::new(last, "missing `S:` line"))?;
        // Keep the order as written so verification can flag duplicates.
        Ok(SolutionFile::Yes(Solution {
            completed,
            selected,
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pv(s: &str) -> PartialVector {
        s.parse().unwrap()
    }

    fn inst() -> Instance {
        Instance::from_rows(2, 1, &["0?", "11"])
    }

    #[test]
    fn valid_witness_passes() {
        let sol = Solution::new(vec![pv("00"), pv("11")], vec![0, 1]);
        assert!(verify_solution(&inst(), &sol).passed());
    }

    #[test]
    fn close_pair_fails() {
        let sol = Solution::new(vec![pv("01"), pv("11")], vec![0, 1]);
        let report = verify_solution(&inst(), &sol);
        assert_eq!(
            report.violations,
            vec![Violation::PairTooClose { a: 0, b: 1, distance: 1, required: 2 }]
        );
    }

    #[test]
    fn overwritten_known_entry_fails() {
        let sol = Solution::new(vec![pv("10"), pv("11")], vec![0, 1]);
        let report = verify_solution(&inst(), &sol);
        assert!(!report.passed());
        assert!(report.to_string().contains("completion mismatch"));
    }

    #[test]
    fn structural_problems_are_reported() {
        let sol = Solution {
            completed: vec![pv("0?")],
            selected: vec![0, 0, 7],
        };
        let report = verify_solution(&inst(), &sol);
        let v = &report.violations;
        assert!(v.contains(&Violation::RowCount { expected: 2, found: 1 }));
        assert!(v.contains(&Violation::Incomplete { row: 0, coordinate: 2 }));
        assert!(v.contains(&Violation::SelectionSize { expected: 2, found: 3 }));
        assert!(v.contains(&Violation::DuplicateSelection { index: 0 }));
        assert!(v.contains(&Violation::SelectionOutOfRange { index: 7 }));
    }

    #[test]
    fn solution_file_round_trip() {
        let file = SolutionFile::Yes(Solution::new(vec![pv("00"), pv("11")], vec![1, 0]));
        let text = file.to_string();
        assert_eq!(text, "YES\n00\n11\nS: 0 1\n");
        assert_eq!(text.parse::<SolutionFile>().unwrap(), file);
        assert_eq!("NO\n".parse::<SolutionFile>().unwrap(), SolutionFile::No);
        assert_eq!("YES\nS:\n".parse::<SolutionFile>().unwrap().to_string(), "YES\nS:\n");
    }

    #[test]
    fn malformed_solution_files() {
        assert!("MAYBE\n".parse::<SolutionFile>().is_err());
        assert!("YES\n00\n".parse::<SolutionFile>().is_err());
        assert_eq!("YES\n00\nS: 0 x\n".parse::<SolutionFile>().unwrap_err().line, 3);
    }
}
