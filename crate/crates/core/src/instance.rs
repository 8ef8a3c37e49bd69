//! Problem instances and their text format.
//!
//! ```text
//! # comment lines and blank lines are ignored
//! 3 2 1        <- d k r
//! 010
//! 1?1
//! ```
//!
//! Rows of a `d = 0` instance are empty strings and therefore blank lines, so
//! the text format only carries zero-dimensional instances without rows.

use std::fmt;
use std::str::FromStr;

use crate::error::{ModelError, ParseError};
use crate::vector::PartialVector;

/// An ordered list of partial rows of common dimension `d`, plus the target
/// set size `k` and distance threshold `r` (selected rows must be at distance
/// at least `r + 1`). Duplicate rows are kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    d: usize,
    k: usize,
    r: usize,
    rows: Vec<PartialVector>,
}

impl Instance {
    pub fn new(d: usize, k: usize, r: usize, rows: Vec<PartialVector>) -> Result<Self, ModelError> {
        if let Some((row, v)) = rows.iter().enumerate().find(|(_, v)| v.len() != d) {
            return Err(ModelError::RowLength {
                row,
                expected: d,
                found: v.len(),
            });
        }
        Ok(Self { d, k, r, rows })
    }

    /// Builds an instance from row strings; panics on malformed rows.
    /// Meant for tests and examples.
    pub fn from_rows(k: usize, r: usize, rows: &[&str]) -> Self {
        let rows: Vec<PartialVector> = rows
            .iter()
            .map(|s| s.parse().unwrap_or_else(|p| panic!("bad row {s:?} at {p}")))
            .collect();
        let d = rows.first().map_or(0, PartialVector::len);
        Self::new(d, k, r, rows).expect("rows of equal length")
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn rows(&self) -> &[PartialVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &PartialVector {
        &self.rows[i]
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn total_unknowns(&self) -> usize {
        self.rows.iter().map(PartialVector::unknown_count).sum()
    }

    pub fn with_k(&self, k: usize) -> Self {
        Self { k, ..self.clone() }
    }

    /// Same parameters, different rows. Rows must have length `d`.
    pub fn with_rows(&self, rows: Vec<PartialVector>) -> Result<Self, ModelError> {
        Self::new(self.d, self.k, self.r, rows)
    }

    /// Copy without row `index`.
    pub fn without_row(&self, index: usize) -> Result<Self, ModelError> {
        self.check_index(index)?;
        let mut rows = self.rows.clone();
        rows.remove(index);
        Ok(Self { rows, ..self.clone() })
    }

    /// Indices of all rows within known-entry distance `t` of row `v`,
    /// including `v` itself.
    pub fn hamming_neighborhood(&self, v: usize, t: usize) -> Result<Vec<usize>, ModelError> {
        self.check_index(v)?;
        let center = &self.rows[v];
        Ok(self
            .rows
            .iter()
            .enumerate()
            .filter(|(_, row)| center.delta_unchecked(row) <= t)
            .map(|(j, _)| j)
            .collect())
    }

    pub(crate) fn check_index(&self, index: usize) -> Result<(), ModelError> {
        if index < self.rows.len() {
            Ok(())
        } else {
            Err(ModelError::IndexOutOfRange {
                index,
                len: self.rows.len(),
            })
        }
    }
}

/// Splits text into `(line_number, content)` pairs, dropping comments and
/// blank lines. Line numbers are 1-based.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_count(tok: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::new(line, format!("{what} must be a decimal count, got {tok:?}")));
    }
    tok.parse()
        .map_err(|_| ParseError::new(line, format!("{what} out of range: {tok}")))
}

impl FromStr for Instance {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut lines = content_lines(text);
        let (hline, header) = lines
            .next()
            .ok_or_else(|| ParseError::new(1, "missing header `d k r`"))?;
        let toks: Vec<&str> = header.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(ParseError::new(
                hline,
                format!("header must be `d k r`, got {} fields", toks.len()),
            ));
        }
        let d = parse_count(toks[0], hline, "d")?;
        let k = parse_count(toks[1], hline, "k")?;
        let r = parse_count(toks[2], hline, "r")?;

        let mut rows = Vec::new();
        for (line, content) in lines {
            let row = PartialVector::parse(content).map_err(|col| {
                ParseError::new(
                    line,
                    format!("illegal character at column {} (expected 0, 1 or ?)", col + 1),
                )
            })?;
            if row.len() != d {
                return Err(ParseError::new(
                    line,
                    format!("row has length {}, expected {d}", row.len()),
                ));
            }
            rows.push(row);
        }
        Ok(Instance { d, k, r, rows })
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {}", self.d, self.k, self.r)?;
        for row in &self.rows {
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::Entry;
    use proptest::prelude::*;

    #[test]
    fn parses_small_instance() {
        let inst: Instance = "3 2 1\n010\n1?1".parse().unwrap();
        assert_eq!((inst.d(), inst.k(), inst.r()), (3, 2, 1));
        assert_eq!(inst.rows()[0].to_string(), "010");
        assert_eq!(inst.rows()[1].get(1), Entry::Unknown);
    }

    #[test]
    fn accepts_empty_zero_dimensional_instance() {
        let inst: Instance = "0 0 0\n".parse().unwrap();
        assert_eq!(inst.d(), 0);
        assert!(inst.is_empty());
    }

    #[test]
    fn skips_comments_and_blank_lines() {
        let inst: Instance = "# header next\n\n2 1 0\n# row\n0?\n\n".parse().unwrap();
        assert_eq!(inst.len(), 1);
    }

    #[test]
    fn reports_line_of_short_row() {
        let err = "2 1 0\n01\n0".parse::<Instance>().unwrap_err();
        assert_eq!(err.line, 3);
    }

    #[test]
    fn reports_bad_header_and_characters() {
        assert_eq!("2 1\n01".parse::<Instance>().unwrap_err().line, 1);
        assert_eq!("a 1 1\n".parse::<Instance>().unwrap_err().line, 1);
        assert_eq!("".parse::<Instance>().unwrap_err().line, 1);
        let err = "2 1 0\n01\n0x".parse::<Instance>().unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.message.contains("column 2"));
    }

    #[test]
    fn neighborhood_examples() {
        let m = Instance::from_rows(1, 1, &["00", "01", "11"]);
        assert_eq!(m.hamming_neighborhood(0, 1).unwrap(), vec![0, 1]);
        assert_eq!(m.hamming_neighborhood(0, 2).unwrap(), vec![0, 1, 2]);
        let w = Instance::from_rows(1, 0, &["0?", "11"]);
        assert_eq!(w.hamming_neighborhood(0, 0).unwrap(), vec![0]);
        assert!(w.hamming_neighborhood(2, 0).is_err());
    }

    fn instance() -> impl Strategy<Value = Instance> {
        (1usize..9, 0usize..5, 0usize..5).prop_flat_map(|(d, k, r)| {
            prop::collection::vec(
                prop::collection::vec(
                    prop_oneof![Just(Entry::Zero), Just(Entry::One), Just(Entry::Unknown)],
                    d,
                ),
                0..8,
            )
            .prop_map(move |rows| {
                let rows = rows.iter().map(|e| PartialVector::from_entries(e)).collect();
                Instance::new(d, k, r, rows).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn text_round_trip(inst in instance()) {
            let back: Instance = inst.to_string().parse().unwrap();
            prop_assert_eq!(back, inst);
        }
    }
}
