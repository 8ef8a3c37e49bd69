//! Partially known binary vectors.
//!
//! A [`PartialVector`] stores two bit planes: a `known` mask and the values
//! of the known bits. Distances only count coordinates where both sides are
//! known and disagree, so a distance is one `popcount` per 64 coordinates.

use std::fmt;

use crate::error::ModelError;

const WORD: usize = 64;

/// One coordinate of a partial vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Entry {
    Zero,
    One,
    Unknown,
}

impl Entry {
    pub fn from_char(c: char) -> Option<Self> {
        match c {
            '0' => Some(Entry::Zero),
            '1' => Some(Entry::One),
            '?' => Some(Entry::Unknown),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Entry::Zero => '0',
            Entry::One => '1',
            Entry::Unknown => '?',
        }
    }

    pub fn from_bit(bit: bool) -> Self {
        if bit {
            Entry::One
        } else {
            Entry::Zero
        }
    }

    /// The opposite known value. `Unknown` has no opposite.
    pub fn flipped(self) -> Option<Self> {
        match self {
            Entry::Zero => Some(Entry::One),
            Entry::One => Some(Entry::Zero),
            Entry::Unknown => None,
        }
    }
}

/// A vector over `{0, 1, ?}`, bit-packed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialVector {
    len: usize,
    known: Vec<u64>,
    ones: Vec<u64>,
}

impl PartialVector {
    /// All-unknown vector of the given length.
    pub fn unknown(len: usize) -> Self {
        let words = len.div_ceil(WORD);
        Self {
            len,
            known: vec![0; words],
            ones: vec![0; words],
        }
    }

    /// All-zero (fully known) vector of the given length.
    pub fn zeros(len: usize) -> Self {
        let mut v = Self::unknown(len);
        for i in 0..len {
            v.set(i, Entry::Zero);
        }
        v
    }

    pub fn from_entries(entries: &[Entry]) -> Self {
        let mut v = Self::unknown(entries.len());
        for (i, &e) in entries.iter().enumerate() {
            v.set(i, e);
        }
        v
    }

    /// Fully known vector from booleans.
    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::unknown(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, Entry::from_bit(b));
        }
        v
    }

    /// Fully known vector of length `len` that is 1 exactly on `ones` (0-based).
    pub fn with_ones(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in ones {
            v.set(i, Entry::One);
        }
        v
    }

    /// Parses a string over `0`, `1`, `?`. Returns the offending character
    /// position on failure.
    pub fn parse(s: &str) -> Result<Self, usize> {
        let entries = s
            .chars()
            .enumerate()
            .map(|(i, c)| Entry::from_char(c).ok_or(i))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_entries(&entries))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> Entry {
        assert!(i < self.len, "coordinate {i} out of range {}", self.len);
        let (w, b) = (i / WORD, i % WORD);
        if self.known[w] >> b & 1 == 0 {
            Entry::Unknown
        } else if self.ones[w] >> b & 1 == 1 {
            Entry::One
        } else {
            Entry::Zero
        }
    }

    pub fn set(&mut self, i: usize, e: Entry) {
        assert!(i < self.len, "coordinate {i} out of range {}", self.len);
        let (w, mask) = (i / WORD, 1u64 << (i % WORD));
        match e {
            Entry::Unknown => {
                self.known[w] &= !mask;
                self.ones[w] &= !mask;
            }
            Entry::Zero => {
                self.known[w] |= mask;
                self.ones[w] &= !mask;
            }
            Entry::One => {
                self.known[w] |= mask;
                self.ones[w] |= mask;
            }
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = Entry> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn unknown_count(&self) -> usize {
        self.len - self.known.iter().map(|w| w.count_ones() as usize).sum::<usize>()
    }

    /// 0-based coordinates holding `?`, ascending.
    pub fn unknown_positions(&self) -> Vec<usize> {
        (0..self.len)
            .filter(|&i| self.get(i) == Entry::Unknown)
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        self.unknown_count() == 0
    }

    /// Every `?` replaced by 0.
    pub fn complete_with_zeros(&self) -> Self {
        let mut v = self.clone();
        v.known = self.mask_words();
        v
    }

    /// True when `self` is a completion of `partial`: same length, fully known,
    /// and equal to `partial` on every known coordinate of `partial`.
    pub fn completes(&self, partial: &PartialVector) -> bool {
        self.len == partial.len
            && self.is_complete()
            && self
                .ones
                .iter()
                .zip(&partial.ones)
                .zip(&partial.known)
                .all(|((a, b), k)| (a ^ b) & k == 0)
    }

    /// Known-entry distance: the number of coordinates where both vectors are
    /// known and hold opposite values.
    pub fn delta(&self, other: &Self) -> Result<usize, ModelError> {
        self.check_len(other)?;
        Ok(self.delta_unchecked(other))
    }

    /// [`delta`](Self::delta) without the length check.
    pub fn delta_unchecked(&self, other: &Self) -> usize {
        debug_assert_eq!(self.len, other.len);
        self.known
            .iter()
            .zip(&other.known)
            .zip(self.ones.iter().zip(&other.ones))
            .map(|((ka, kb), (oa, ob))| ((oa ^ ob) & ka & kb).count_ones() as usize)
            .sum()
    }

    /// The coordinates (0-based, ascending) counted by [`delta`](Self::delta).
    pub fn big_delta(&self, other: &Self) -> Result<Vec<usize>, ModelError> {
        self.check_len(other)?;
        Ok((0..self.len)
            .filter(|&i| {
                matches!(
                    (self.get(i), other.get(i)),
                    (Entry::Zero, Entry::One) | (Entry::One, Entry::Zero)
                )
            })
            .collect())
    }

    /// Largest distance any pair of completions of `self` and `other` can reach:
    /// every coordinate except those known and equal on both sides.
    pub fn max_completed_distance(&self, other: &Self) -> usize {
        debug_assert_eq!(self.len, other.len);
        let agree: usize = self
            .known
            .iter()
            .zip(&other.known)
            .zip(self.ones.iter().zip(&other.ones))
            .map(|((ka, kb), (oa, ob))| (!(oa ^ ob) & ka & kb).count_ones() as usize)
            .sum();
        self.len - agree
    }

    fn check_len(&self, other: &Self) -> Result<(), ModelError> {
        if self.len == other.len {
            Ok(())
        } else {
            Err(ModelError::DimensionMismatch {
                left: self.len,
                right: other.len,
            })
        }
    }

    fn mask_words(&self) -> Vec<u64> {
        let mut words = vec![u64::MAX; self.known.len()];
        if let Some(last) = words.last_mut() {
            let tail = self.len % WORD;
            if tail != 0 {
                *last = (1u64 << tail) - 1;
            }
        }
        words
    }
}

impl fmt::Display for PartialVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in self.entries() {
            write!(f, "{}", e.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PartialVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PartialVector({self})")
    }
}

impl std::str::FromStr for PartialVector {
    type Err = usize;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}
