//! The ordered alphabet `1 < 2 < … < n < 0 < n̄ < … < 1̄` used by rank-`n`
//! orthogonal tableaux, and the weight lattice bookkeeping for fillings.

use crate::error::{Error, Result};
use std::fmt;

/// A letter of the rank-`n` alphabet.
///
/// The raw value is `i` for an unbarred letter, `-i` for a barred letter
/// `ī`, and `0` for the middle letter `0`.  The raw encoding does *not*
/// reflect the alphabet order; use [`Entry::order_key`] for comparisons.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Entry(i32);

impl Entry {
    /// Builds an entry from its raw signed encoding, checking the range.
    pub fn new(raw: i32, n: usize) -> Result<Self> {
        if raw.unsigned_abs() as usize > n {
            return Err(Error::LetterOutOfRange(raw, n));
        }
        Ok(Entry(raw))
    }

    /// The unbarred letter `i` (requires `1 <= i <= n`, unchecked).
    pub fn unbarred(i: usize) -> Self {
        Entry(i as i32)
    }

    /// The barred letter `ī` (requires `1 <= i <= n`, unchecked).
    pub fn barred(i: usize) -> Self {
        Entry(-(i as i32))
    }

    /// The middle letter `0`.
    pub fn zero() -> Self {
        Entry(0)
    }

    /// The raw signed encoding.
    pub fn raw(self) -> i32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn is_barred(self) -> bool {
        self.0 < 0
    }

    pub fn is_unbarred(self) -> bool {
        self.0 > 0
    }

    /// The underlying letter index `i` for `i` or `ī` (0 for the letter 0).
    pub fn letter(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    /// Position in the total order `1 < … < n < 0 < n̄ < … < 1̄`,
    /// numbered from 1 to `2n + 1`.
    pub fn order_key(self, n: usize) -> usize {
        if self.0 > 0 {
            self.0 as usize
        } else if self.0 == 0 {
            n + 1
        } else {
            2 * n + 2 - self.letter()
        }
    }

    /// Swaps `i ↔ ī` and fixes `0`.
    pub fn bar_swap(self) -> Self {
        Entry(-self.0)
    }
}

impl fmt::Debug for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A weight in the ε-coordinates of the rank-`n` weight lattice, stored as
/// doubled integers so that half-integral spin weights stay exact.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Weight {
    doubled: Vec<i64>,
}

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight {
            doubled: vec![0; n],
        }
    }

    /// Builds a weight from doubled ε-coordinates.
    pub fn from_doubled(doubled: Vec<i64>) -> Self {
        Weight { doubled }
    }

    /// The doubled ε-coordinates (coordinate `i` is `2⟨w, ε_{i+1}⟩`).
    pub fn doubled(&self) -> &[i64] {
        &self.doubled
    }

    /// Adds the contribution of a single entry: `+ε_i` for `i`, `-ε_i` for
    /// `ī`, nothing for `0`.
    pub fn add_entry(&mut self, e: Entry) {
        if e.is_unbarred() {
            self.doubled[e.letter() - 1] += 2;
        } else if e.is_barred() {
            self.doubled[e.letter() - 1] -= 2;
        }
    }

    /// Adds half the contribution of an entry (used by spin columns).
    pub fn add_half_entry(&mut self, e: Entry) {
        if e.is_unbarred() {
            self.doubled[e.letter() - 1] += 1;
        } else if e.is_barred() {
            self.doubled[e.letter() - 1] -= 1;
        }
    }

    pub fn add(&mut self, other: &Weight) {
        for (a, b) in self.doubled.iter_mut().zip(&other.doubled) {
            *a += b;
        }
    }

    pub fn negated(&self) -> Weight {
        Weight {
            doubled: self.doubled.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        write!(f, "(")?;
        for &d in &self.doubled {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            if d % 2 == 0 {
                write!(f, "{}", d / 2)?;
            } else {
                write!(f, "{}/2", d)?;
            }
        }
        write!(f, ")")
    }
}

/// Compares two entries in the alphabet order for a given rank.
pub fn entry_cmp(a: Entry, b: Entry, n: usize) -> std::cmp::Ordering {
    a.order_key(n).cmp(&b.order_key(n))
}
