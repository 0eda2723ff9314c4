//! Skew orthogonal tableaux: columns hanging at a vertical offset inside
//! a bounding region, with an optional star marking the sliding hole.
//!
//! The 180° rotation `sigma` reverses the column order and each column,
//! swaps `i ↔ ī`, and keeps stars; it exchanges the two ways of reading a
//! configuration (top-left against bottom-right justified) and conjugates
//! the forward slide into the inverse slide.

use crate::alphabet::{Entry, Weight};
use crate::columns::{complete_column, parse_entries, SpinColumn};
use crate::error::{Error, Result};
use crate::subsets::LetterSet;
use crate::tableau::{Column, Tableau};

/// One box content of a skew column.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Cell {
    Star,
    Entry(Entry),
}

impl Cell {
    pub fn entry(self) -> Option<Entry> {
        match self {
            Cell::Star => None,
            Cell::Entry(e) => Some(e),
        }
    }
}

/// A column of a skew tableau: cells occupy rows
/// `offset+1, …, offset+cells.len()`.
///
/// For a spin column the cells hold only the non-hidden part: the hidden
/// top `1, …, offset` is trivial by convention, so the full spin letter
/// sets are recovered by prepending it.  A spin column normally sits
/// first; after a rotation it sits last, reads bottom-up with bars
/// swapped, and its hidden trivial part is the barred bottom — the
/// `rotated` flag records which of the two readings applies.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewColumn {
    pub offset: usize,
    pub cells: Vec<Cell>,
    pub spin: bool,
    /// Only meaningful on spin columns; flipped by [`SkewTableau::sigma`].
    pub rotated: bool,
}

impl SkewColumn {
    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Bottom row of the lowest cell (0 when empty).
    pub fn bottom(&self) -> usize {
        self.offset + self.cells.len()
    }

    /// Entries of the column in cell order, skipping a star.
    pub fn entries(&self) -> Vec<Entry> {
        self.cells.iter().filter_map(|c| c.entry()).collect()
    }

    /// Cell at 1-based `row`, if the box exists.
    pub fn cell_at(&self, row: usize) -> Option<Cell> {
        if row > self.offset && row <= self.bottom() {
            Some(self.cells[row - self.offset - 1])
        } else {
            None
        }
    }
}

/// A skew orthogonal tableau (also used mid-slide, when one column holds
/// a star cell).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewTableau {
    pub n: usize,
    pub cols: Vec<SkewColumn>,
}

impl SkewTableau {
    pub fn rank(&self) -> usize {
        self.n
    }

    /// Builds the zero-offset skew form of a straight tableau.
    pub fn from_tableau(t: &Tableau) -> SkewTableau {
        let cols = t
            .columns()
            .iter()
            .map(|c| SkewColumn {
                offset: 0,
                cells: c.entries().into_iter().map(Cell::Entry).collect(),
                spin: c.is_spin(),
                rotated: false,
            })
            .collect();
        SkewTableau { n: t.rank(), cols }
    }

    /// Reads a zero-offset, star-free skew tableau back as a straight
    /// tableau, reconstructing each column from its entries.
    pub fn to_tableau(&self) -> Result<Tableau> {
        let mut cols = Vec::new();
        for (idx, sc) in self.cols.iter().enumerate() {
            if sc.is_empty() {
                continue;
            }
            if sc.offset != 0 {
                return Err(Error::InvalidSkew(format!(
                    "column {} still hangs at offset {}",
                    idx, sc.offset
                )));
            }
            if sc.cells.iter().any(|c| matches!(c, Cell::Star)) {
                return Err(Error::InvalidSkew("a star is still present".into()));
            }
            if sc.rotated {
                return Err(Error::InvalidSkew(format!(
                    "column {} is still in the rotated orientation",
                    idx
                )));
            }
            cols.push(reconstruct_column(self.n, sc)?);
        }
        Tableau::new(self.n, cols)
    }

    /// Height of the bounding rectangle.
    pub fn bounding_height(&self) -> usize {
        self.cols.iter().map(|c| c.bottom()).max().unwrap_or(0)
    }

    /// Cell at 1-based `row` of 0-based column `col`.
    pub fn cell_at(&self, row: usize, col: usize) -> Option<Cell> {
        self.cols.get(col).and_then(|c| c.cell_at(row))
    }

    /// Position `(row, col)` of the star, if present.
    pub fn star(&self) -> Option<(usize, usize)> {
        for (j, c) in self.cols.iter().enumerate() {
            for (i, cell) in c.cells.iter().enumerate() {
                if matches!(cell, Cell::Star) {
                    return Some((c.offset + i + 1, j));
                }
            }
        }
        None
    }

    /// Sum of the entry weights (spin cells count one half).
    pub fn weight(&self) -> Weight {
        let mut w = Weight::zero(self.n);
        for c in &self.cols {
            for cell in &c.cells {
                if let Cell::Entry(e) = cell {
                    if c.spin {
                        w.add_half_entry(*e);
                    } else {
                        w.add_entry(*e);
                    }
                }
            }
        }
        w
    }

    /// The 180° rotation in the bounding rectangle: reverses the column
    /// order and each column, bar-swaps entries and keeps stars.
    pub fn sigma(&self) -> SkewTableau {
        self.sigma_within(self.bounding_height())
    }

    /// The 180° rotation in a rectangle of the given height (which must
    /// contain the tableau).  Useful when sliding has shrunk the natural
    /// bounding box but the rotation must stay in the original frame.
    pub fn sigma_within(&self, height: usize) -> SkewTableau {
        debug_assert!(height >= self.bounding_height());
        let cols = self
            .cols
            .iter()
            .rev()
            .map(|c| SkewColumn {
                offset: height - c.bottom(),
                cells: c
                    .cells
                    .iter()
                    .rev()
                    .map(|cell| match cell {
                        Cell::Star => Cell::Star,
                        Cell::Entry(e) => Cell::Entry(e.bar_swap()),
                    })
                    .collect(),
                spin: c.spin,
                rotated: c.spin && !c.rotated,
            })
            .collect();
        SkewTableau { n: self.n, cols }
    }

    /// Drops empty columns at the right edge.
    pub fn trim(&mut self) {
        while matches!(self.cols.last(), Some(c) if c.is_empty()) {
            self.cols.pop();
        }
    }
}

/// Rebuilds a typed column from a completed zero-offset skew column.
fn reconstruct_column(n: usize, sc: &SkewColumn) -> Result<Column> {
    let entries = sc.entries();
    if sc.spin {
        let (a, o, d) = parse_entries(n, &entries)?;
        if o != 0 {
            return Err(Error::InvalidSkew("spin column holds a zero entry".into()));
        }
        Ok(Column::Spin(SpinColumn::new(n, a, d)?))
    } else {
        let (a, o, d) = parse_entries(n, &entries)?;
        Ok(Column::Admissible(complete_column(n, a, o, d)?))
    }
}

/// Reconstructs the full spin letter sets of a (possibly stripped) spin
/// skew column, prepending the hidden trivial top `1, …, hidden`.
pub fn full_spin_sets(
    n: usize,
    hidden: usize,
    entries: &[Entry],
) -> Result<(LetterSet, LetterSet)> {
    let (mut a, o, d) = parse_entries(n, entries)?;
    if o != 0 {
        return Err(Error::InvalidSkew("spin column holds a zero entry".into()));
    }
    for t in 1..=hidden {
        if a.contains(t) || d.contains(t) {
            return Err(Error::InvalidSkew(format!(
                "hidden trivial letter {} reappears in the spin column",
                t
            )));
        }
        a = a.insert(t);
    }
    if a.len() + d.len() != n || !a.is_disjoint(d) {
        return Err(Error::InvalidSkew(
            "stripped spin column does not complete to a spin column".into(),
        ));
    }
    Ok((a, d))
}
