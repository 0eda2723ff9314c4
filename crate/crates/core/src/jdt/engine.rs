//! The elementary slide on doubled tableaux: columns over the two-letter
//! alphabet `1 < … < n < n̄ < … < 1̄`.
//!
//! The vertical move is a plain swap.  The horizontal move rewrites both
//! columns through their letter-set presentations: an unbarred letter `a`
//! crossing left turns the left column `g(B,C)` into `g(B∪{a},C)` and
//! removes `a` from the right column's displayed letters, while a barred
//! letter crossing left is matched positionally to the letter `c` of the
//! right column's coadmissible set, turning the left column `f(P,Q)` into
//! `f(P,Q∪{c})` and the right one `g(B',C')` into `g(B',C'∖{c})`.

use crate::alphabet::Entry;
use crate::columns::TwoLetterColumn;
use crate::error::{Error, Result};
use crate::skew::Cell;
use crate::subsets::LetterSet;

/// A column of a doubled skew tableau.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TlColumn {
    pub offset: usize,
    pub cells: Vec<Cell>,
}

impl TlColumn {
    pub fn bottom(&self) -> usize {
        self.offset + self.cells.len()
    }

    pub fn cell_at(&self, row: usize) -> Option<Cell> {
        if row > self.offset && row <= self.bottom() {
            Some(self.cells[row - self.offset - 1])
        } else {
            None
        }
    }

    fn set_cell(&mut self, row: usize, cell: Cell) {
        let idx = row - self.offset - 1;
        self.cells[idx] = cell;
    }

    /// Displayed letter sets (unbarred, barred), ignoring star cells.
    pub fn letter_sets(&self) -> (LetterSet, usize, LetterSet) {
        let mut p = LetterSet::EMPTY;
        let mut q = LetterSet::EMPTY;
        let mut stars = 0;
        for c in &self.cells {
            match c {
                Cell::Star => stars += 1,
                Cell::Entry(e) => {
                    if e.is_unbarred() {
                        p = p.insert(e.letter());
                    } else {
                        q = q.insert(e.letter());
                    }
                }
            }
        }
        (p, stars, q)
    }

    pub fn entries(&self) -> Vec<Entry> {
        self.cells.iter().filter_map(|c| c.entry()).collect()
    }

    /// Replaces the cells by the displayed entries of `col`, keeping the
    /// box range (which must have matching size).
    fn refill(&mut self, col: &TwoLetterColumn) -> Result<()> {
        let entries = col.entries();
        if entries.len() != self.cells.len() {
            return Err(Error::Internal(format!(
                "column rewrite changes the box count ({} vs {})",
                entries.len(),
                self.cells.len()
            )));
        }
        self.cells = entries.into_iter().map(Cell::Entry).collect();
        Ok(())
    }

    /// Replaces the cells by the displayed entries of `col` with a star at
    /// `star_row`; the entries fill the remaining boxes in order.
    fn refill_with_star(&mut self, col: &TwoLetterColumn, star_row: usize) -> Result<()> {
        let entries = col.entries();
        if entries.len() + 1 != self.cells.len() {
            return Err(Error::Internal(format!(
                "column rewrite changes the box count ({}+star vs {})",
                entries.len(),
                self.cells.len()
            )));
        }
        let mut out = Vec::with_capacity(self.cells.len());
        let mut it = entries.into_iter();
        for idx in 0..self.cells.len() {
            let row = self.offset + idx + 1;
            if row == star_row {
                out.push(Cell::Star);
            } else {
                out.push(Cell::Entry(it.next().ok_or_else(|| {
                    Error::Internal("entry layout underflow".into())
                })?));
            }
        }
        self.cells = out;
        Ok(())
    }
}

/// A doubled skew tableau while sliding.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TlSkew {
    pub n: usize,
    pub cols: Vec<TlColumn>,
}

impl TlSkew {
    pub fn entry_at(&self, row: usize, col: usize) -> Option<Entry> {
        self.cols
            .get(col)
            .and_then(|c| c.cell_at(row))
            .and_then(|c| c.entry())
    }

    /// Raw cell contents by column, for golden comparisons: each column as
    /// `(offset, raw entries / None for a star)`.
    pub fn layout(&self) -> Vec<(usize, Vec<Option<i32>>)> {
        self.cols
            .iter()
            .map(|c| {
                (
                    c.offset,
                    c.cells
                        .iter()
                        .map(|cell| cell.entry().map(|e| e.raw()))
                        .collect(),
                )
            })
            .collect()
    }
}

/// One elementary move of a star.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TlMove {
    Right,
    Down,
    Exit,
}

/// A recorded step: the star stood at `(row, col)` and performed `mv`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TlStep {
    pub row: usize,
    pub col: usize,
    pub mv: TlMove,
}

/// Slides the star at `(row, col)` of `t` until it exits.  Records every
/// step, and a snapshot after each move when `snapshots` is given.
/// Returns the vacated exterior box.
pub fn slide_star(
    t: &mut TlSkew,
    start: (usize, usize),
    horizontal: bool,
    steps: &mut Vec<TlStep>,
    mut snapshots: Option<&mut Vec<TlSkew>>,
) -> Result<(usize, usize)> {
    let (mut r, mut c) = start;
    if t.cols.get(c).and_then(|col| col.cell_at(r)) != Some(Cell::Star) {
        return Err(Error::Slide(format!("no star at ({}, {})", r, c + 1)));
    }
    loop {
        let right = t.entry_at(r, c + 1);
        let below = t.entry_at(r + 1, c);
        let mv = match (right, below) {
            (None, None) => TlMove::Exit,
            // in the horizontal regime every move goes right; the
            // comparison only decides the direction in the free regime
            (Some(_), _) if horizontal => TlMove::Right,
            (Some(x), below) if below.is_none_or(|b| b.order_key(t.n) > x.order_key(t.n)) => {
                TlMove::Right
            }
            _ => TlMove::Down,
        };
        steps.push(TlStep { row: r, col: c, mv });
        match mv {
            TlMove::Exit => {
                let col = &mut t.cols[c];
                if r != col.bottom() {
                    return Err(Error::Slide("star exits mid-column".into()));
                }
                col.cells.pop();
                if let Some(snaps) = snapshots.as_deref_mut() {
                    snaps.push(t.clone());
                }
                return Ok((r, c));
            }
            TlMove::Down => {
                let idx = r - t.cols[c].offset - 1;
                t.cols[c].cells.swap(idx, idx + 1);
                r += 1;
            }
            TlMove::Right => {
                let e = right.expect("right entry present");
                horizontal_move(t, r, c, e)?;
                c += 1;
            }
        }
        if let Some(snaps) = snapshots.as_deref_mut() {
            snaps.push(t.clone());
        }
    }
}

/// Performs the horizontal move of the star at `(r, c)` with the entry
/// `e` sitting at `(r, c+1)`.
fn horizontal_move(t: &mut TlSkew, r: usize, c: usize, e: Entry) -> Result<()> {
    let n = t.n;
    let (pl, stars, ql) = t.cols[c].letter_sets();
    if stars != 1 {
        return Err(Error::Internal("star column lost its star".into()));
    }
    if e.is_unbarred() {
        // left column g(B,C) becomes g(B∪{a},C)
        let left = TwoLetterColumn::from_sets(n, pl, ql)?;
        let new_left =
            TwoLetterColumn::from_coadmissible_sets(n, left.b().insert(e.letter()), left.c())?;
        t.cols[c].refill(&new_left)?;
        // the right column just loses the displayed letter
        t.cols[c + 1].set_cell(r, Cell::Star);
    } else {
        // match the displayed barred letter to the coadmissible letter of
        // the right column at the same barred position
        let (pr, _, qr) = t.cols[c + 1].letter_sets();
        let right = TwoLetterColumn::from_sets(n, pr, qr)?;
        let d = e.letter();
        let rank = qr.iter().filter(|&x| x > d).count();
        let cc = right
            .c()
            .largest(rank + 1)
            .and_then(|s| s.iter().next())
            .ok_or_else(|| Error::Internal("barred position match failed".into()))?;
        // left column f(P,Q) becomes f(P, Q∪{c})
        let new_left = TwoLetterColumn::from_sets(n, pl, ql.insert(cc))?;
        t.cols[c].refill(&new_left)?;
        // right column g(B',C') becomes g(B', C'∖{c}) with the star at row r
        let new_right =
            TwoLetterColumn::from_coadmissible_sets(n, right.b(), right.c().remove(cc))?;
        t.cols[c + 1].refill_with_star(&new_right, r)?;
    }
    Ok(())
}
