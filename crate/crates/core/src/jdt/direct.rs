//! The direct form of the orthogonal slide along one row: under the
//! hypothesis that the star travels a single row (two stars of the double
//! in row `s`, a height-`s` column present, and the row-`s+1`/row-`s`
//! domination), every move is horizontal and can be written on the
//! orthogonal columns themselves:
//!
//! * unbarred letter `a` on the right: the left column `g(B,O,C)` becomes
//!   `g(B∪{a},O,C)` and the right column loses `a`;
//! * barred letter on the right: the positionally matched coadmissible
//!   letter `c` moves, `f(A,O,D) ↦ f(A,O,D∪{c})` on the left and
//!   `g(B',O',C') ↦ g(B',O',C'∖{c})` on the right;
//! * letter `0` on the right: one zero crosses over;
//! * a (stripped) spin column in front swaps the entering letter into its
//!   letter sets directly.

use crate::alphabet::Entry;
use crate::columns::{complete_column, from_coadmissible, parse_entries};
use crate::error::{Error, Result};
use crate::skew::{full_spin_sets, Cell, SkewTableau};

/// One direct step of the star.  Returns the new tableau, plus the
/// vacated exterior box when the star exits.
pub fn ojdt_direct_step(t: &SkewTableau) -> Result<(SkewTableau, Option<(usize, usize)>)> {
    let n = t.n;
    let (r, c) = t
        .star()
        .ok_or_else(|| Error::Slide("no star to slide".into()))?;
    let right = t.cell_at(r, c + 1).and_then(|cell| cell.entry());
    let below = t.cell_at(r + 1, c).and_then(|cell| cell.entry());
    let mut out = t.clone();
    let Some(e) = right else {
        if below.is_some() {
            return Err(Error::Slide(
                "direct step requires a horizontal move".into(),
            ));
        }
        // exit: drop the star, which is the bottom cell of its column
        let col = &mut out.cols[c];
        if r != col.bottom() || !matches!(col.cells.last(), Some(Cell::Star)) {
            return Err(Error::Slide("star exits mid-column".into()));
        }
        col.cells.pop();
        if col.cells.is_empty() {
            col.offset = 0;
        }
        return Ok((out, Some((r, c))));
    };

    let left_entries = out.cols[c].entries();
    let star_idx = r - out.cols[c].offset - 1;
    if out.cols[c].cells.get(star_idx) != Some(&Cell::Star) {
        return Err(Error::Internal("star misplaced in its column".into()));
    }

    if out.cols[c].spin {
        // spin column in front, trivial through the starred row: an
        // unbarred entering letter e swaps with the hidden letter s = r;
        // an entering zero is consumed while s crosses to the barred side
        if e.is_barred() {
            return Err(Error::Slide(
                "a barred letter may not enter a spin column".into(),
            ));
        }
        let hidden = out.cols[c].offset + 1;
        let (a, d) = full_spin_sets(n, hidden, &left_entries)?;
        let el = e.letter();
        let (na, nd) = if e.is_zero() {
            if !a.contains(hidden) {
                return Err(Error::Slide(format!(
                    "letter {} cannot leave the spin column",
                    hidden
                )));
            }
            (a.remove(hidden), d.insert(hidden))
        } else if el == hidden {
            (a, d)
        } else {
            if !d.contains(el) || a.contains(el) {
                return Err(Error::Slide(format!(
                    "letter {} cannot enter the spin column",
                    el
                )));
            }
            (a.remove(hidden).insert(el), d.remove(el).insert(hidden))
        };
        let spin = crate::columns::SpinColumn::new(n, na, nd)?;
        let display = spin.entries();
        // the new spin column is stripped one box less
        let keep: Vec<Cell> = display
            .into_iter()
            .filter(|x| !(x.is_unbarred() && x.letter() < hidden))
            .map(Cell::Entry)
            .collect();
        if keep.len() != out.cols[c].cells.len() {
            return Err(Error::Internal("spin step changes the box count".into()));
        }
        out.cols[c].cells = keep;
    } else {
        let (pa, po, pd) = parse_entries(n, &left_entries)?;
        let left = complete_column(n, pa, po, pd)?;
        let new_left = if e.is_unbarred() {
            from_coadmissible(n, left.b().insert(e.letter()), po, left.c())?
        } else if e.is_zero() {
            complete_column(n, pa, po + 1, pd)?
        } else {
            let cc = matched_letter(t, r, c + 1, e)?;
            complete_column(n, pa, po, pd.insert(cc))?
        };
        let entries = new_left.entries();
        if entries.len() != out.cols[c].cells.len() {
            return Err(Error::Internal("direct step changes the box count".into()));
        }
        out.cols[c].cells = entries.into_iter().map(Cell::Entry).collect();
    }

    // right column: remove the crossing letter and leave the star at row r
    let right_entries = out.cols[c + 1].entries();
    let (ra, ro, rd) = parse_entries(n, &right_entries)?;
    let new_right = if e.is_unbarred() {
        complete_column(n, ra.remove(e.letter()), ro, rd)?
    } else if e.is_zero() {
        complete_column(n, ra, ro - 1, rd)?
    } else {
        let rcol = complete_column(n, ra, ro, rd)?;
        let cc = matched_letter(t, r, c + 1, e)?;
        from_coadmissible(n, rcol.b(), ro, rcol.c().remove(cc))?
    };
    let star_col = &mut out.cols[c + 1];
    let mut it = new_right.entries().into_iter();
    let mut cells = Vec::with_capacity(star_col.cells.len());
    for idx in 0..star_col.cells.len() {
        let row = star_col.offset + idx + 1;
        if row == r {
            cells.push(Cell::Star);
        } else {
            cells
                .push(Cell::Entry(it.next().ok_or_else(|| {
                    Error::Internal("entry layout underflow".into())
                })?));
        }
    }
    if it.next().is_some() {
        return Err(Error::Internal("entry layout overflow".into()));
    }
    star_col.cells = cells;
    Ok((out, None))
}

/// The coadmissible letter of the column at `col` matched positionally to
/// the displayed barred entry `e` in row `row`.
fn matched_letter(t: &SkewTableau, row: usize, col: usize, e: Entry) -> Result<usize> {
    let n = t.n;
    let entries = t.cols[col].entries();
    if t.cell_at(row, col) != Some(Cell::Entry(e)) {
        return Err(Error::Internal("displaced barred entry".into()));
    }
    let (ra, ro, rd) = parse_entries(n, &entries)?;
    let rcol = complete_column(n, ra, ro, rd)?;
    let d = e.letter();
    let rank = rd.iter().filter(|&x| x > d).count();
    rcol.c()
        .largest(rank + 1)
        .and_then(|s| s.iter().next())
        .ok_or_else(|| Error::Internal("barred position match failed".into()))
}

/// Iterates direct steps until the star exits; returns the slid tableau
/// and the vacated box.
pub fn ojdt_direct(t: &SkewTableau) -> Result<(SkewTableau, (usize, usize))> {
    let mut cur = t.clone();
    loop {
        let (next, exit) = ojdt_direct_step(&cur)?;
        cur = next;
        if let Some(exit) = exit {
            return Ok((cur, exit));
        }
    }
}
