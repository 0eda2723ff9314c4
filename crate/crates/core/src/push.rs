//! The push map and its inverse.
//!
//! `push` repeatedly removes one column's worth of boxes from a
//! semistandard tableau: while some level `s` fails the quasistandard
//! test, the largest such `s` is chosen, and `s` sliding passes peel the
//! trivial top of the first column and carry the hole out of the diagram.
//! The result is quasistandard of a strictly smaller shape.
//!
//! `unpush` rebuilds the unique semistandard preimage of a given shape:
//! working in the rotated picture, holes are inserted at the inner
//! corners of the missing region (lowest row first, then leftmost) and
//! slid through; the boxes they vacate become the trivial tops of the
//! final columns.

use crate::alphabet::Entry;
use crate::columns::SpinColumn;
use crate::error::{Error, Result};
use crate::jdt::{ojdt_slide_horizontal, SlideTrace};
use crate::shape::Shape;
use crate::skew::{full_spin_sets, Cell, SkewColumn, SkewTableau};
use crate::tableau::Tableau;

/// One sliding pass of a column removal: the stripped skew tableau with
/// the hole in place, the recorded slide, and the vacated box.
#[derive(Clone, Debug)]
pub struct PassTrace {
    /// How many trivial cells were stripped before this pass.
    pub level: usize,
    /// The skew tableau right before the slide (star at the top of the
    /// first column).
    pub start: SkewTableau,
    /// The full slide record.
    pub slide: SlideTrace,
    /// The vacated exterior box (1-based row, 0-based column).
    pub exit: (usize, usize),
}

/// The removal of one column of height `s`: `s` sliding passes.
#[derive(Clone, Debug)]
pub struct RemovalTrace {
    /// Height of the removed column.
    pub height: usize,
    /// Whether the removed column was the trivial spin column.
    pub spin: bool,
    pub passes: Vec<PassTrace>,
}

/// The full record of a push: one removal per non-quasistandard level,
/// largest level first at each stage.
#[derive(Clone, Debug, Default)]
pub struct PushTrace {
    pub removals: Vec<RemovalTrace>,
}

fn trivial_cells(k: usize, n: usize) -> Result<Vec<Cell>> {
    (1..=k)
        .map(|i| Entry::new(i as i32, n).map(Cell::Entry))
        .collect()
}

/// Removes one column of height `s` from a tableau whose level `s` fails
/// the quasistandard test.
fn remove_column(t: &Tableau, s: usize) -> Result<(Tableau, RemovalTrace)> {
    let n = t.rank();
    let mut skew = SkewTableau::from_tableau(t);
    let mut passes = Vec::with_capacity(s);
    let mut spin_removed = false;
    for k in (1..=s).rev() {
        // strip the trivial top of the first column
        let col0 = skew
            .cols
            .first_mut()
            .ok_or_else(|| Error::Internal("removal from an empty tableau".into()))?;
        if col0.offset != 0 || col0.cells.len() < k {
            return Err(Error::Internal(format!(
                "first column too short to strip {} cells",
                k
            )));
        }
        let trivial = trivial_cells(k, n)?;
        if col0.cells[..k] != trivial[..] {
            return Err(Error::Slide(format!(
                "first column does not start with 1..{}",
                k
            )));
        }
        col0.cells.drain(..k);
        col0.offset = k - 1;
        col0.cells.insert(0, Cell::Star);
        if col0.spin && col0.cells.len() == 1 {
            // the trivial spin column is fully consumed
            col0.spin = false;
            spin_removed = true;
        }

        let start = skew.clone();
        let (slid, slide) = ojdt_slide_horizontal(&skew)?;
        let exit = slide.exit;
        skew = slid;

        // restore the stripped trivial top of the first column
        if let Some(col0) = skew.cols.first_mut() {
            if col0.spin {
                let (a, d) = full_spin_sets(n, col0.offset, &col0.entries())?;
                let sp = SpinColumn::new(n, a, d)?;
                col0.cells = sp.entries().into_iter().map(Cell::Entry).collect();
                col0.offset = 0;
            } else if col0.cells.is_empty() {
                // the hole consumed the whole column; what is left is the
                // stripped trivial top
                col0.cells = trivial_cells(k - 1, n)?;
                col0.offset = 0;
            } else {
                if col0.offset + 1 != k {
                    return Err(Error::Internal(format!(
                        "first column hangs at offset {} after a level-{} pass",
                        col0.offset, k
                    )));
                }
                let mut cells = trivial_cells(k - 1, n)?;
                cells.extend(col0.cells.iter().copied());
                col0.cells = cells;
                col0.offset = 0;
            }
        }
        skew.trim();
        passes.push(PassTrace {
            level: k,
            start,
            slide,
            exit,
        });
    }
    let out = skew.to_tableau()?;
    Ok((
        out,
        RemovalTrace {
            height: s,
            spin: spin_removed,
            passes,
        },
    ))
}

/// Slides a semistandard tableau down to its quasistandard form,
/// recording every pass.  The result's shape is obtained from the input
/// shape by the removed-column chain.
pub fn push(t: &Tableau) -> Result<(Tableau, PushTrace)> {
    if !t.is_semistandard() {
        return Err(Error::InvalidTableau(
            "push needs a semistandard tableau".into(),
        ));
    }
    let mut cur = t.clone();
    let mut trace = PushTrace::default();
    loop {
        let levels = cur.nqs_levels();
        let Some(&s) = levels.iter().max() else {
            break;
        };
        let before = cur.shape();
        let (next, removal) = remove_column(&cur, s)?;
        let expect = before.remove_height(s, removal.spin)?;
        if next.shape() != expect {
            return Err(Error::Internal(format!(
                "level-{} removal produced shape {} instead of {}",
                s,
                next.shape(),
                expect
            )));
        }
        trace.removals.push(removal);
        cur = next;
    }
    Ok((cur, trace))
}

/// Rebuilds the semistandard tableau of shape `lambda` that pushes to the
/// quasistandard tableau `u`.
pub fn unpush(u: &Tableau, lambda: &Shape) -> Result<Tableau> {
    let n = lambda.rank();
    if u.rank() != n {
        return Err(Error::InvalidShape("rank mismatch".into()));
    }
    if !u.shape().leq(lambda) {
        return Err(Error::ShapeNotDominated(format!(
            "{} does not fit inside {}",
            u.shape(),
            lambda
        )));
    }
    let slots = lambda.column_slots();
    let r = slots.len();
    let height = slots.first().map(|s| s.height).unwrap_or(0);
    // rotated picture: region column j is the mirror of shape column
    // r-1-j, filling rows (height - rh[j], height]
    let rh: Vec<usize> = (0..r).map(|j| slots[r - 1 - j].height).collect();

    // embed the rotated u as the last columns, bottom-aligned
    let mut skew = SkewTableau::from_tableau(u);
    let m = skew.cols.len();
    let g1 = skew.bounding_height();
    let mut rotated = skew.sigma();
    for c in rotated.cols.iter_mut() {
        c.offset += height - g1;
    }
    let mut cols: Vec<SkewColumn> = (0..r - m)
        .map(|_| SkewColumn {
            offset: 0,
            cells: Vec::new(),
            spin: false,
            rotated: false,
        })
        .collect();
    cols.extend(rotated.cols);
    skew = SkewTableau { n, cols };

    // the chain of column removals is determined by the two shapes: one
    // removal per height-s column of the difference, undone here from the
    // smallest height up (the reverse of the removal order)
    let mu = u.shape();
    let mut schedule: Vec<usize> = Vec::new();
    for s in 1..n {
        for _ in 0..lambda.coeff(s) - mu.coeff(s) {
            schedule.push(s);
        }
    }
    let diff_n = lambda.coeff(n) - mu.coeff(n);
    let spin_removed = lambda.has_spin() != mu.has_spin();
    if spin_removed && diff_n == 0 {
        return Err(Error::Internal(
            "spin parity disagrees with the shapes".into(),
        ));
    }
    let full_n = (diff_n - u32::from(spin_removed)) / 2 + u32::from(spin_removed);
    for _ in 0..full_n {
        schedule.push(n);
    }
    let missing = lambda.boxes() - mu.boxes();
    if schedule.iter().sum::<usize>() != missing {
        return Err(Error::Internal(
            "removal schedule does not cover the missing region".into(),
        ));
    }

    let mut pending: Vec<(usize, usize)> = Vec::new();
    for &s in &schedule {
        for level in 1..=s {
            // empty boxes of the region; cells vacated earlier in this
            // removal count as occupied (they are the stripped trivial
            // top, refilled once the whole removal is undone)
            let empty = |row: usize, col: usize| -> bool {
                col < r
                    && row > height - rh[col]
                    && row <= height
                    && skew.cell_at(row, col).is_none()
                    && !pending.contains(&(row, col))
            };
            // candidate corners: empty boxes with nothing empty to the
            // right or below, lowest row first, then leftmost
            let mut corners = Vec::new();
            for row in (1..=height).rev() {
                for col in 0..r {
                    if empty(row, col) && !empty(row, col + 1) && !empty(row + 1, col) {
                        corners.push((row, col));
                    }
                }
            }
            // the box this pass vacates sits directly above the previous
            // one (for the first pass: on the bottom row); since slides
            // are invertible, exactly one corner reaches it
            let want = pending.last().map(|&(t, j)| (t - 1, j));
            let mut advanced = None;
            for &(row, col) in &corners {
                let mut trial = skew.clone();
                let sc = &mut trial.cols[col];
                if sc.cells.is_empty() {
                    sc.offset = row - 1;
                    sc.cells.push(Cell::Star);
                } else {
                    if sc.offset != row {
                        continue;
                    }
                    sc.offset -= 1;
                    sc.cells.insert(0, Cell::Star);
                }
                let Ok((slid, trace)) = ojdt_slide_horizontal(&trial) else {
                    continue;
                };
                let hit = match want {
                    Some(w) => trace.exit == w,
                    None => trace.exit.0 == height,
                };
                if hit {
                    advanced = Some((slid, trace.exit));
                    break;
                }
            }
            let Some((slid, exit)) = advanced else {
                return Err(Error::Internal(format!(
                    "no insertion corner vacates the level-{} box",
                    level
                )));
            };
            skew = slid;
            pending.push(exit);
        }

        // the removal is fully undone: the vacated boxes are the trivial
        // top of its first column, which later slides must see refilled
        for &(t, j) in pending.iter().rev() {
            let value = Cell::Entry(Entry::new(-((height + 1 - t) as i32), n)?);
            let sc = &mut skew.cols[j];
            if sc.cells.is_empty() {
                sc.offset = t - 1;
                sc.cells.push(value);
            } else if sc.offset + sc.cells.len() + 1 == t {
                sc.cells.push(value);
            } else {
                return Err(Error::Internal(format!(
                    "slide exit ({}, {}) is not adjacent to its column",
                    t, j
                )));
            }
        }
        pending.clear();
    }

    // rotate back inside the full rectangle
    let mut back = skew.sigma_within(height);
    if back.cols.len() != r {
        return Err(Error::Internal("column count changed while sliding".into()));
    }
    for (c, bc) in back.cols.iter_mut().enumerate() {
        if bc.offset != 0 || bc.cells.len() != slots[c].height {
            return Err(Error::Internal(format!(
                "column {} is incomplete after sliding",
                c
            )));
        }
        bc.spin = c == 0 && lambda.has_spin();
        bc.rotated = false;
    }
    let out = back.to_tableau()?;
    if out.shape() != *lambda {
        return Err(Error::Internal(format!(
            "rebuilt shape {} instead of {}",
            out.shape(),
            lambda
        )));
    }
    Ok(out)
}
