//! The orthogonal slide: double the skew tableau (the star doubles into a
//! pair of stars), run the two-letter slide for the right star and then
//! the left one, and read the result back as the double of an orthogonal
//! skew tableau.  The inverse slide is the conjugate by the 180° rotation.

use crate::alphabet::Entry;
use crate::columns::{complete_column, from_coadmissible, parse_entries, TwoLetterColumn};
use crate::error::{Error, Result};
use crate::jdt::engine::{slide_star, TlColumn, TlSkew, TlStep};
use crate::skew::{full_spin_sets, Cell, SkewColumn, SkewTableau};

/// How a doubled column pair folds back into an orthogonal column.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PairKind {
    /// Ordinary admissible column: pair `[A∪K | C̄]  [B | K∪D barred]`.
    Admissible,
    /// Spin column in front: pair `[trivial | spin]`, both possibly
    /// stripped of the same trivial top.
    SpinFirst,
    /// Spin column at the end (rotated picture): pair `[spin | barred
    /// trivial]`.
    SpinLast,
}

/// A full record of one orthogonal slide.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SlideTrace {
    /// Steps of the right star, then of the left star.
    pub steps: [Vec<TlStep>; 2],
    /// The initial double, then a snapshot after every elementary move.
    pub doubles: Vec<TlSkew>,
    /// The vacated exterior box of the orthogonal tableau
    /// (1-based row, 0-based column).
    pub exit: (usize, usize),
}

/// Doubles a skew tableau.  A star may only sit as the top cell of its
/// column; it doubles into a star in both columns of the pair.
pub fn double_skew(t: &SkewTableau) -> Result<(TlSkew, Vec<PairKind>)> {
    let n = t.n;
    let mut cols = Vec::with_capacity(2 * t.cols.len());
    let mut kinds = Vec::with_capacity(t.cols.len());
    let last = t.cols.len().wrapping_sub(1);
    for (j, sc) in t.cols.iter().enumerate() {
        let starred = match sc.cells.first() {
            Some(Cell::Star) => true,
            _ => {
                if sc.cells.iter().any(|c| matches!(c, Cell::Star)) {
                    return Err(Error::Slide(
                        "a star may only be doubled at the top of its column".into(),
                    ));
                }
                false
            }
        };
        let entries = sc.entries();
        let (left, right, kind) = if sc.spin {
            let hidden = sc.offset + usize::from(starred);
            if !sc.rotated {
                if j != 0 {
                    return Err(Error::Slide(
                        "an unrotated spin column may only sit first".into(),
                    ));
                }
                let (a, d) = full_spin_sets(n, hidden, &entries)?;
                let spin = TwoLetterColumn::from_sets(n, a, d)?;
                let trivial: Vec<Entry> = (hidden + 1..=n).map(Entry::unbarred).collect();
                let spin_part: Vec<Entry> = spin
                    .entries()
                    .into_iter()
                    .filter(|e| !(e.is_unbarred() && e.letter() <= hidden))
                    .collect();
                if spin_part != entries {
                    return Err(Error::Internal(
                        "stripped spin column is not laid out canonically".into(),
                    ));
                }
                (trivial, spin_part, PairKind::SpinFirst)
            } else {
                if j != last {
                    return Err(Error::Slide(
                        "a rotated spin column may only sit last".into(),
                    ));
                }
                // rotated spin column: the hidden part is the barred
                // trivial bottom; the pair is [content | barred interval]
                let hidden = n - entries.len() - usize::from(starred);
                let barred: Vec<Entry> = (hidden + 1..=n).rev().map(Entry::barred).collect();
                (entries.clone(), barred, PairKind::SpinLast)
            }
        } else {
            let (a, o, d) = parse_entries(n, &entries)?;
            let col = complete_column(n, a, o, d)?;
            let (l, r) = col.double();
            (l.entries(), r.entries(), PairKind::Admissible)
        };
        for half in [left, right] {
            let mut cells: Vec<Cell> = Vec::with_capacity(half.len() + 1);
            if starred {
                cells.push(Cell::Star);
            }
            cells.extend(half.into_iter().map(Cell::Entry));
            cols.push(TlColumn {
                offset: sc.offset,
                cells,
            });
        }
        kinds.push(kind);
    }
    Ok((TlSkew { n, cols }, kinds))
}

/// Folds a star-free doubled tableau back into an orthogonal skew tableau.
pub fn undouble_skew(t: &TlSkew, kinds: &[PairKind]) -> Result<SkewTableau> {
    let n = t.n;
    if t.cols.len() != 2 * kinds.len() {
        return Err(Error::Internal("pair bookkeeping out of sync".into()));
    }
    let mut cols = Vec::with_capacity(kinds.len());
    for (j, kind) in kinds.iter().enumerate() {
        let l = &t.cols[2 * j];
        let r = &t.cols[2 * j + 1];
        if l.offset != r.offset && !(l.cells.is_empty() && r.cells.is_empty()) {
            return Err(Error::Internal(format!(
                "pair {} ends at distinct offsets {} and {}",
                j, l.offset, r.offset
            )));
        }
        if l.cells.len() != r.cells.len() {
            return Err(Error::Internal(format!(
                "pair {} ends with distinct heights",
                j
            )));
        }
        if l.cells.is_empty() {
            cols.push(SkewColumn {
                offset: 0,
                cells: vec![],
                spin: false,
                rotated: false,
            });
            continue;
        }
        let le = l.entries();
        let re = r.entries();
        if le.len() != l.cells.len() || re.len() != r.cells.len() {
            return Err(Error::Internal("a star survived the slide".into()));
        }
        let col = match kind {
            PairKind::Admissible => {
                let (el, zl, cl) = parse_entries(n, &le)?;
                let (br, zr, fr) = parse_entries(n, &re)?;
                if zl != 0 || zr != 0 {
                    return Err(Error::Internal("zero letter in a double".into()));
                }
                let o = el
                    .len()
                    .checked_sub(br.len())
                    .ok_or_else(|| Error::Internal("unbalanced double pair".into()))?;
                let col = from_coadmissible(n, br, o, cl)?;
                if col.a().union(col.k()) != el || col.k().union(col.d()) != fr {
                    return Err(Error::Internal(format!(
                        "pair {} is not the double of an admissible column",
                        j
                    )));
                }
                SkewColumn {
                    offset: l.offset,
                    cells: col.entries().into_iter().map(Cell::Entry).collect(),
                    spin: false,
                    rotated: false,
                }
            }
            PairKind::SpinFirst => {
                let trivial: Vec<Entry> = (l.offset + 1..=n).map(Entry::unbarred).collect();
                if le != trivial {
                    return Err(Error::Internal(
                        "spin pair lost its trivial left column".into(),
                    ));
                }
                full_spin_sets(n, l.offset, &re)?;
                SkewColumn {
                    offset: l.offset,
                    cells: r.cells.clone(),
                    spin: true,
                    rotated: false,
                }
            }
            PairKind::SpinLast => {
                let hidden = n - re.len();
                let barred: Vec<Entry> = (hidden + 1..=n).rev().map(Entry::barred).collect();
                if re != barred {
                    return Err(Error::Internal(
                        "rotated spin pair lost its barred trivial column".into(),
                    ));
                }
                SkewColumn {
                    offset: l.offset,
                    cells: l.cells.clone(),
                    spin: true,
                    rotated: true,
                }
            }
        };
        cols.push(col);
    }
    Ok(SkewTableau { n, cols })
}

/// One orthogonal slide: the single star of `t` (at an interior corner)
/// travels through the doubled tableau and out; returns the slid tableau
/// together with the full trace.  The free form compares the neighbours
/// of the star to pick a direction.
pub fn ojdt_slide(t: &SkewTableau) -> Result<(SkewTableau, SlideTrace)> {
    ojdt_slide_with(t, false)
}

/// The slide in the horizontal regime: both stars of the double travel
/// along a single row, so every move goes right.  This is the form used
/// while pushing a tableau down to its quasistandard image.
pub fn ojdt_slide_horizontal(t: &SkewTableau) -> Result<(SkewTableau, SlideTrace)> {
    ojdt_slide_with(t, true)
}

fn ojdt_slide_with(t: &SkewTableau, horizontal: bool) -> Result<(SkewTableau, SlideTrace)> {
    let (row, col) = t
        .star()
        .ok_or_else(|| Error::Slide("no star to slide".into()))?;
    let (mut tl, kinds) = double_skew(t)?;
    let mut doubles = vec![tl.clone()];
    let mut steps_right = Vec::new();
    let mut steps_left = Vec::new();
    let exit_r = slide_star(
        &mut tl,
        (row, 2 * col + 1),
        horizontal,
        &mut steps_right,
        Some(&mut doubles),
    )?;
    let exit_l = slide_star(
        &mut tl,
        (row, 2 * col),
        horizontal,
        &mut steps_left,
        Some(&mut doubles),
    )?;
    if exit_r.0 != exit_l.0 || exit_l.1 / 2 != exit_r.1 / 2 || exit_l.1 + 1 != exit_r.1 {
        return Err(Error::Internal(format!(
            "slide exits {:?} and {:?} do not pair up",
            exit_l, exit_r
        )));
    }
    let skew = undouble_skew(&tl, &kinds)?;
    Ok((
        skew,
        SlideTrace {
            steps: [steps_right, steps_left],
            doubles,
            exit: (exit_r.0, exit_l.1 / 2),
        },
    ))
}

/// The inverse slide: conjugate of [`ojdt_slide`] by the 180° rotation.
/// The star must sit at an exterior corner in the rotated reading.
pub fn ojdt_inverse_slide(t: &SkewTableau) -> Result<(SkewTableau, SlideTrace)> {
    let rotated = t.sigma();
    let (res, trace) = ojdt_slide(&rotated)?;
    Ok((res.sigma(), trace))
}
