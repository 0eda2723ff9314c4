//! The ordinary jeu de taquin slide on skew fillings over a totally
//! ordered alphabet (entries are plain numbers; both elementary moves are
//! swaps).  The hole moves right when the box below is missing or its
//! entry exceeds the right one, down when the right box is missing or the
//! below entry is at most the right one, and exits when both are missing.

use crate::error::{Error, Result};

/// A column of an ordinary skew filling; `None` marks the hole.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SlColumn {
    pub offset: usize,
    pub cells: Vec<Option<u32>>,
}

impl SlColumn {
    fn cell_at(&self, row: usize) -> Option<Option<u32>> {
        if row > self.offset && row <= self.offset + self.cells.len() {
            Some(self.cells[row - self.offset - 1])
        } else {
            None
        }
    }
}

/// An ordinary skew filling.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SlTableau {
    pub cols: Vec<SlColumn>,
}

impl SlTableau {
    fn hole(&self) -> Option<(usize, usize)> {
        for (j, c) in self.cols.iter().enumerate() {
            for (i, cell) in c.cells.iter().enumerate() {
                if cell.is_none() {
                    return Some((c.offset + i + 1, j));
                }
            }
        }
        None
    }

    fn entry_at(&self, row: usize, col: usize) -> Option<u32> {
        self.cols.get(col).and_then(|c| c.cell_at(row)).flatten()
    }
}

/// Runs the hole of `t` until it exits; returns the vacated exterior box.
pub fn sl_jdt(t: &mut SlTableau) -> Result<(usize, usize)> {
    let (mut r, mut c) = t
        .hole()
        .ok_or_else(|| Error::Slide("no hole to slide".into()))?;
    loop {
        let right = t.entry_at(r, c + 1);
        let below = t.entry_at(r + 1, c);
        match (right, below) {
            (None, None) => {
                // exit: the hole must be the bottom cell of its column
                let col = &mut t.cols[c];
                if col.cell_at(r) != Some(None) || r != col.offset + col.cells.len() {
                    return Err(Error::Slide("hole exits mid-column".into()));
                }
                col.cells.pop();
                return Ok((r, c));
            }
            (Some(x), below) if below.is_none_or(|b| b > x) => {
                // move right: swap the hole with the entry on its right
                let idx_l = r - t.cols[c].offset - 1;
                let idx_r = r - t.cols[c + 1].offset - 1;
                t.cols[c].cells[idx_l] = Some(x);
                t.cols[c + 1].cells[idx_r] = None;
                c += 1;
            }
            (_, Some(b)) => {
                // move down: swap the hole with the entry below
                let idx = r - t.cols[c].offset - 1;
                t.cols[c].cells[idx] = Some(b);
                t.cols[c].cells[idx + 1] = None;
                r += 1;
            }
            _ => unreachable!(),
        }
    }
}
