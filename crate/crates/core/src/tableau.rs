//! Straight (non-skew) orthogonal tableaux: weakly decreasing column
//! heights, at most one spin column sitting first, and semistandardness
//! read off from the doubled tableau.

use crate::alphabet::{Entry, Weight};
use crate::columns::{AdmissibleColumn, SpinColumn, TwoLetterColumn};
use crate::error::{Error, Result};
use crate::shape::Shape;

/// One column of a tableau.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Column {
    Spin(SpinColumn),
    Admissible(AdmissibleColumn),
}

impl Column {
    pub fn height(&self) -> usize {
        match self {
            Column::Spin(s) => s.height(),
            Column::Admissible(c) => c.height(),
        }
    }

    pub fn entries(&self) -> Vec<Entry> {
        match self {
            Column::Spin(s) => s.entries(),
            Column::Admissible(c) => c.entries(),
        }
    }

    pub fn is_spin(&self) -> bool {
        matches!(self, Column::Spin(_))
    }

    pub fn double(&self) -> (TwoLetterColumn, TwoLetterColumn) {
        match self {
            Column::Spin(s) => s.double(),
            Column::Admissible(c) => c.double(),
        }
    }
}

/// A straight orthogonal tableau.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tableau {
    n: usize,
    cols: Vec<Column>,
}

/// The double of a tableau: a straight tableau of two-letter columns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoLetterTableau {
    n: usize,
    cols: Vec<TwoLetterColumn>,
}

impl TwoLetterTableau {
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn columns(&self) -> &[TwoLetterColumn] {
        &self.cols
    }

    /// Entry at `row` (1-based) of column `col` (0-based), if the box exists.
    pub fn entry_at(&self, row: usize, col: usize) -> Option<Entry> {
        self.cols.get(col).and_then(|c| {
            let e = c.entries();
            e.get(row.checked_sub(1)?).copied()
        })
    }
}

impl Tableau {
    /// Builds a tableau, checking the shape invariants (weakly decreasing
    /// heights, at most one spin column and only in front).  Use
    /// [`Tableau::is_semistandard`] for the filling condition.
    pub fn new(n: usize, cols: Vec<Column>) -> Result<Self> {
        for w in cols.windows(2) {
            if w[0].height() < w[1].height() {
                return Err(Error::InvalidTableau(
                    "column heights must be weakly decreasing".into(),
                ));
            }
        }
        for (idx, c) in cols.iter().enumerate() {
            if c.is_spin() && idx != 0 {
                return Err(Error::InvalidTableau(
                    "a spin column may only appear first".into(),
                ));
            }
        }
        Ok(Tableau { n, cols })
    }

    pub fn empty(n: usize) -> Self {
        Tableau { n, cols: vec![] }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn columns(&self) -> &[Column] {
        &self.cols
    }

    pub fn height(&self) -> usize {
        self.cols.first().map_or(0, |c| c.height())
    }

    /// The shape, read back from the column heights.
    pub fn shape(&self) -> Shape {
        let mut a = vec![0u32; self.n];
        for c in &self.cols {
            let h = c.height();
            if h == self.n {
                a[self.n - 1] += if c.is_spin() { 1 } else { 2 };
            } else {
                a[h - 1] += 1;
            }
        }
        Shape::new(self.n, a).expect("rank matches")
    }

    /// Entry at `row` (1-based) of column `col` (0-based), if the box exists.
    pub fn entry_at(&self, row: usize, col: usize) -> Option<Entry> {
        self.cols.get(col).and_then(|c| {
            let e = c.entries();
            e.get(row.checked_sub(1)?).copied()
        })
    }

    /// The doubled tableau.
    pub fn dble(&self) -> TwoLetterTableau {
        let mut cols = Vec::with_capacity(2 * self.cols.len());
        for c in &self.cols {
            let (l, r) = c.double();
            cols.push(l);
            cols.push(r);
        }
        TwoLetterTableau { n: self.n, cols }
    }

    /// Semistandard: every pair of adjacent columns of the double is
    /// weakly increasing along rows (columns are strictly increasing by
    /// construction).
    pub fn is_semistandard(&self) -> bool {
        let d = self.dble();
        two_letter_rows_weakly_increase(&d)
    }

    /// The weight: each entry `i` contributes `+ε_i`, `ī` contributes
    /// `-ε_i`, `0` nothing; spin column entries contribute one half.
    pub fn weight(&self) -> Weight {
        let mut w = Weight::zero(self.n);
        for c in &self.cols {
            match c {
                Column::Spin(s) => {
                    for e in s.entries() {
                        w.add_half_entry(e);
                    }
                }
                Column::Admissible(col) => {
                    for e in col.entries() {
                        w.add_entry(e);
                    }
                }
            }
        }
        w
    }

    /// The levels `s` at which the tableau fails quasistandardness: the
    /// first column starts with the trivial entries `1, …, s`, some column
    /// has height exactly `s`, and in the double every entry of row `s+1`
    /// strictly dominates the entry one column to the right in row `s`.
    pub fn nqs_levels(&self) -> Vec<usize> {
        let mut out = Vec::new();
        if self.cols.is_empty() {
            return out;
        }
        let first = self.cols[0].entries();
        let d = self.dble();
        's: for s in 1..=self.n {
            if first.len() < s {
                break;
            }
            for (i, &e) in first.iter().take(s).enumerate() {
                if e.raw() != (i + 1) as i32 {
                    continue 's;
                }
            }
            if !self.cols.iter().any(|c| c.height() == s) {
                continue;
            }
            for jcol in 0..d.columns().len() {
                if let (Some(below), Some(right)) =
                    (d.entry_at(s + 1, jcol), d.entry_at(s, jcol + 1))
                {
                    if below.order_key(self.n) <= right.order_key(self.n) {
                        continue 's;
                    }
                }
            }
            out.push(s);
        }
        out
    }

    /// Quasistandard: no level witnesses non-quasistandardness.
    pub fn is_quasistandard(&self) -> bool {
        self.nqs_levels().is_empty()
    }
}

/// Checks that rows of a two-letter straight tableau weakly increase.
pub fn two_letter_rows_weakly_increase(t: &TwoLetterTableau) -> bool {
    let n = t.rank();
    for j in 0..t.columns().len() {
        let left = t.columns()[j].entries();
        let Some(right_col) = t.columns().get(j + 1) else {
            break;
        };
        for (ridx, e) in right_col.entries().iter().enumerate() {
            match left.get(ridx) {
                Some(l) if l.order_key(n) <= e.order_key(n) => {}
                _ => return false,
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::columns::complete_column;
    use crate::subsets::LetterSet;

    fn set(v: &[usize]) -> LetterSet {
        v.iter().copied().collect()
    }

    fn adm(n: usize, a: &[usize], o: usize, d: &[usize]) -> Column {
        Column::Admissible(complete_column(n, set(a), o, set(d)).unwrap())
    }

    /// The running example: columns (1,2,0,2̄), (1,3,1̄), (2,0) at n = 5.
    pub(crate) fn running_example() -> Tableau {
        Tableau::new(
            5,
            vec![
                adm(5, &[1, 2], 1, &[2]),
                adm(5, &[1, 3], 0, &[1]),
                adm(5, &[2], 1, &[]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn running_example_double() {
        let t = running_example();
        let d = t.dble();
        let cols: Vec<Vec<i32>> = d
            .columns()
            .iter()
            .map(|c| c.entries().iter().map(|e| e.raw()).collect())
            .collect();
        assert_eq!(
            cols,
            vec![
                vec![1, 2, 5, -3],
                vec![1, 3, -5, -2],
                vec![1, 3, -2],
                vec![2, 3, -1],
                vec![2, 5],
                vec![2, -5],
            ]
        );
        assert!(t.is_semistandard());
        assert_eq!(t.shape().to_string(), "0,1,1,1,0");
    }

    #[test]
    fn running_example_nqs_levels() {
        let t = running_example();
        assert_eq!(t.nqs_levels(), vec![2]);
        assert!(!t.is_quasistandard());
    }

    #[test]
    fn weight_examples() {
        // Column (2,0) at n = 2 weighs (0,1).
        let t = Tableau::new(2, vec![adm(2, &[2], 1, &[])]).unwrap();
        assert_eq!(t.weight().doubled(), &[0, 2]);
        // Spin column (1,2) at n = 2 weighs (1/2,1/2); (1,2̄) weighs (1/2,-1/2).
        let sp = Tableau::new(
            2,
            vec![Column::Spin(
                SpinColumn::new(2, set(&[1, 2]), set(&[])).unwrap(),
            )],
        )
        .unwrap();
        assert_eq!(sp.weight().doubled(), &[1, 1]);
        let sp = Tableau::new(
            2,
            vec![Column::Spin(
                SpinColumn::new(2, set(&[1]), set(&[2])).unwrap(),
            )],
        )
        .unwrap();
        assert_eq!(sp.weight().doubled(), &[1, -1]);
    }

    #[test]
    fn shape_invariants_enforced() {
        // increasing heights rejected
        assert!(Tableau::new(2, vec![adm(2, &[1], 0, &[]), adm(2, &[1, 2], 0, &[])]).is_err());
        // spin column not in front rejected
        let sp = Column::Spin(SpinColumn::new(2, set(&[1, 2]), set(&[])).unwrap());
        assert!(Tableau::new(2, vec![adm(2, &[1, 2], 0, &[]), sp]).is_err());
    }
}
