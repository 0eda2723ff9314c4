//! Columns of rank-`n` orthogonal tableaux.
//!
//! An admissible column is described by a triple `(A, O, D)`: unbarred
//! letters `A`, a number of `0` entries, and barred letters `D` (recorded
//! unbarred).  Completing the column derives the coadmissible description
//! `(B, O, C)` together with the filler set `K` used when the column is
//! doubled into a pair of columns over the barred/unbarred alphabet.
//! Spin columns are the height-`n` columns `(A, D)` with `A ⊔ D = [1, n]`;
//! they double into the trivial column next to themselves.

use crate::alphabet::Entry;
use crate::error::{Error, Result};
use crate::subsets::{left_gamma, right_delta, LetterSet};

/// A completed admissible column: the defining data `(A, O, D)` together
/// with the derived sets `I`, `J`, `B`, `C`, `K`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AdmissibleColumn {
    n: usize,
    a: LetterSet,
    o: usize,
    d: LetterSet,
    i: LetterSet,
    j: LetterSet,
    b: LetterSet,
    c: LetterSet,
    k: LetterSet,
}

/// Builds and completes an admissible column from `(A, O, D)`.
///
/// The column is admissible when `I = A ∩ D` admits a smallest right-side
/// set `J = δ(I)` inside the ambient `X = [1,n] ∖ (A Δ D)`, and
/// `#(A ∪ D ∪ J) + O ≤ n`.  Then `B = (A∖I) ∪ J`, `C = (D∖I) ∪ J`, and
/// `K` is the `O` largest letters outside `A ∪ D ∪ J`.
pub fn complete_column(n: usize, a: LetterSet, o: usize, d: LetterSet) -> Result<AdmissibleColumn> {
    let full = LetterSet::interval(n);
    if !a.is_subset_of(full) || !d.is_subset_of(full) {
        return Err(Error::NotAdmissible(format!(
            "letters {:?}/{:?} out of range for rank {}",
            a, d, n
        )));
    }
    let i = a.intersection(d);
    let ambient = full.difference(a.symmetric_difference(d));
    let j = right_delta(ambient, i).ok_or_else(|| {
        Error::NotAdmissible(format!(
            "no right-side set for I={:?} in X={:?}",
            i, ambient
        ))
    })?;
    let adj = a.union(d).union(j);
    if adj.len() + o > n {
        return Err(Error::NotAdmissible(format!(
            "#(A∪D∪J)={} plus {} zeros exceeds rank {}",
            adj.len(),
            o,
            n
        )));
    }
    let k = full
        .difference(adj)
        .largest(o)
        .ok_or_else(|| Error::Internal("filler set K unavailable".into()))?;
    Ok(AdmissibleColumn {
        n,
        a,
        o,
        d,
        i,
        j,
        b: a.difference(i).union(j),
        c: d.difference(i).union(j),
        k,
    })
}

/// Builds an admissible column from its coadmissible description
/// `(B, O, C)`: `J = B ∩ C`, `I = γ(J)` inside `[1,n] ∖ (B Δ C)`, then
/// `A = (B∖J) ∪ I` and `D = (C∖J) ∪ I`.
pub fn from_coadmissible(
    n: usize,
    b: LetterSet,
    o: usize,
    c: LetterSet,
) -> Result<AdmissibleColumn> {
    let full = LetterSet::interval(n);
    if !b.is_subset_of(full) || !c.is_subset_of(full) {
        return Err(Error::NotAdmissible(format!(
            "letters {:?}/{:?} out of range for rank {}",
            b, c, n
        )));
    }
    let j = b.intersection(c);
    let ambient = full.difference(b.symmetric_difference(c));
    let i = left_gamma(ambient, j).ok_or_else(|| {
        Error::NotAdmissible(format!("no left-side set for J={:?} in X={:?}", j, ambient))
    })?;
    let a = b.difference(j).union(i);
    let d = c.difference(j).union(i);
    let col = complete_column(n, a, o, d)?;
    if col.b != b || col.c != c {
        return Err(Error::NotAdmissible(format!(
            "coadmissible data (B={:?}, C={:?}) is not realizable",
            b, c
        )));
    }
    Ok(col)
}

impl AdmissibleColumn {
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> LetterSet {
        self.a
    }

    pub fn zeros(&self) -> usize {
        self.o
    }

    pub fn d(&self) -> LetterSet {
        self.d
    }

    pub fn i(&self) -> LetterSet {
        self.i
    }

    pub fn j(&self) -> LetterSet {
        self.j
    }

    pub fn b(&self) -> LetterSet {
        self.b
    }

    pub fn c(&self) -> LetterSet {
        self.c
    }

    pub fn k(&self) -> LetterSet {
        self.k
    }

    pub fn height(&self) -> usize {
        self.a.len() + self.o + self.d.len()
    }

    /// Displayed entries, top to bottom: `A` increasing, the zeros, then
    /// the barred letters of `D` (increasing in the alphabet order).
    pub fn entries(&self) -> Vec<Entry> {
        display_entries(self.a, self.o, self.d)
    }

    /// The two-column double `[A∪K | C̄]  [B | K∪D barred]`.
    pub fn double(&self) -> (TwoLetterColumn, TwoLetterColumn) {
        let left = TwoLetterColumn::from_sets(self.n, self.a.union(self.k), self.c)
            .expect("left double of an admissible column is admissible");
        let right = TwoLetterColumn::from_sets(self.n, self.b, self.k.union(self.d))
            .expect("right double of an admissible column is admissible");
        (left, right)
    }
}

/// Lays out `(A, O, D)` as displayed entries.
pub fn display_entries(a: LetterSet, o: usize, d: LetterSet) -> Vec<Entry> {
    let mut out: Vec<Entry> = a.iter().map(Entry::unbarred).collect();
    out.extend(std::iter::repeat_n(Entry::zero(), o));
    let mut barred: Vec<usize> = d.elems();
    barred.reverse();
    out.extend(barred.into_iter().map(Entry::barred));
    out
}

/// Parses displayed entries back into `(A, O, D)`, checking the layout
/// (unbarred increasing, then zeros, then barred decreasing in letter).
pub fn parse_entries(n: usize, entries: &[Entry]) -> Result<(LetterSet, usize, LetterSet)> {
    let mut a = LetterSet::EMPTY;
    let mut o = 0usize;
    let mut d = LetterSet::EMPTY;
    let mut prev_key = 0usize;
    for &e in entries {
        let key = e.order_key(n);
        let ok = if e.is_zero() {
            key >= prev_key
        } else {
            key > prev_key
        };
        if !ok {
            return Err(Error::NotAdmissible(format!(
                "column entries are out of order at {}",
                e
            )));
        }
        prev_key = key;
        if e.is_unbarred() {
            a = a.insert(e.letter());
        } else if e.is_zero() {
            o += 1;
        } else {
            d = d.insert(e.letter());
        }
    }
    Ok((a, o, d))
}

/// A spin column `(A, D)` with `A ⊔ D = [1, n]`, displayed as `A`
/// increasing above the barred letters of `D`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpinColumn {
    n: usize,
    a: LetterSet,
    d: LetterSet,
}

impl SpinColumn {
    pub fn new(n: usize, a: LetterSet, d: LetterSet) -> Result<Self> {
        if !a.is_disjoint(d)
            || a.len() + d.len() != n
            || !a.union(d).is_subset_of(LetterSet::interval(n))
        {
            return Err(Error::BadSpinColumn(a.len(), d.len(), n));
        }
        Ok(SpinColumn { n, a, d })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> LetterSet {
        self.a
    }

    pub fn d(&self) -> LetterSet {
        self.d
    }

    pub fn height(&self) -> usize {
        self.n
    }

    /// The fully trivial spin column `(1, 2, …, n)`.
    pub fn trivial(n: usize) -> Self {
        SpinColumn {
            n,
            a: LetterSet::interval(n),
            d: LetterSet::EMPTY,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.d.is_empty()
    }

    pub fn entries(&self) -> Vec<Entry> {
        display_entries(self.a, 0, self.d)
    }

    /// The double `[trivial | the spin column itself]`.
    pub fn double(&self) -> (TwoLetterColumn, TwoLetterColumn) {
        let left =
            TwoLetterColumn::from_sets(self.n, LetterSet::interval(self.n), LetterSet::EMPTY)
                .expect("trivial column is admissible");
        let right = TwoLetterColumn::from_sets(self.n, self.a, self.d)
            .expect("a spin column is an admissible two-letter column");
        (left, right)
    }
}

/// A column over the two-letter alphabet `1 < … < n < n̄ < … < 1̄` (no
/// `0`), with its coadmissible description.  These are the columns that
/// occur in doubled tableaux and that the elementary slides rewrite.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoLetterColumn {
    n: usize,
    p: LetterSet,
    q: LetterSet,
    b: LetterSet,
    c: LetterSet,
}

impl TwoLetterColumn {
    /// Builds a two-letter column from its displayed letter sets
    /// (`p` unbarred, `q` barred).  Admissibility asks for a smallest
    /// right-side set of `P ∩ Q` in `[1,n] ∖ (P Δ Q)`.
    pub fn from_sets(n: usize, p: LetterSet, q: LetterSet) -> Result<Self> {
        let full = LetterSet::interval(n);
        if !p.is_subset_of(full) || !q.is_subset_of(full) {
            return Err(Error::NotAdmissible(format!(
                "letters {:?}/{:?} out of range for rank {}",
                p, q, n
            )));
        }
        let i = p.intersection(q);
        let ambient = full.difference(p.symmetric_difference(q));
        let j = right_delta(ambient, i).ok_or_else(|| {
            Error::NotAdmissible(format!(
                "two-letter column {:?}/{:?} is not admissible",
                p, q
            ))
        })?;
        Ok(TwoLetterColumn {
            n,
            p,
            q,
            b: p.difference(i).union(j),
            c: q.difference(i).union(j),
        })
    }

    /// Builds a two-letter column from its coadmissible sets `(B, C)`.
    pub fn from_coadmissible_sets(n: usize, b: LetterSet, c: LetterSet) -> Result<Self> {
        let full = LetterSet::interval(n);
        if !b.is_subset_of(full) || !c.is_subset_of(full) {
            return Err(Error::NotAdmissible(format!(
                "letters {:?}/{:?} out of range for rank {}",
                b, c, n
            )));
        }
        let j = b.intersection(c);
        let ambient = full.difference(b.symmetric_difference(c));
        let i = left_gamma(ambient, j).ok_or_else(|| {
            Error::NotAdmissible(format!(
                "coadmissible two-letter data {:?}/{:?} is not realizable",
                b, c
            ))
        })?;
        let col =
            TwoLetterColumn::from_sets(n, b.difference(j).union(i), c.difference(j).union(i))?;
        if col.b != b || col.c != c {
            return Err(Error::NotAdmissible(format!(
                "coadmissible two-letter data {:?}/{:?} is not realizable",
                b, c
            )));
        }
        Ok(col)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> LetterSet {
        self.p
    }

    pub fn q(&self) -> LetterSet {
        self.q
    }

    pub fn b(&self) -> LetterSet {
        self.b
    }

    pub fn c(&self) -> LetterSet {
        self.c
    }

    pub fn height(&self) -> usize {
        self.p.len() + self.q.len()
    }

    pub fn entries(&self) -> Vec<Entry> {
        display_entries(self.p, 0, self.q)
    }
}

/// Direction of the column presentation conversion of [`lecouvey_convert`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LecouveyDirection {
    /// `Ψ`: admissible `(A, O, D)` column to the literal `(B, O, C̄)` column.
    To,
    /// `Φ`: literal `(B, O, C̄)` column back to the admissible column.
    From,
}

/// `Ψ`: renders an admissible column as the literal column `(B, O, C̄)`.
pub fn lecouvey_to(col: &AdmissibleColumn) -> Vec<Entry> {
    display_entries(col.b, col.o, col.c)
}

/// `Φ`: recovers the admissible column from a literal `(B, O, C̄)` column.
///
/// With `k` zeros, `J¹ = (B ∩ C) ∪ {n+1, …, n+k}` must admit a left-side
/// set `I¹ = γ(J¹)` inside `[1, n+k] ∖ (B Δ C)`; then `I = γ(J)` inside
/// `I¹ ∪ J`, `K = I¹ ∖ I`, `A = (B∖J) ∪ I`, `D = (C∖J) ∪ I`.
pub fn lecouvey_from(n: usize, entries: &[Entry]) -> Result<AdmissibleColumn> {
    let (b, o, c) = parse_entries(n, entries)?;
    let j = b.intersection(c);
    let mut j1 = j;
    for t in n + 1..=n + o {
        j1 = j1.insert(t);
    }
    let ambient1 = LetterSet::interval(n + o).difference(b.symmetric_difference(c));
    let i1 = left_gamma(ambient1, j1).ok_or_else(|| {
        Error::NotAdmissible(format!(
            "no left-side set for J¹={:?} in {:?}",
            j1, ambient1
        ))
    })?;
    let i = left_gamma(i1.union(j), j)
        .ok_or_else(|| Error::NotAdmissible(format!("no left-side set for J={:?} in I¹∪J", j)))?;
    let k = i1.difference(i);
    if !k.is_subset_of(LetterSet::interval(n)) {
        return Err(Error::NotAdmissible(format!(
            "filler set {:?} leaves the rank-{} alphabet",
            k, n
        )));
    }
    let a = b.difference(j).union(i);
    let d = c.difference(j).union(i);
    let col = complete_column(n, a, o, d)?;
    if col.b != b || col.c != c || col.k != k {
        return Err(Error::NotAdmissible(
            "literal column does not come from an admissible column".into(),
        ));
    }
    Ok(col)
}

/// Converts between the two column presentations.
pub fn lecouvey_convert(
    direction: LecouveyDirection,
    n: usize,
    entries: &[Entry],
) -> Result<Vec<Entry>> {
    match direction {
        LecouveyDirection::To => {
            let (a, o, d) = parse_entries(n, entries)?;
            let col = complete_column(n, a, o, d)?;
            Ok(lecouvey_to(&col))
        }
        LecouveyDirection::From => {
            let col = lecouvey_from(n, entries)?;
            Ok(col.entries())
        }
    }
}

/// Splits a literal `(B, O, C̄)` column directly into the two columns of
/// its double, without reconstructing `(A, O, D)` first:
/// `[ (B∖J¹)∪I¹ | C̄ ]  [ B | ((C∖J¹)∪I¹) barred ]`.
pub fn lecouvey_split(n: usize, entries: &[Entry]) -> Result<(Vec<Entry>, Vec<Entry>)> {
    let (b, o, c) = parse_entries(n, entries)?;
    let j = b.intersection(c);
    let mut j1 = j;
    for t in n + 1..=n + o {
        j1 = j1.insert(t);
    }
    let ambient1 = LetterSet::interval(n + o).difference(b.symmetric_difference(c));
    let i1 = left_gamma(ambient1, j1).ok_or_else(|| {
        Error::NotAdmissible(format!(
            "no left-side set for J¹={:?} in {:?}",
            j1, ambient1
        ))
    })?;
    let a1 = b.difference(j1).union(i1);
    let d1 = c.difference(j1).union(i1);
    Ok((display_entries(a1, 0, c), display_entries(b, 0, d1)))
}
