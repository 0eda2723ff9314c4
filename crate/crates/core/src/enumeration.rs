//! Exhaustive generation of tableaux of a given shape, and the
//! Weyl-formula dimension check the counts are verified against.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::alphabet::Weight;
use crate::columns::{complete_column, SpinColumn, TwoLetterColumn};
use crate::error::Result;
use crate::shape::Shape;
use crate::subsets::{subsets_of, LetterSet};
use crate::tableau::{Column, Tableau};

/// All admissible columns of the given height at rank `n`, sorted by
/// their displayed entries.
pub fn columns_of_height(n: usize, height: usize) -> Vec<Column> {
    let full = LetterSet::interval(n);
    let mut out = Vec::new();
    for asize in 0..=height {
        for dsize in 0..=height - asize {
            let o = height - asize - dsize;
            for a in subsets_of(full, asize) {
                for d in subsets_of(full, dsize) {
                    if let Ok(col) = complete_column(n, a, o, d) {
                        out.push(Column::Admissible(col));
                    }
                }
            }
        }
    }
    out.sort_by_key(|c| column_sort_key(c, n));
    out
}

/// All `2^n` spin columns at rank `n`.
pub fn spin_columns(n: usize) -> Vec<Column> {
    let full = LetterSet::interval(n);
    let mut out: Vec<Column> = (0..=n)
        .flat_map(|k| subsets_of(full, k))
        .map(|a| Column::Spin(SpinColumn::new(n, a, full.difference(a)).unwrap()))
        .collect();
    out.sort_by_key(|c| column_sort_key(c, n));
    out
}

fn column_sort_key(c: &Column, n: usize) -> Vec<usize> {
    c.entries().iter().map(|e| e.order_key(n)).collect()
}

/// Backtracking enumeration of all semistandard tableaux of a shape.
pub fn enumerate_tableaux(shape: &Shape) -> Result<Vec<Tableau>> {
    let n = shape.rank();
    let slots = shape.column_slots();
    if slots.is_empty() {
        return Ok(vec![Tableau::empty(n)]);
    }
    // candidate columns per slot, grouped by height to share the work
    let mut pools: Vec<Vec<Column>> = Vec::with_capacity(slots.len());
    for slot in &slots {
        if slot.spin {
            pools.push(spin_columns(n));
        } else {
            match pools
                .iter()
                .zip(&slots)
                .find(|(_, s)| !s.spin && s.height == slot.height)
            {
                Some((p, _)) => pools.push(p.clone()),
                None => pools.push(columns_of_height(n, slot.height)),
            }
        }
    }
    let mut out = Vec::new();
    let mut picked: Vec<Column> = Vec::with_capacity(slots.len());
    fill(n, &pools, &mut picked, &mut out)?;
    Ok(out)
}

fn fill(
    n: usize,
    pools: &[Vec<Column>],
    picked: &mut Vec<Column>,
    out: &mut Vec<Tableau>,
) -> Result<()> {
    let idx = picked.len();
    if idx == pools.len() {
        out.push(Tableau::new(n, picked.clone())?);
        return Ok(());
    }
    for cand in &pools[idx] {
        if let Some(prev) = picked.last() {
            if !pair_compatible(n, prev, cand) {
                continue;
            }
        }
        if !column_is_standard(n, cand) {
            continue;
        }
        picked.push(cand.clone());
        fill(n, pools, picked, out)?;
        picked.pop();
    }
    Ok(())
}

fn rows_weakly_increase(n: usize, left: &TwoLetterColumn, right: &TwoLetterColumn) -> bool {
    let l = left.entries();
    for (ridx, e) in right.entries().iter().enumerate() {
        match l.get(ridx) {
            Some(x) if x.order_key(n) <= e.order_key(n) => {}
            _ => return false,
        }
    }
    true
}

/// Whether the double of a single column has weakly increasing rows.
fn column_is_standard(n: usize, c: &Column) -> bool {
    let (l, r) = c.double();
    rows_weakly_increase(n, &l, &r)
}

/// Whether two adjacent columns keep the doubled rows between them
/// weakly increasing.
fn pair_compatible(n: usize, left: &Column, right: &Column) -> bool {
    let (_, l2) = left.double();
    let (r1, _) = right.double();
    rows_weakly_increase(n, &l2, &r1)
}

/// The quasistandard tableaux among all semistandard ones of a shape.
pub fn enumerate_quasistandard(shape: &Shape) -> Result<Vec<Tableau>> {
    Ok(enumerate_tableaux(shape)?
        .into_iter()
        .filter(|t| t.is_quasistandard())
        .collect())
}

/// Dimension of the rank-`n` odd orthogonal representation with highest
/// weight given by the column multiplicities `a_1..a_n` of the shape,
/// by the Weyl product over the positive roots `e_i ± e_j` and `e_i`.
pub fn weyl_dim(shape: &Shape) -> BigInt {
    let n = shape.rank();
    // doubled coordinates to keep the half-integral spin weights exact
    let lam: Vec<i64> = (0..n)
        .map(|i| {
            let tail: u32 = (i..n - 1).map(|t| shape.coeff(t + 1)).sum();
            2 * tail as i64 + shape.coeff(n) as i64
        })
        .collect();
    let rho: Vec<i64> = (0..n).map(|i| 2 * (n - 1 - i) as i64 + 1).collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    let mut push_root = |coef: &dyn Fn(&[i64]) -> i64| {
        num *= BigInt::from(coef(&lam) + coef(&rho));
        den *= BigInt::from(coef(&rho));
    };
    for i in 0..n {
        for j in i + 1..n {
            push_root(&|v: &[i64]| v[i] - v[j]);
            push_root(&|v: &[i64]| v[i] + v[j]);
        }
        push_root(&|v: &[i64]| v[i]);
    }
    debug_assert!(!den.is_zero());
    let (q, r) = (num.clone() / den.clone(), num % den);
    debug_assert!(r.is_zero());
    q
}

/// A consistency report for one shape: the semistandard count against
/// the Weyl dimension, and the image decomposition of the push map.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub shape: Shape,
    pub semistandard: usize,
    pub weyl: BigInt,
    /// Quasistandard counts per dominated shape.
    pub quasistandard: Vec<(Shape, usize)>,
}

impl VerifyReport {
    pub fn counts_match(&self) -> bool {
        BigInt::from(self.semistandard) == self.weyl
            && self.quasistandard.iter().map(|(_, c)| c).sum::<usize>() == self.semistandard
    }
}

/// Counts the semistandard tableaux of a shape, checks them against the
/// Weyl formula, and tallies the quasistandard tableaux of every
/// dominated shape.
pub fn verify_shape(shape: &Shape) -> Result<VerifyReport> {
    let semistandard = enumerate_tableaux(shape)?.len();
    let mut quasistandard = Vec::new();
    for mu in shape.dominated() {
        let count = enumerate_quasistandard(&mu)?.len();
        quasistandard.push((mu, count));
    }
    Ok(VerifyReport {
        shape: shape.clone(),
        semistandard,
        weyl: weyl_dim(shape),
        quasistandard,
    })
}

/// The weight multiset of all semistandard tableaux of a shape.
pub fn character_weights(shape: &Shape) -> Result<Vec<Weight>> {
    Ok(enumerate_tableaux(shape)?
        .iter()
        .map(Tableau::weight)
        .collect())
}
