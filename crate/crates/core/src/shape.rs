//! Shapes of rank-`n` orthogonal tableaux, recorded by the coefficients
//! `a_1, …, a_n` of the fundamental weights.
//!
//! A shape with `a_n` odd carries one spin column (of height `n`) in front
//! of `⌊a_n/2⌋` ordinary height-`n` columns; `a_i` counts height-`i`
//! columns for `i < n`.

use crate::error::{Error, Result};
use std::fmt;

/// A dominant weight `a_1 ω_1 + … + a_n ω_n`, i.e. the shape of a tableau.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Shape {
    n: usize,
    a: Vec<u32>,
}

/// The height and kind of one column slot of a shape, leftmost first.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ColumnSlot {
    pub height: usize,
    pub spin: bool,
}

impl Shape {
    /// Builds a shape from its fundamental-weight coefficients.
    pub fn new(n: usize, a: Vec<u32>) -> Result<Self> {
        if n == 0 || a.len() != n {
            return Err(Error::InvalidShape(format!(
                "expected {} coefficients, got {}",
                n,
                a.len()
            )));
        }
        Ok(Shape { n, a })
    }

    pub fn empty(n: usize) -> Self {
        Shape { n, a: vec![0; n] }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.a
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.a[i - 1]
    }

    /// Whether the shape carries a spin column (`a_n` odd).
    pub fn has_spin(&self) -> bool {
        self.a[self.n - 1] % 2 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.a.iter().all(|&x| x == 0)
    }

    /// Column slots from left to right: the spin column first if present,
    /// then ordinary columns by weakly decreasing height.
    pub fn column_slots(&self) -> Vec<ColumnSlot> {
        let mut out = Vec::new();
        let an = self.a[self.n - 1];
        if an % 2 == 1 {
            out.push(ColumnSlot {
                height: self.n,
                spin: true,
            });
        }
        for _ in 0..an / 2 {
            out.push(ColumnSlot {
                height: self.n,
                spin: false,
            });
        }
        for h in (1..self.n).rev() {
            for _ in 0..self.a[h - 1] {
                out.push(ColumnSlot {
                    height: h,
                    spin: false,
                });
            }
        }
        out
    }

    /// Total number of boxes of the diagram.
    pub fn boxes(&self) -> usize {
        self.column_slots().iter().map(|s| s.height).sum()
    }

    /// Removes one column of height `s`.  For `s = n` the flag tells
    /// whether the removed column is the spin column (`a_n -= 1`) or an
    /// ordinary height-`n` column (`a_n -= 2`).
    pub fn remove_height(&self, s: usize, spin: bool) -> Result<Shape> {
        if s == 0 || s > self.n {
            return Err(Error::InvalidShape(format!(
                "cannot remove a column of height {} at rank {}",
                s, self.n
            )));
        }
        let mut a = self.a.clone();
        if s == self.n {
            let dec = if spin { 1 } else { 2 };
            if spin && a[s - 1].is_multiple_of(2) {
                return Err(Error::InvalidShape("no spin column to remove".into()));
            }
            if a[s - 1] < dec {
                return Err(Error::InvalidShape(format!(
                    "no height-{} column to remove",
                    s
                )));
            }
            a[s - 1] -= dec;
        } else {
            if spin {
                return Err(Error::InvalidShape("spin columns have full height".into()));
            }
            if a[s - 1] == 0 {
                return Err(Error::InvalidShape(format!(
                    "no height-{} column to remove",
                    s
                )));
            }
            a[s - 1] -= 1;
        }
        Ok(Shape { n: self.n, a })
    }

    /// Partial order used to index the target of the push map:
    /// `μ ≤ λ` iff `a_i(μ) ≤ a_i(λ)` for all `i`, and `a_n(μ)` odd implies
    /// `a_n(μ) = a_n(λ)`.  The parity of `a_n` changes only when the spin
    /// column itself is consumed, which happens at most once and leaves an
    /// even coefficient, so an odd `a_n` below the top must still be the
    /// top one.
    pub fn leq(&self, other: &Shape) -> bool {
        if self.n != other.n {
            return false;
        }
        if self.a.iter().zip(&other.a).any(|(&m, &l)| m > l) {
            return false;
        }
        !(self.has_spin() && self.a[self.n - 1] != other.a[other.n - 1])
    }

    /// All shapes `μ ≤ self` in the order of [`Shape::leq`].
    pub fn dominated(&self) -> Vec<Shape> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.n];
        self.dominated_rec(0, &mut cur, &mut out);
        out
    }

    fn dominated_rec(&self, i: usize, cur: &mut Vec<u32>, out: &mut Vec<Shape>) {
        if i == self.n {
            let cand = Shape {
                n: self.n,
                a: cur.clone(),
            };
            if cand.leq(self) {
                out.push(cand);
            }
            return;
        }
        for v in 0..=self.a[i] {
            cur[i] = v;
            self.dominated_rec(i + 1, cur, out);
        }
    }

    /// Parses the `a1,a2,…,an` comma-separated form.
    pub fn parse(s: &str) -> Result<Shape> {
        let a: std::result::Result<Vec<u32>, _> =
            s.split(',').map(|t| t.trim().parse::<u32>()).collect();
        let a = a.map_err(|e| Error::Parse(format!("bad shape '{}': {}", s, e)))?;
        if a.is_empty() {
            return Err(Error::Parse("empty shape".into()));
        }
        let n = a.len();
        Shape::new(n, a)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.a.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn column_slots_with_spin() {
        // a = (0,1,1,1,0) at n = 5: heights 4, 3, 2, no spin.
        let s = Shape::new(5, vec![0, 1, 1, 1, 0]).unwrap();
        assert!(!s.has_spin());
        let heights: Vec<usize> = s.column_slots().iter().map(|c| c.height).collect();
        assert_eq!(heights, vec![4, 3, 2]);

        // a = (0,3) at n = 2: spin column first, then one ordinary column.
        let s = Shape::new(2, vec![0, 3]).unwrap();
        let slots = s.column_slots();
        assert_eq!(slots.len(), 2);
        assert!(slots[0].spin && slots[0].height == 2);
        assert!(!slots[1].spin && slots[1].height == 2);
    }

    #[test]
    fn remove_height_spin_column() {
        // Removing the (trivial) spin column from a = (0,1) at n = 2 empties the shape.
        let s = Shape::new(2, vec![0, 1]).unwrap();
        let r = s.remove_height(2, true).unwrap();
        assert_eq!(r, Shape::new(2, vec![0, 0]).unwrap());
        // An ordinary height-2 column costs a_2 -= 2.
        let s = Shape::new(2, vec![0, 2]).unwrap();
        let r = s.remove_height(2, false).unwrap();
        assert_eq!(r, Shape::new(2, vec![0, 0]).unwrap());
        // Lower column.
        let s = Shape::new(3, vec![2, 1, 0]).unwrap();
        let r = s.remove_height(1, false).unwrap();
        assert_eq!(r, Shape::new(3, vec![1, 1, 0]).unwrap());
    }

    #[test]
    fn partial_order_parity() {
        let odd = Shape::new(2, vec![0, 1]).unwrap();
        let even = Shape::new(2, vec![0, 2]).unwrap();
        let bigger_odd = Shape::new(2, vec![1, 3]).unwrap();
        let same_odd = Shape::new(2, vec![0, 3]).unwrap();
        assert!(!odd.leq(&bigger_odd)); // a smaller odd a_n is excluded
        assert!(same_odd.leq(&bigger_odd)); // the same odd a_n is allowed
        assert!(!odd.leq(&even)); // odd under even is excluded
        assert!(even.leq(&bigger_odd)); // even under odd is allowed
        assert!(Shape::empty(2).leq(&odd));
    }

    #[test]
    fn parse_round_trip() {
        let s = Shape::parse("0,1,1,1,0").unwrap();
        assert_eq!(s.to_string(), "0,1,1,1,0");
        assert_eq!(s.rank(), 5);
        assert!(Shape::parse("").is_err());
        assert!(Shape::parse("1,x").is_err());
    }

    #[test]
    fn dominated_counts() {
        let s = Shape::new(2, vec![1, 1]).unwrap();
        // candidates (0..=1)x(0..=1), all pass parity since a_2(λ)=1 is odd.
        assert_eq!(s.dominated().len(), 4);
        let s = Shape::new(2, vec![0, 2]).unwrap();
        // (0,0), (0,2) allowed; (0,1) excluded by parity.
        assert_eq!(s.dominated().len(), 2);
    }
}
