//! Subset combinatorics on an ambient set of letters `X ⊆ {1, …, 63}`:
//! the "left of / right of" relation between equal-sized subsets and the
//! extremal maps `γ` (largest set on the left) and `δ` (smallest set on
//! the right).

use std::fmt;

/// A set of positive letters, stored as a bitmask (letter `i` is bit `i`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct LetterSet(u64);

impl LetterSet {
    pub const EMPTY: LetterSet = LetterSet(0);

    /// The full interval `{1, …, m}`.
    pub fn interval(m: usize) -> Self {
        debug_assert!(m < 64);
        LetterSet(((1u64 << m) - 1) << 1)
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!((1..64).contains(&i));
        LetterSet(1 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        (1..64).contains(&i) && self.0 & (1 << i) != 0
    }

    pub fn insert(self, i: usize) -> Self {
        LetterSet(self.0 | (1 << i))
    }

    pub fn remove(self, i: usize) -> Self {
        LetterSet(self.0 & !(1 << i))
    }

    pub fn union(self, other: Self) -> Self {
        LetterSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        LetterSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        LetterSet(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: Self) -> Self {
        LetterSet(self.0 ^ other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Elements in increasing order, collected.
    pub fn elems(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Greatest element of the set strictly below `bound`, if any.
    pub fn sup_below(self, bound: usize) -> Option<usize> {
        let mask = if bound <= 1 { 0 } else { (1u64 << bound) - 1 };
        let v = self.0 & mask;
        if v == 0 {
            None
        } else {
            Some(63 - v.leading_zeros() as usize)
        }
    }

    /// Least element of the set strictly above `bound`, if any.
    pub fn inf_above(self, bound: usize) -> Option<usize> {
        let v = self.0 & !(((1u64 << bound) - 1) | (1 << bound));
        if v == 0 {
            None
        } else {
            Some(v.trailing_zeros() as usize)
        }
    }

    /// The `k` largest elements of the set (requires `k <= len`).
    pub fn largest(self, k: usize) -> Option<LetterSet> {
        if k > self.len() {
            return None;
        }
        let mut out = LetterSet::EMPTY;
        let mut v = self.0;
        for _ in 0..k {
            let top = 63 - v.leading_zeros() as usize;
            out = out.insert(top);
            v &= !(1 << top);
        }
        Some(out)
    }
}

impl FromIterator<usize> for LetterSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = LetterSet::EMPTY;
        for i in iter {
            s = s.insert(i);
        }
        s
    }
}

impl fmt::Debug for LetterSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for i in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            write!(f, "{}", i)?;
        }
        write!(f, "}}")
    }
}

/// Whether `I` sits on the left side of `J` inside the ambient set `X`:
/// both are subsets of `X` of the same size, disjoint, and the increasing
/// enumerations satisfy `x_k < y_k` for every position `k`.
pub fn is_left_side(x: LetterSet, i: LetterSet, j: LetterSet) -> bool {
    if !i.is_subset_of(x) || !j.is_subset_of(x) {
        return false;
    }
    if i.len() != j.len() || !i.is_disjoint(j) {
        return false;
    }
    i.iter().zip(j.iter()).all(|(xi, yi)| xi < yi)
}

/// The greatest set on the left side of `J` inside `X`, computed by the
/// downward greedy recursion
/// `x_s = sup { t ∈ X∖J : t < y_s }`,
/// `x_k = sup { t ∈ X∖J : t < x_{k+1}, t < y_k }`.
///
/// Returns `None` when no left-side set exists.
pub fn left_gamma(x: LetterSet, j: LetterSet) -> Option<LetterSet> {
    if !j.is_subset_of(x) {
        return None;
    }
    let pool = x.difference(j);
    let ys = j.elems();
    let mut picked = LetterSet::EMPTY;
    let mut upper = usize::MAX;
    for &y in ys.iter().rev() {
        let bound = upper.min(y);
        let t = pool.difference(picked).sup_below(bound)?;
        picked = picked.insert(t);
        upper = t;
    }
    Some(picked)
}

/// The smallest set on the right side of `I` inside `X`, the mirror
/// recursion of [`left_gamma`]:
/// `y_1 = inf { t ∈ X∖I : t > x_1 }`,
/// `y_k = inf { t ∈ X∖I : t > y_{k-1}, t > x_k }`.
pub fn right_delta(x: LetterSet, i: LetterSet) -> Option<LetterSet> {
    if !i.is_subset_of(x) {
        return None;
    }
    let pool = x.difference(i);
    let mut picked = LetterSet::EMPTY;
    let mut lower = 0usize;
    for t0 in i.iter() {
        let bound = lower.max(t0);
        let t = pool.difference(picked).inf_above(bound)?;
        picked = picked.insert(t);
        lower = t;
    }
    Some(picked)
}

/// Brute-force enumeration of every set on the left side of `J` in `X`.
/// Exponential; used as a test oracle for [`left_gamma`].
pub fn left_side_sets(x: LetterSet, j: LetterSet) -> Vec<LetterSet> {
    subsets_of(x.difference(j), j.len())
        .into_iter()
        .filter(|&i| is_left_side(x, i, j))
        .collect()
}

/// Brute-force enumeration of every set on the right side of `I` in `X`.
pub fn right_side_sets(x: LetterSet, i: LetterSet) -> Vec<LetterSet> {
    subsets_of(x.difference(i), i.len())
        .into_iter()
        .filter(|&j| is_left_side(x, i, j))
        .collect()
}

/// All `k`-element subsets of `pool`.
pub fn subsets_of(pool: LetterSet, k: usize) -> Vec<LetterSet> {
    let elems = pool.elems();
    let mut out = Vec::new();
    let mut cur = LetterSet::EMPTY;
    fn rec(
        elems: &[usize],
        from: usize,
        left: usize,
        cur: &mut LetterSet,
        out: &mut Vec<LetterSet>,
    ) {
        if left == 0 {
            out.push(*cur);
            return;
        }
        if elems.len() - from < left {
            return;
        }
        for idx in from..elems.len() {
            let e = elems[idx];
            *cur = cur.insert(e);
            rec(elems, idx + 1, left - 1, cur, out);
            *cur = cur.remove(e);
        }
    }
    rec(&elems, 0, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> LetterSet {
        v.iter().copied().collect()
    }

    #[test]
    fn left_side_basic() {
        let x = LetterSet::interval(10);
        assert!(is_left_side(x, set(&[1, 3]), set(&[2, 6])));
        assert!(!is_left_side(x, set(&[1, 3]), set(&[2, 3]))); // not disjoint
        assert!(!is_left_side(x, set(&[3, 4]), set(&[2, 6]))); // 3 > 2
        assert!(is_left_side(x, LetterSet::EMPTY, LetterSet::EMPTY));
    }

    #[test]
    fn left_sets_of_examples() {
        let x = LetterSet::interval(10);
        assert_eq!(left_side_sets(x, LetterSet::EMPTY), vec![LetterSet::EMPTY]);
        assert!(left_side_sets(x, set(&[1, 3])).is_empty());
        let l = left_side_sets(x, set(&[2, 6]));
        let expected = vec![set(&[1, 3]), set(&[1, 4]), set(&[1, 5])];
        assert_eq!(l.len(), 3);
        for e in expected {
            assert!(l.contains(&e));
        }
    }

    #[test]
    fn gamma_examples() {
        let x = LetterSet::interval(10);
        assert_eq!(left_gamma(x, set(&[2, 6])), Some(set(&[1, 5])));
        assert_eq!(left_gamma(x, set(&[1, 3])), None);
        assert_eq!(left_gamma(x, LetterSet::EMPTY), Some(LetterSet::EMPTY));
    }

    #[test]
    fn delta_examples() {
        let x = LetterSet::interval(10);
        assert_eq!(right_delta(x, set(&[2, 6])), Some(set(&[3, 7])));
        assert_eq!(right_delta(x, set(&[9, 10])), None);
        assert_eq!(right_delta(x, LetterSet::EMPTY), Some(LetterSet::EMPTY));
    }

    #[test]
    fn gamma_is_elementwise_largest() {
        // over all X ⊆ [1,6] and J ⊆ X, γ(J) is the elementwise max of the
        // left-side family (when the family is nonempty).
        for xm in 0u64..64 {
            let x = LetterSet(xm << 1);
            for jm in 0u64..64 {
                let j = LetterSet(jm << 1);
                if !j.is_subset_of(x) {
                    continue;
                }
                let fam = left_side_sets(x, j);
                let g = left_gamma(x, j);
                match g {
                    None => assert!(fam.is_empty()),
                    Some(g) => {
                        assert!(fam.contains(&g));
                        for i in fam {
                            for (a, b) in i.iter().zip(g.iter()) {
                                assert!(a <= b);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn gamma_second_lemma_property() {
        // With I = γ(J): every t in X outside I ∪ J that is below y_k is
        // also below x_k.
        for xm in 0u64..256 {
            let x = LetterSet(xm << 1);
            for jm in 0u64..256 {
                let j = LetterSet(jm << 1);
                if !j.is_subset_of(x) {
                    continue;
                }
                if let Some(i) = left_gamma(x, j) {
                    let xs = i.elems();
                    let ys = j.elems();
                    for t in x.difference(i.union(j)).iter() {
                        for k in 0..ys.len() {
                            if t < ys[k] {
                                assert!(t < xs[k], "x={:?} j={:?} i={:?} t={}", x, j, i, t);
                            }
                        }
                    }
                }
            }
        }
    }
}
