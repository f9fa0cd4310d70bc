//! Dense Gaussian elimination over any [`FieldElement`].
//!
//! Rows are inserted one at a time into an [`Echelon`]; every stored row is
//! kept with a unit pivot and zeros in all other pivot columns, so the final
//! form is the reduced row echelon form of the span regardless of insertion
//! order.

use crate::numbers::FieldElement;

#[derive(Clone, Debug)]
pub struct Echelon<S: FieldElement> {
    ncols: usize,
    /// Stored rows, each with a unit entry in its pivot column.
    rows: Vec<Vec<S>>,
    /// `pivot_row[c]` is the row whose pivot is column `c`.
    pivot_row: Vec<Option<usize>>,
    zero: S,
}

impl<S: FieldElement> Echelon<S> {
    pub fn new(ncols: usize, zero: S) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivot_row: vec![None; ncols],
            zero,
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.pivot_row[c].is_some()
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.pivot_row[c].is_some()).collect()
    }

    /// The stored row with pivot in column `c`.
    pub fn row_for_pivot(&self, c: usize) -> Option<&[S]> {
        self.pivot_row[c].map(|i| self.rows[i].as_slice())
    }

    /// Subtracts multiples of stored rows so that `v` vanishes on every pivot
    /// column.
    pub fn reduce(&self, v: &mut [S]) {
        for c in 0..self.ncols {
            if v[c].is_zero() {
                continue;
            }
            if let Some(i) = self.pivot_row[c] {
                let f = v[c].clone();
                for (x, r) in v.iter_mut().zip(&self.rows[i]).skip(c) {
                    if !r.is_zero() {
                        *x = x.sub(&f.mul(r));
                    }
                }
            }
        }
    }

    /// Adds `v` to the span; returns whether the rank increased.
    pub fn insert(&mut self, mut v: Vec<S>) -> bool {
        debug_assert_eq!(v.len(), self.ncols);
        if self.is_full() {
            return false;
        }
        self.reduce(&mut v);
        let Some(c) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[c].inv().expect("nonzero pivot");
        for x in v.iter_mut().skip(c) {
            *x = x.mul(&inv);
        }
        // Clear the new pivot column from the existing rows.
        for row in self.rows.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, r) in row.iter_mut().zip(&v).skip(c) {
                if !r.is_zero() {
                    *x = x.sub(&f.mul(r));
                }
            }
        }
        self.pivot_row[c] = Some(self.rows.len());
        self.rows.push(v);
        true
    }

    /// Basis of `{x : r . x = 0 for every stored row r}`, one vector per
    /// non-pivot column `j` (with `x_j = 1` and zero on the other free
    /// columns), ordered by `j`.
    pub fn null_space(&self) -> Vec<Vec<S>> {
        let mut out = Vec::new();
        for j in 0..self.ncols {
            if self.pivot_row[j].is_some() {
                continue;
            }
            let mut x = vec![self.zero.clone(); self.ncols];
            x[j] = self.zero.one_like();
            for c in 0..self.ncols {
                if let Some(i) = self.pivot_row[c] {
                    x[c] = self.rows[i][j].neg();
                }
            }
            out.push(x);
        }
        out
    }
}

/// Frozen form of an [`Echelon`] for repeated reductions: each pivot row
/// restricted to the non-pivot columns, stored sparsely.
pub struct Reducer<S: FieldElement> {
    /// `(pivot column, [(free column, entry)])`.
    rows: Vec<(usize, Vec<(usize, S)>)>,
    pivot_slot: Vec<Option<usize>>,
}

impl<S: FieldElement> Reducer<S> {
    pub fn new(e: &Echelon<S>) -> Self {
        let mut pivot_slot = vec![None; e.ncols];
        let mut rows = Vec::with_capacity(e.rank());
        for c in 0..e.ncols {
            if let Some(i) = e.pivot_row[c] {
                let sparse = e.rows[i]
                    .iter()
                    .enumerate()
                    .filter(|(j, x)| !x.is_zero() && e.pivot_row[*j].is_none())
                    .map(|(j, x)| (j, x.clone()))
                    .collect();
                pivot_slot[c] = Some(rows.len());
                rows.push((c, sparse));
            }
        }
        Reducer { rows, pivot_slot }
    }

    /// Same result as [`Echelon::reduce`].
    pub fn reduce(&self, v: &mut [S]) {
        for c in 0..v.len() {
            let Some(k) = self.pivot_slot[c] else { continue };
            if v[c].is_zero() {
                continue;
            }
            let zero = v[c].zero_like();
            let f = std::mem::replace(&mut v[c], zero);
            for (j, x) in &self.rows[k].1 {
                v[*j] = v[*j].sub(&f.mul(x));
            }
        }
    }
}

/// Rank of the matrix with the given rows.
pub fn rank<S: FieldElement>(rows: impl IntoIterator<Item = Vec<S>>, ncols: usize, zero: &S) -> usize {
    let mut e = Echelon::new(ncols, zero.clone());
    for r in rows {
        e.insert(r);
        if e.is_full() {
            break;
        }
    }
    e.rank()
}

/// Right kernel `{x : A x = 0}` of the `nrows x ncols` matrix `a`.
pub fn kernel<S: FieldElement>(a: &[Vec<S>], ncols: usize, zero: &S) -> Vec<Vec<S>> {
    let mut e = Echelon::new(ncols, zero.clone());
    for r in a {
        e.insert(r.clone());
        if e.is_full() {
            break;
        }
    }
    e.null_space()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::{Fp, Rational};
    use proptest::prelude::*;

    fn q(v: i64) -> Rational {
        Rational::from_int(v)
    }

    #[test]
    fn rank_and_kernel_small() {
        let a = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(1), q(0), q(1)]];
        assert_eq!(rank(a.clone(), 3, &q(0)), 2);
        let k = kernel(&a, 3, &q(0));
        assert_eq!(k, vec![vec![q(-1), q(-1), q(1)]]);
    }

    proptest! {
        #[test]
        fn kernel_vectors_are_annihilated(entries in proptest::collection::vec(0u64..7, 20)) {
            let p = 7;
            let a: Vec<Vec<Fp>> = entries.chunks(5).map(|r| r.iter().map(|&v| Fp::from_u64(v, p)).collect()).collect();
            let zero = Fp::new(0, p);
            let k = kernel(&a, 5, &zero);
            prop_assert_eq!(k.len() + rank(a.clone(), 5, &zero), 5);
            for x in &k {
                for row in &a {
                    let dot = row.iter().zip(x).fold(zero, |acc, (u, v)| acc.add(&u.mul(v)));
                    prop_assert!(dot.is_zero());
                }
            }
        }
    }
}
