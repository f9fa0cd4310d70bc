use std::collections::HashMap;

use super::HomPoly;
use crate::numbers::{FieldElement, UniPoly};

/// Determinant by Bareiss fraction-free elimination. Every division is exact.
pub fn det_bareiss<S: FieldElement>(mut m: Vec<Vec<S>>, zero: &S) -> S {
    let n = m.len();
    if n == 0 {
        return zero.one_like();
    }
    let mut sign = false;
    let mut prev = zero.one_like();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = !sign;
                }
                None => return zero.clone(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = v.div(&prev).expect("Bareiss pivot is nonzero");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        d.neg()
    } else {
        d
    }
}

/// Sylvester matrix of coefficient lists given leading coefficient first.
fn sylvester<T: Clone>(f: &[T], g: &[T], zero: &T) -> Vec<Vec<T>> {
    let df = f.len() - 1;
    let dg = g.len() - 1;
    let n = df + dg;
    let mut m = vec![vec![zero.clone(); n]; n];
    for k in 0..dg {
        for (j, c) in f.iter().enumerate() {
            m[k][k + j] = c.clone();
        }
    }
    for k in 0..df {
        for (j, c) in g.iter().enumerate() {
            m[dg + k][k + j] = c.clone();
        }
    }
    m
}

/// Resultant of two nonzero univariate polynomials (Sylvester determinant).
pub fn resultant<S: FieldElement>(f: &UniPoly<S>, g: &UniPoly<S>) -> S {
    let zero = f.zero_scalar().clone();
    let df = f.degree().expect("nonzero polynomial");
    let dg = g.degree().expect("nonzero polynomial");
    if df == 0 && dg == 0 {
        return zero.one_like();
    }
    let fc: Vec<S> = f.coeffs().iter().rev().cloned().collect();
    let gc: Vec<S> = g.coeffs().iter().rev().cloned().collect();
    det_bareiss(sylvester(&fc, &gc, &zero), &zero)
}

/// Coefficient of `v^j` in `f` viewed as a polynomial in variable `v`,
/// a form of degree `deg f - j` in the other two variables.
pub fn coeff_in_var<S: FieldElement>(f: &HomPoly<S>, var: usize, j: u32) -> HomPoly<S> {
    let mut out = HomPoly::zero(f.deg() - j, f.zero_scalar().clone());
    for (e, c) in f.terms() {
        if e[var] == j {
            let mut e2 = *e;
            e2[var] = 0;
            out.add_term(e2, c.clone());
        }
    }
    out
}

/// Homogeneous resultant of `f` and `g` with respect to variable `var`,
/// taken with formal degrees `deg f`, `deg g`. The result is a form of degree
/// `deg f * deg g` not involving `var`; it vanishes identically exactly when
/// `f` and `g` share a factor or both vanish at the coordinate point of `var`.
pub fn res_wrt<S: FieldElement>(f: &HomPoly<S>, g: &HomPoly<S>, var: usize) -> HomPoly<S> {
    let zero = f.zero_scalar().clone();
    let fc: Vec<HomPoly<S>> = (0..=f.deg()).rev().map(|j| coeff_in_var(f, var, j)).collect();
    let gc: Vec<HomPoly<S>> = (0..=g.deg()).rev().map(|j| coeff_in_var(g, var, j)).collect();
    let zero_poly = HomPoly::zero(0, zero.clone());
    let m = sylvester(&fc, &gc, &zero_poly);
    let n = m.len();
    if n == 0 {
        return HomPoly::constant(zero.one_like());
    }
    let mut memo = HashMap::new();
    let d = laplace(&m, 0, (1u32 << n) - 1, &mut memo);
    if d.is_zero() {
        HomPoly::zero(f.deg() * g.deg(), zero)
    } else {
        d
    }
}

/// Division-free cofactor expansion along rows, memoized on the remaining
/// column set.
fn laplace<S: FieldElement>(
    m: &[Vec<HomPoly<S>>],
    row: usize,
    cols: u32,
    memo: &mut HashMap<u32, HomPoly<S>>,
) -> HomPoly<S> {
    let zero = m[0][0].zero_scalar().clone();
    if row == m.len() {
        return HomPoly::constant(zero.one_like());
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = HomPoly::zero(0, zero);
    let mut sign = false;
    for j in 0..m.len() {
        if cols & (1 << j) == 0 {
            continue;
        }
        let entry = &m[row][j];
        if !entry.is_zero() {
            let minor = laplace(m, row + 1, cols & !(1 << j), memo);
            if !minor.is_zero() {
                let t = entry.mul(&minor);
                acc = if sign { acc.sub(&t) } else { acc.add(&t) };
            }
        }
        sign = !sign;
    }
    memo.insert(cols, acc.clone());
    acc
}
