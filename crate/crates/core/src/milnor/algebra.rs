//! Graded pieces of the Milnor algebra `S/J_f` by incremental normal forms.
//!
//! For each degree `d` we keep a set `B_d` of standard monomials spanning
//! `(S/J_f)_d` and the normal form of every monomial of degree `d` over `B_d`.
//! Degree `d + 1` is obtained from degree `d`: every monomial `u` of degree
//! `d + 1` is represented by `x_i NF_d(u / x_i)` for each variable `x_i`
//! dividing it, which lives in the span of `W = {x_i b : b in B_d}`; the
//! differences between the representations of a monomial span `J_{d+1}`
//! inside that span. Echelonizing those differences over `W` gives
//! `B_{d+1}` and the new normal forms.

use crate::linalg::{Echelon, Reducer};
use crate::numbers::FieldElement;
use crate::poly::{dim_s, monomial_basis, monomial_index, Exp, HomPoly};

/// Sparse vector over the standard monomials of one degree.
type Sparse<S> = Vec<(usize, S)>;

struct Level<S: FieldElement> {
    /// Monomial indices of the standard monomials, ascending.
    standard: Vec<usize>,
    /// Normal form of every monomial of this degree, indexed by monomial index.
    nf: Vec<Sparse<S>>,
}

pub struct MilnorAlgebra<S: FieldElement> {
    /// Degree of the partial derivatives.
    dpart: u32,
    partials: [HomPoly<S>; 3],
    levels: Vec<Level<S>>,
    zero: S,
}

impl<S: FieldElement> MilnorAlgebra<S> {
    pub fn new(f: &HomPoly<S>) -> Self {
        assert!(f.deg() >= 2, "need deg f >= 2");
        MilnorAlgebra {
            dpart: f.deg() - 1,
            partials: f.partials(),
            levels: Vec::new(),
            zero: f.zero_scalar().clone(),
        }
    }

    fn ensure(&mut self, d: u32) {
        while self.levels.len() <= d as usize {
            let next = self.levels.len() as u32;
            let level = if next < self.dpart {
                identity_level(next, &self.zero)
            } else if next == self.dpart {
                self.partials_level()
            } else {
                self.lift_level(next)
            };
            self.levels.push(level);
        }
    }

    /// `dim (S/J_f)_d`.
    pub fn hilbert(&mut self, d: u32) -> usize {
        self.ensure(d);
        self.levels[d as usize].standard.len()
    }

    /// Normal form of the monomial `e` over the standard monomials of its degree.
    pub fn nf_monomial(&mut self, e: &Exp) -> &[(usize, S)] {
        let d = e[0] + e[1] + e[2];
        self.ensure(d);
        &self.levels[d as usize].nf[monomial_index(e)]
    }

    /// Number of standard monomials in degree `d`.
    fn width(&mut self, d: u32) -> usize {
        self.hilbert(d)
    }

    /// `dim {g in S_q : x^s g, y^s g, z^s g in J_f}`.
    ///
    /// Multiplication by `x^s` preserves `J_f`, so only the standard
    /// monomials of degree `q` need to be tested; `J_q` lies in the colon.
    pub fn colon_dim(&mut self, q: u32, s: u32) -> usize {
        let w = self.width(q + s);
        let h = self.hilbert(q);
        let basis = monomial_basis(q);
        let standard: Vec<Exp> = self.levels[q as usize].standard.iter().map(|&i| basis[i]).collect();
        let mut ech = Echelon::new(3 * w, self.zero.clone());
        for e in &standard {
            let mut row = vec![self.zero.clone(); 3 * w];
            for i in 0..3 {
                let mut t = *e;
                t[i] += s;
                for (k, c) in self.nf_monomial(&t) {
                    row[i * w + k] = c.clone();
                }
            }
            ech.insert(row);
            if ech.is_full() {
                break;
            }
        }
        basis.len() - h + (h - ech.rank())
    }

    fn partials_level(&self) -> Level<S> {
        let d = self.dpart;
        let n = dim_s(d as i64);
        let mut ech = Echelon::new(n, self.zero.clone());
        for p in &self.partials {
            ech.insert(p.dense());
        }
        let cols: Vec<usize> = (0..n).collect();
        let units = (0..n)
            .map(|i| {
                let mut v = vec![self.zero.clone(); n];
                v[i] = self.zero.one_like();
                v
            })
            .collect();
        finish_level(&ech, &cols, units)
    }

    fn lift_level(&self, d: u32) -> Level<S> {
        let prev = &self.levels[d as usize - 1];
        let n = dim_s(d as i64);
        // Columns: W = S_1 * B_{d-1}, in ascending monomial index.
        let prev_basis = monomial_basis(d - 1);
        let mut in_w = vec![false; n];
        for &b in &prev.standard {
            let e = prev_basis[b];
            for i in 0..3 {
                let mut t = e;
                t[i] += 1;
                in_w[monomial_index(&t)] = true;
            }
        }
        let w_cols: Vec<usize> = (0..n).filter(|&i| in_w[i]).collect();
        let mut w_pos = vec![usize::MAX; n];
        for (k, &i) in w_cols.iter().enumerate() {
            w_pos[i] = k;
        }
        let prev_std_mono: Vec<Exp> = prev.standard.iter().map(|&b| prev_basis[b]).collect();
        let width = w_cols.len();

        // x_i * NF_{d-1}(u / x_i) as a dense vector over W.
        let rep = |u: &Exp, i: usize| -> Vec<S> {
            let mut v = u.to_owned();
            v[i] -= 1;
            let mut out = vec![self.zero.clone(); width];
            for (k, c) in &prev.nf[monomial_index(&v)] {
                let mut t = prev_std_mono[*k];
                t[i] += 1;
                out[w_pos[monomial_index(&t)]] = c.clone();
            }
            out
        };
        let is_std_prev = |u: &Exp, i: usize| -> bool {
            let mut v = u.to_owned();
            v[i] -= 1;
            let nf = &prev.nf[monomial_index(&v)];
            nf.len() == 1 && prev.standard[nf[0].0] == monomial_index(&v) && nf[0].1.is_one()
        };

        let basis = monomial_basis(d);
        let mut ech = Echelon::new(width, self.zero.clone());
        let mut first_rep: Vec<Vec<S>> = Vec::with_capacity(n);
        for u in &basis {
            let vars: Vec<usize> = (0..3).filter(|&i| u[i] > 0).collect();
            let i0 = vars[0];
            let r0 = rep(u, i0);
            let std0 = is_std_prev(u, i0);
            for &j in &vars[1..] {
                if std0 && is_std_prev(u, j) {
                    continue;
                }
                let rj = rep(u, j);
                let diff: Vec<S> = r0.iter().zip(&rj).map(|(a, b)| a.sub(b)).collect();
                if diff.iter().any(|x| !x.is_zero()) {
                    ech.insert(diff);
                }
            }
            first_rep.push(r0);
        }
        finish_level(&ech, &w_cols, first_rep)
    }
}

fn standard_positions(standard: &[usize], n: usize) -> Vec<usize> {
    let mut pos = vec![usize::MAX; n];
    for (k, &i) in standard.iter().enumerate() {
        pos[i] = k;
    }
    pos
}

fn identity_level<S: FieldElement>(d: u32, zero: &S) -> Level<S> {
    let n = dim_s(d as i64);
    Level {
        standard: (0..n).collect(),
        nf: (0..n).map(|i| vec![(i, zero.one_like())]).collect(),
    }
}

/// Level whose relations are the rows of `ech`; echelon column `k` stands
/// for monomial `cols[k]`. `reps[u]` represents monomial `u` over the
/// echelon columns; its reduction is the normal form.
fn finish_level<S: FieldElement>(ech: &Echelon<S>, cols: &[usize], reps: Vec<Vec<S>>) -> Level<S> {
    let n = reps.len();
    let standard: Vec<usize> = (0..cols.len()).filter(|&k| !ech.is_pivot(k)).map(|k| cols[k]).collect();
    let std_pos = standard_positions(&standard, n);
    let reducer = Reducer::new(ech);
    let nf = reps
        .into_iter()
        .map(|mut r| {
            reducer.reduce(&mut r);
            r.into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (std_pos[cols[k]], c))
                .collect()
        })
        .collect();
    Level { standard, nf }
}
