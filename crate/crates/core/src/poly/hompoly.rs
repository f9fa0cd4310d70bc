use std::collections::BTreeMap;
use std::fmt;

use crate::numbers::FieldElement;

/// Exponent triple `(a, b, c)` of `x^a y^b z^c`.
pub type Exp = [u32; 3];

/// Monomials of degree `r` in graded lexicographic order with `x > y > z`:
/// `x^r, x^{r-1}y, x^{r-1}z, x^{r-2}y^2, ...`.
pub fn monomial_basis(r: u32) -> Vec<Exp> {
    let mut out = Vec::with_capacity(((r + 1) * (r + 2) / 2) as usize);
    for a in (0..=r).rev() {
        for b in (0..=r - a).rev() {
            out.push([a, b, r - a - b]);
        }
    }
    out
}

/// Position of `e` in [`monomial_basis`] of its degree.
pub fn monomial_index(e: &Exp) -> usize {
    let r = e[0] + e[1] + e[2];
    let k = (r - e[0]) as usize;
    k * (k + 1) / 2 + e[2] as usize
}

/// `dim S_r = C(r+2, 2)`.
pub fn dim_s(r: i64) -> usize {
    if r < 0 {
        0
    } else {
        let r = r as usize;
        (r + 1) * (r + 2) / 2
    }
}

/// Homogeneous polynomial in `x, y, z`. Only nonzero coefficients are stored.
#[derive(Clone, PartialEq)]
pub struct HomPoly<S: FieldElement> {
    deg: u32,
    terms: BTreeMap<Exp, S>,
    zero: S,
}

impl<S: FieldElement> HomPoly<S> {
    pub fn zero(deg: u32, zero: S) -> Self {
        HomPoly {
            deg,
            terms: BTreeMap::new(),
            zero,
        }
    }

    pub fn constant(c: S) -> Self {
        let mut p = Self::zero(0, c.zero_like());
        p.add_term([0, 0, 0], c);
        p
    }

    /// The coordinate `x` (i = 0), `y` (1) or `z` (2).
    pub fn var(i: usize, zero: S) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        let one = zero.one_like();
        let mut p = Self::zero(1, zero);
        p.add_term(e, one);
        p
    }

    /// Linear form `a x + b y + c z`.
    pub fn linear(coeffs: &[S; 3]) -> Self {
        let mut p = Self::zero(1, coeffs[0].zero_like());
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = [0; 3];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    /// Quadratic form with coefficients of `(x², y², z², xy, xz, yz)`.
    pub fn quadratic(coeffs: &[S; 6]) -> Self {
        const EXPS: [Exp; 6] = [[2, 0, 0], [0, 2, 0], [0, 0, 2], [1, 1, 0], [1, 0, 1], [0, 1, 1]];
        let mut p = Self::zero(2, coeffs[0].zero_like());
        for (e, c) in EXPS.iter().zip(coeffs) {
            p.add_term(*e, c.clone());
        }
        p
    }

    /// Builds from `(coefficient, exponent)` pairs; all exponents must share one degree.
    pub fn from_terms(deg: u32, zero: S, terms: impl IntoIterator<Item = (S, Exp)>) -> Self {
        let mut p = Self::zero(deg, zero);
        for (c, e) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: Exp, c: S) {
        assert_eq!(
            e[0] + e[1] + e[2],
            self.deg,
            "exponent {e:?} not of degree {}",
            self.deg
        );
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                let s = v.add(&c);
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn deg(&self) -> u32 {
        self.deg
    }

    pub fn zero_scalar(&self) -> &S {
        &self.zero
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &S)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &Exp) -> S {
        self.terms.get(e).cloned().unwrap_or_else(|| self.zero.clone())
    }

    /// Coefficient vector in [`monomial_basis`] order.
    pub fn dense(&self) -> Vec<S> {
        monomial_basis(self.deg).iter().map(|e| self.coeff(e)).collect()
    }

    /// Sum; a zero operand adopts the degree of the other.
    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        assert_eq!(self.deg, rhs.deg, "adding forms of different degrees");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        HomPoly {
            deg: self.deg,
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(),
            zero: self.zero.clone(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.deg, self.zero.clone());
        }
        HomPoly {
            deg: self.deg,
            terms: self.terms.iter().map(|(e, v)| (*e, v.mul(c))).collect(),
            zero: self.zero.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.deg + rhs.deg, self.zero.clone());
        for (ea, a) in &self.terms {
            for (eb, b) in &rhs.terms {
                out.add_term([ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]], a.mul(b));
            }
        }
        out
    }

    /// Multiplication by the monomial `x^e`.
    pub fn mul_monomial(&self, e: &Exp) -> Self {
        HomPoly {
            deg: self.deg + e[0] + e[1] + e[2],
            terms: self
                .terms
                .iter()
                .map(|(t, c)| ([t[0] + e[0], t[1] + e[1], t[2] + e[2]], c.clone()))
                .collect(),
            zero: self.zero.clone(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(self.zero.one_like());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn product(factors: &[Self]) -> Self {
        let zero = factors.first().expect("nonempty product").zero.clone();
        factors
            .iter()
            .fold(Self::constant(zero.one_like()), |acc, f| acc.mul(f))
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        assert!(self.deg >= 1, "derivative of a constant form");
        let mut out = Self::zero(self.deg - 1, self.zero.clone());
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut f = *e;
            f[i] -= 1;
            out.add_term(f, c.mul(&c.from_i64_like(e[i] as i64)));
        }
        out
    }

    /// `(f_x, f_y, f_z)`.
    pub fn partials(&self) -> [Self; 3] {
        [self.derivative(0), self.derivative(1), self.derivative(2)]
    }

    pub fn eval(&self, pt: &[S; 3]) -> S {
        let mut acc = self.zero.clone();
        for (e, c) in &self.terms {
            let m = pt[0]
                .pow_u64(e[0] as u64)
                .mul(&pt[1].pow_u64(e[1] as u64))
                .mul(&pt[2].pow_u64(e[2] as u64));
            acc = acc.add(&c.mul(&m));
        }
        acc
    }

    /// Image under a coefficient map (field embedding or reduction).
    pub fn map<T: FieldElement>(&self, zero: T, f: impl Fn(&S) -> T) -> HomPoly<T> {
        HomPoly::from_terms(self.deg, zero, self.terms.iter().map(|(e, c)| (f(c), *e)))
    }

    /// Fallible variant of [`HomPoly::map`].
    pub fn try_map<T: FieldElement, E>(&self, zero: T, f: impl Fn(&S) -> Result<T, E>) -> Result<HomPoly<T>, E> {
        let mut out = HomPoly::zero(self.deg, zero);
        for (e, c) in &self.terms {
            out.add_term(*e, f(c)?);
        }
        Ok(out)
    }

    /// `f(M (x, y, z)^T)`: substitutes the `i`-th variable by the linear form
    /// with coefficients `m[i]`.
    pub fn linear_substitute(&self, m: &[[S; 3]; 3]) -> Self {
        let forms: Vec<Self> = m.iter().map(Self::linear).collect();
        let powers: Vec<Vec<Self>> = forms
            .iter()
            .map(|l| {
                let mut v = vec![Self::constant(self.zero.one_like())];
                for k in 1..=self.deg {
                    let next = v[k as usize - 1].mul(l);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = Self::zero(self.deg, self.zero.clone());
        for (e, c) in &self.terms {
            let t = powers[0][e[0] as usize]
                .mul(&powers[1][e[1] as usize])
                .mul(&powers[2][e[2] as usize])
                .scale(c);
            out = out.add(&t);
        }
        out
    }

    /// `x f_x + y f_y + z f_z - deg f`, zero for every form.
    pub fn euler_defect(&self) -> Self {
        let [fx, fy, fz] = self.partials();
        let z = self.zero.clone();
        let lhs = HomPoly::var(0, z.clone())
            .mul(&fx)
            .add(&HomPoly::var(1, z.clone()).mul(&fy))
            .add(&HomPoly::var(2, z.clone()).mul(&fz));
        lhs.sub(&self.scale(&z.from_i64_like(self.deg as i64)))
    }
}

impl<S: FieldElement> fmt::Debug for HomPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for e in monomial_basis(self.deg) {
            let Some(c) = self.terms.get(&e) else { continue };
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono: Vec<String> = ["x", "y", "z"]
                .iter()
                .zip(e)
                .filter(|(_, k)| *k > 0)
                .map(|(v, k)| if k == 1 { v.to_string() } else { format!("{v}^{k}") })
                .collect();
            if mono.is_empty() {
                write!(f, "({c:?})")?;
            } else if c.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "({c:?})*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}
