use std::fmt;

use super::{FieldElement, FiniteFieldElement, NumberError};
use num_bigint::BigUint;

/// Dense univariate polynomial, coefficients in ascending degree order.
///
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector. A zero scalar of the coefficient field is kept alongside so
/// that constants can be built without a separate context.
#[derive(Clone, PartialEq)]
pub struct UniPoly<S: FieldElement> {
    coeffs: Vec<S>,
    zero: S,
}

impl<S: FieldElement> UniPoly<S> {
    pub fn new(coeffs: Vec<S>, zero: S) -> Self {
        let mut p = UniPoly { coeffs, zero };
        p.normalize();
        p
    }

    pub fn zero(zero: S) -> Self {
        UniPoly {
            coeffs: Vec::new(),
            zero,
        }
    }

    pub fn constant(c: S) -> Self {
        let zero = c.zero_like();
        Self::new(vec![c], zero)
    }

    /// The monomial `x`.
    pub fn x(zero: S) -> Self {
        let one = zero.one_like();
        Self::new(vec![zero.clone(), one], zero)
    }

    pub fn from_i64s(coeffs: &[i64], zero: S) -> Self {
        let cs = coeffs.iter().map(|&c| zero.from_i64_like(c)).collect();
        Self::new(cs, zero)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn zero_scalar(&self) -> &S {
        &self.zero
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> S {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.zero.clone())
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let cs = (0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect();
        Self::new(cs, self.zero.clone())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let cs = (0..n).map(|i| self.coeff(i).sub(&rhs.coeff(i))).collect();
        Self::new(cs, self.zero.clone())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.neg()).collect(), self.zero.clone())
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect(), self.zero.clone())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(self.zero.clone());
        }
        let mut out = vec![self.zero.clone(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out, self.zero.clone())
    }

    pub fn derivative(&self) -> Self {
        let cs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&c.from_i64_like(i as i64)))
            .collect();
        Self::new(cs, self.zero.clone())
    }

    pub fn eval(&self, x: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(self.zero.clone(), |acc, c| acc.mul(x).add(c))
    }

    /// Quotient and remainder; errors on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self), NumberError> {
        let dl = d.leading().ok_or(NumberError::DivisionByZero)?.inv()?;
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(self.zero.clone()), self.clone()));
        }
        let mut q = vec![self.zero.clone(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].mul(&dl);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].sub(&c.mul(dc));
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((Self::new(q, self.zero.clone()), Self::new(r, self.zero.clone())))
    }

    pub fn rem(&self, d: &Self) -> Result<Self, NumberError> {
        Ok(self.div_rem(d)?.1)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Monic greatest common divisor (zero when both inputs are zero).
    pub fn gcd(&self, rhs: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*rhs = g`, `g` monic.
    pub fn xgcd(&self, rhs: &Self) -> (Self, Self, Self) {
        let z = self.zero.clone();
        let (mut r0, mut r1) = (self.clone(), rhs.clone());
        let (mut s0, mut s1) = (Self::constant(z.one_like()), Self::zero(z.clone()));
        let (mut t0, mut t1) = (Self::zero(z.clone()), Self::constant(z.one_like()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s2 = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s2);
            let t2 = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.leading().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let li = l.inv().expect("nonzero");
                (r0.scale(&li), s0.scale(&li), t0.scale(&li))
            }
        }
    }

    pub fn mul_mod(&self, rhs: &Self, m: &Self) -> Self {
        self.mul(rhs).rem(m).expect("nonzero modulus")
    }

    pub fn pow_mod_u64(&self, mut e: u64, m: &Self) -> Self {
        let mut acc = Self::constant(self.zero.one_like()).rem(m).expect("nonzero modulus");
        let mut base = self.rem(m).expect("nonzero modulus");
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, m);
            }
            base = base.mul_mod(&base, m);
            e >>= 1;
        }
        acc
    }

    pub fn pow_mod_big(&self, e: &BigUint, m: &Self) -> Self {
        let base = self.rem(m).expect("nonzero modulus");
        let mut acc = Self::constant(self.zero.one_like()).rem(m).expect("nonzero modulus");
        for i in (0..e.bits()).rev() {
            acc = acc.mul_mod(&acc, m);
            if e.bit(i) {
                acc = acc.mul_mod(&base, m);
            }
        }
        acc
    }

    /// Maps coefficients through a field embedding.
    pub fn map<T: FieldElement>(&self, zero: T, f: impl Fn(&S) -> T) -> UniPoly<T> {
        UniPoly::new(self.coeffs.iter().map(f).collect(), zero)
    }
}

impl<S: FiniteFieldElement> UniPoly<S> {
    /// `x^(q^k) mod m` where `q` is the field order, by repeated `q`-th powers.
    pub fn frobenius_x(&self, k: u32) -> Self {
        let q = self.zero.order();
        let mut acc = Self::x(self.zero.clone()).rem(self).expect("nonzero modulus");
        for _ in 0..k {
            acc = acc.pow_mod_big(&q, self);
        }
        acc
    }
}

impl<S: FieldElement> fmt::Debug for UniPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c:?}"),
                1 => format!("{c:?}*x"),
                _ => format!("{c:?}*x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
