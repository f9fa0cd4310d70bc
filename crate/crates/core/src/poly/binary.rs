use thiserror::Error;

use super::HomPoly;
use crate::numbers::{FieldElement, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LineError {
    #[error("line has all coefficients zero")]
    DegenerateLine,
}

/// Binary form `sum_i c_i s^{deg-i} t^i`.
#[derive(Clone, Debug, PartialEq)]
pub struct BinaryForm<S: FieldElement> {
    deg: u32,
    /// `coeffs[i]` multiplies `s^{deg-i} t^i`; length `deg + 1`.
    coeffs: Vec<S>,
}

impl<S: FieldElement> BinaryForm<S> {
    pub fn new(deg: u32, coeffs: Vec<S>) -> Self {
        assert_eq!(coeffs.len(), deg as usize + 1);
        BinaryForm { deg, coeffs }
    }

    pub fn deg(&self) -> u32 {
        self.deg
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn linear(s: S, t: S) -> Self {
        BinaryForm::new(1, vec![s, t])
    }

    fn one(zero: &S) -> Self {
        BinaryForm::new(0, vec![zero.one_like()])
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; (self.deg + rhs.deg) as usize + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        BinaryForm::new(self.deg + rhs.deg, out)
    }

    fn add_assign(&mut self, rhs: &Self) {
        assert_eq!(self.deg, rhs.deg);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a = a.add(b);
        }
    }

    /// Dehomogenization at `s = 1`, a polynomial in `t`.
    pub fn affine_part(&self) -> UniPoly<S> {
        UniPoly::new(self.coeffs.clone(), self.coeffs[0].zero_like())
    }

    /// Multiplicity of the root `(s:t) = (0:1)`.
    pub fn multiplicity_at_infinity(&self) -> u32 {
        match self.coeffs.iter().rposition(|c| !c.is_zero()) {
            Some(i) => self.deg - i as u32,
            None => self.deg,
        }
    }

    /// Multiplicity of the root `(s:t) = (1:0)`.
    pub fn multiplicity_at_origin(&self) -> u32 {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.deg as usize) as u32
    }

    /// Multiplicity of the projective root `(s0:t0)`.
    pub fn root_multiplicity(&self, s0: &S, t0: &S) -> u32 {
        if self.is_zero() {
            return self.deg;
        }
        if s0.is_zero() {
            return self.multiplicity_at_infinity();
        }
        let r = t0.div(s0).expect("nonzero");
        let mut p = self.affine_part();
        let lin = UniPoly::new(vec![r.neg(), r.one_like()], r.zero_like());
        let mut k = 0;
        while !p.is_zero() {
            let (q, rem) = p.div_rem(&lin).expect("nonzero divisor");
            if !rem.is_zero() {
                break;
            }
            p = q;
            k += 1;
        }
        k
    }
}

/// Result of restricting a form to a line: the binary form together with the
/// parametrization `(s, t) -> point` used.
#[derive(Clone, Debug)]
pub struct Restriction<S: FieldElement> {
    pub form: BinaryForm<S>,
    /// `param[i] = (a_i, b_i)`: coordinate `i` of the point is `a_i s + b_i t`.
    pub param: [[S; 2]; 3],
    /// The line divides the form, so the restriction vanishes identically.
    pub contained: bool,
}

impl<S: FieldElement> Restriction<S> {
    /// Point of the plane with parameters `(s, t)`.
    pub fn point(&self, s: &S, t: &S) -> [S; 3] {
        let c = |i: usize| self.param[i][0].mul(s).add(&self.param[i][1].mul(t));
        [c(0), c(1), c(2)]
    }
}

/// Parametrization of the line `a x + b y + c z = 0`: if `c != 0` the points
/// are `(s, t, -(a s + b t)/c)`; else if `b != 0`, `(s, -(a s + c t)/b, t)`;
/// else `(0, s, t)`.
pub fn line_parametrization<S: FieldElement>(line: &[S; 3]) -> Result<[[S; 2]; 3], LineError> {
    let [a, b, c] = line;
    let zero = a.zero_like();
    let one = a.one_like();
    if !c.is_zero() {
        let ci = c.inv().expect("nonzero").neg();
        Ok([[one.clone(), zero.clone()], [zero, one], [a.mul(&ci), b.mul(&ci)]])
    } else if !b.is_zero() {
        let bi = b.inv().expect("nonzero").neg();
        Ok([[one.clone(), zero.clone()], [a.mul(&bi), c.mul(&bi)], [zero, one]])
    } else if !a.is_zero() {
        Ok([[zero.clone(), zero.clone()], [one.clone(), zero.clone()], [zero, one]])
    } else {
        Err(LineError::DegenerateLine)
    }
}

/// Restriction of `f` to the line with coefficient triple `line`.
pub fn restrict_to_line<S: FieldElement>(f: &HomPoly<S>, line: &[S; 3]) -> Result<Restriction<S>, LineError> {
    let param = line_parametrization(line)?;
    let zero = line[0].zero_like();
    let deg = f.deg();
    let powers: Vec<Vec<BinaryForm<S>>> = param
        .iter()
        .map(|[a, b]| {
            let l = BinaryForm::linear(a.clone(), b.clone());
            let mut v = vec![BinaryForm::one(&zero)];
            for k in 1..=deg as usize {
                let next = v[k - 1].mul(&l);
                v.push(next);
            }
            v
        })
        .collect();
    let mut form = BinaryForm::new(deg, vec![zero.clone(); deg as usize + 1]);
    for (e, c) in f.terms() {
        let mut t = powers[0][e[0] as usize]
            .mul(&powers[1][e[1] as usize])
            .mul(&powers[2][e[2] as usize]);
        for x in t.coeffs.iter_mut() {
            *x = x.mul(c);
        }
        form.add_assign(&t);
    }
    let contained = form.is_zero();
    Ok(Restriction { form, param, contained })
}
