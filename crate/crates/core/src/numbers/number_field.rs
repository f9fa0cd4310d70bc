use std::fmt;
use std::sync::Arc;

use super::factor::roots_in_prime_field;
use super::{FieldElement, Fp, NumberError, Rational, UniPoly};

/// `Q[a]/(minpoly)`. The minimal polynomial is required to be monic and
/// squarefree; irreducibility is the caller's responsibility.
#[derive(Clone, PartialEq, Eq)]
pub struct NumberField {
    minpoly: Vec<Rational>,
    label: String,
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField({})", self.label)
    }
}

impl NumberField {
    /// `minpoly` lists coefficients in ascending degree order.
    pub fn new(minpoly: Vec<Rational>, label: impl Into<String>) -> Result<Arc<Self>, NumberError> {
        let poly = UniPoly::new(minpoly.clone(), Rational::zero());
        match poly.degree() {
            None | Some(0) => return Err(NumberError::InvalidField("minpoly must have degree >= 1".into())),
            Some(n) if n + 1 != minpoly.len() => {
                return Err(NumberError::InvalidField(
                    "minpoly has trailing zero coefficients".into(),
                ))
            }
            _ => {}
        }
        if !poly.leading().is_some_and(|c| c.is_one()) {
            return Err(NumberError::InvalidField("minpoly must be monic".into()));
        }
        if poly.gcd(&poly.derivative()).degree() != Some(0) {
            return Err(NumberError::InvalidField("minpoly is not squarefree".into()));
        }
        Ok(Arc::new(NumberField {
            minpoly,
            label: label.into(),
        }))
    }

    /// The rationals, presented as `Q[a]/(a)`.
    pub fn rationals() -> Arc<Self> {
        Arc::new(NumberField {
            minpoly: vec![Rational::zero(), Rational::one()],
            label: "Q".into(),
        })
    }

    pub fn from_i64s(minpoly: &[i64], label: impl Into<String>) -> Result<Arc<Self>, NumberError> {
        Self::new(minpoly.iter().map(|&c| Rational::from_int(c)).collect(), label)
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }

    pub fn minpoly(&self) -> &[Rational] {
        &self.minpoly
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn element(self: &Arc<Self>, coords: Vec<Rational>) -> Result<AlgebraicElement, NumberError> {
        if coords.len() != self.degree() {
            return Err(NumberError::InvalidField(format!(
                "expected {} coordinates, got {}",
                self.degree(),
                coords.len()
            )));
        }
        Ok(AlgebraicElement {
            field: Arc::clone(self),
            coords,
        })
    }

    pub fn from_rational(self: &Arc<Self>, r: Rational) -> AlgebraicElement {
        let mut coords = vec![Rational::zero(); self.degree()];
        coords[0] = r;
        AlgebraicElement {
            field: Arc::clone(self),
            coords,
        }
    }

    pub fn zero(self: &Arc<Self>) -> AlgebraicElement {
        self.from_rational(Rational::zero())
    }

    pub fn one(self: &Arc<Self>) -> AlgebraicElement {
        self.from_rational(Rational::one())
    }

    /// The class of `a`.
    pub fn generator(self: &Arc<Self>) -> AlgebraicElement {
        if self.degree() == 1 {
            return self.from_rational(self.minpoly[0].neg());
        }
        let mut e = self.zero();
        e.coords[1] = Rational::one();
        e
    }

    fn minpoly_poly(&self) -> UniPoly<Rational> {
        UniPoly::new(self.minpoly.clone(), Rational::zero())
    }

    /// Roots of the minimal polynomial in `F_p`, ascending.
    pub fn roots_mod_p(&self, p: u64) -> Result<Vec<u64>, NumberError> {
        let zero = Fp::new(0, p);
        let mut cs = Vec::with_capacity(self.minpoly.len());
        for c in &self.minpoly {
            let v = c.mod_p(p).ok_or_else(|| NumberError::BadPrime {
                p,
                reason: "divides a minpoly denominator".into(),
            })?;
            cs.push(Fp::from_u64(v, p));
        }
        let mut roots: Vec<u64> = roots_in_prime_field(&UniPoly::new(cs, zero))
            .into_iter()
            .map(|r| r.value())
            .collect();
        roots.sort_unstable();
        Ok(roots)
    }

    /// Homomorphism to `F_p` sending `a` to the `root_choice`-th root (ascending).
    pub fn reduction(self: &Arc<Self>, p: u64, root_choice: usize) -> Result<Reduction, NumberError> {
        let roots = self.roots_mod_p(p)?;
        let root = *roots.get(root_choice).ok_or_else(|| NumberError::BadPrime {
            p,
            reason: if roots.is_empty() {
                "minpoly has no root mod p".into()
            } else {
                format!("minpoly has only {} roots mod p", roots.len())
            },
        })?;
        Ok(Reduction {
            field: Arc::clone(self),
            p,
            root: Fp::from_u64(root, p),
        })
    }
}

/// A fixed ring homomorphism `K -> F_p`.
#[derive(Clone, Debug)]
pub struct Reduction {
    field: Arc<NumberField>,
    p: u64,
    root: Fp,
}

impl Reduction {
    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn root(&self) -> Fp {
        self.root
    }

    pub fn reduce(&self, x: &AlgebraicElement) -> Result<Fp, NumberError> {
        if !x.same_field(&AlgebraicElement::zero_of(&self.field)) {
            return Err(NumberError::FieldMismatch);
        }
        let mut acc = Fp::new(0, self.p);
        for c in x.coords.iter().rev() {
            let v = c.mod_p(self.p).ok_or_else(|| NumberError::BadPrime {
                p: self.p,
                reason: format!("divides the denominator of {c}"),
            })?;
            acc = acc.mul(&self.root).add(&Fp::from_u64(v, self.p));
        }
        Ok(acc)
    }

    pub fn reduce_rational(&self, r: &Rational) -> Result<Fp, NumberError> {
        r.mod_p(self.p)
            .map(|v| Fp::from_u64(v, self.p))
            .ok_or_else(|| NumberError::BadPrime {
                p: self.p,
                reason: format!("divides the denominator of {r}"),
            })
    }
}

/// Element of a [`NumberField`] in the power basis `1, a, ..., a^(n-1)`.
#[derive(Clone)]
pub struct AlgebraicElement {
    field: Arc<NumberField>,
    coords: Vec<Rational>,
}

impl AlgebraicElement {
    pub fn zero_of(field: &Arc<NumberField>) -> Self {
        field.zero()
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// `Some(r)` when the element is rational.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    /// Reduction through the `root_choice`-th root of the minpoly mod `p`.
    pub fn reduce_mod_p(&self, p: u64, root_choice: usize) -> Result<Fp, NumberError> {
        self.field.reduction(p, root_choice)?.reduce(self)
    }

    fn as_poly(&self) -> UniPoly<Rational> {
        UniPoly::new(self.coords.clone(), Rational::zero())
    }

    fn from_poly(field: &Arc<NumberField>, p: &UniPoly<Rational>) -> Self {
        let n = field.degree();
        let mut coords: Vec<Rational> = p.coeffs().to_vec();
        coords.resize(n, Rational::zero());
        AlgebraicElement {
            field: Arc::clone(field),
            coords,
        }
    }
}

impl PartialEq for AlgebraicElement {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && self.same_field(other)
    }
}

impl Eq for AlgebraicElement {}

impl fmt::Debug for AlgebraicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let terms: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})a"),
                _ => format!("({c})a^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl FieldElement for AlgebraicElement {
    fn zero_like(&self) -> Self {
        self.field.zero()
    }
    fn one_like(&self) -> Self {
        self.field.one()
    }
    fn from_i64_like(&self, v: i64) -> Self {
        self.field.from_rational(Rational::from_int(v))
    }
    fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
    fn add(&self, rhs: &Self) -> Self {
        AlgebraicElement {
            field: Arc::clone(&self.field),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a.add(b)).collect(),
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        AlgebraicElement {
            field: Arc::clone(&self.field),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a.sub(b)).collect(),
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.field.degree() == 1 {
            return AlgebraicElement {
                field: Arc::clone(&self.field),
                coords: vec![self.coords[0].mul(&rhs.coords[0])],
            };
        }
        let prod = self.as_poly().mul(&rhs.as_poly());
        let r = prod.rem(&self.field.minpoly_poly()).expect("minpoly is nonzero");
        Self::from_poly(&self.field, &r)
    }
    fn neg(&self) -> Self {
        AlgebraicElement {
            field: Arc::clone(&self.field),
            coords: self.coords.iter().map(|c| c.neg()).collect(),
        }
    }
    fn inv(&self) -> Result<Self, NumberError> {
        if self.is_zero() {
            return Err(NumberError::DivisionByZero);
        }
        if self.field.degree() == 1 {
            return Ok(self.field.from_rational(self.coords[0].inv()?));
        }
        let (g, s, _) = self.as_poly().xgcd(&self.field.minpoly_poly());
        if g.degree() != Some(0) {
            // Zero divisor: the minpoly is reducible.
            return Err(NumberError::DivisionByZero);
        }
        Ok(Self::from_poly(&self.field, &s))
    }
    fn same_field(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || self.field.minpoly == other.field.minpoly
    }
}
