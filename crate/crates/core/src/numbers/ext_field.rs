use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use rand::Rng;

use super::factor::is_irreducible;
use super::{FieldElement, FiniteFieldElement, Fp, NumberError, UniPoly};

/// `F_{p^k}` presented as `F_p[x]/(modulus)` with a monic irreducible modulus.
#[derive(Clone, PartialEq, Eq)]
pub struct ExtField {
    p: u64,
    /// Monic modulus, ascending coefficients, length `k + 1`.
    modulus: Vec<u64>,
}

impl fmt::Debug for ExtField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{}", self.p, self.degree())
    }
}

impl ExtField {
    /// Builds the field from an explicit modulus, checking irreducibility.
    pub fn with_modulus(modulus: &UniPoly<Fp>) -> Result<Arc<Self>, NumberError> {
        let p = modulus.zero_scalar().modulus();
        if modulus.degree().unwrap_or(0) < 1 || !is_irreducible(modulus) {
            return Err(NumberError::InvalidField(format!(
                "modulus {modulus:?} is not irreducible over F_{p}"
            )));
        }
        let m = modulus.monic();
        Ok(Arc::new(ExtField {
            p,
            modulus: m.coeffs().iter().map(|c| c.value()).collect(),
        }))
    }

    /// Random monic irreducible modulus of degree `k`.
    pub fn random<R: Rng + ?Sized>(p: u64, k: usize, rng: &mut R) -> Arc<Self> {
        let zero = Fp::new(0, p);
        loop {
            let mut cs: Vec<Fp> = (0..k).map(|_| zero.random_like(rng)).collect();
            cs.push(zero.one_like());
            let cand = UniPoly::new(cs, zero);
            if k == 1 || is_irreducible(&cand) {
                return Arc::new(ExtField {
                    p,
                    modulus: cand.coeffs().iter().map(|c| c.value()).collect(),
                });
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus_poly(&self) -> UniPoly<Fp> {
        let zero = Fp::new(0, self.p);
        UniPoly::new(self.modulus.iter().map(|&c| Fp::from_u64(c, self.p)).collect(), zero)
    }

    pub fn zero(self: &Arc<Self>) -> FpExt {
        FpExt {
            coords: vec![0; self.degree()],
            field: Arc::clone(self),
        }
    }

    pub fn one(self: &Arc<Self>) -> FpExt {
        self.embed(1)
    }

    /// Embedding of a base-field value.
    pub fn embed(self: &Arc<Self>, v: u64) -> FpExt {
        let mut coords = vec![0; self.degree()];
        coords[0] = v % self.p;
        FpExt {
            coords,
            field: Arc::clone(self),
        }
    }

    pub fn embed_fp(self: &Arc<Self>, v: &Fp) -> FpExt {
        debug_assert_eq!(v.modulus(), self.p);
        self.embed(v.value())
    }

    /// The class of `x`, a generator of the extension.
    pub fn generator(self: &Arc<Self>) -> FpExt {
        let mut e = self.zero();
        if self.degree() == 1 {
            e.coords[0] = (self.p - self.modulus[0]) % self.p;
        } else {
            e.coords[1] = 1;
        }
        e
    }

    pub fn from_coords(self: &Arc<Self>, coords: Vec<u64>) -> FpExt {
        assert_eq!(coords.len(), self.degree());
        FpExt {
            coords: coords.into_iter().map(|c| c % self.p).collect(),
            field: Arc::clone(self),
        }
    }

    fn reduce(&self, mut prod: Vec<u64>) -> Vec<u64> {
        let k = self.degree();
        let p = self.p;
        for i in (k..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            // x^k = -(m_0 + ... + m_{k-1} x^{k-1})
            for j in 0..k {
                let t = (c * self.modulus[j]) % p;
                let idx = i - k + j;
                prod[idx] = (prod[idx] + p - t) % p;
            }
            prod[i] = 0;
        }
        prod.truncate(k);
        prod
    }
}

/// Element of `F_{p^k}` in the power basis of its [`ExtField`].
#[derive(Clone)]
pub struct FpExt {
    coords: Vec<u64>,
    field: Arc<ExtField>,
}

impl FpExt {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn field(&self) -> &Arc<ExtField> {
        &self.field
    }

    /// `Some(v)` when the element lies in the prime field.
    pub fn as_base(&self) -> Option<u64> {
        if self.coords[1..].iter().all(|&c| c == 0) {
            Some(self.coords[0])
        } else {
            None
        }
    }

    /// `self^p`.
    pub fn frobenius(&self) -> Self {
        self.pow_u64(self.field.p)
    }

    fn as_poly(&self) -> UniPoly<Fp> {
        let p = self.field.p;
        UniPoly::new(self.coords.iter().map(|&c| Fp::from_u64(c, p)).collect(), Fp::new(0, p))
    }
}

impl PartialEq for FpExt {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && self.field == other.field
    }
}

impl Eq for FpExt {}

impl fmt::Debug for FpExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_base() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "{:?}", self.coords),
        }
    }
}

impl FieldElement for FpExt {
    fn zero_like(&self) -> Self {
        self.field.zero()
    }
    fn one_like(&self) -> Self {
        self.field.one()
    }
    fn from_i64_like(&self, v: i64) -> Self {
        self.field.embed(v.rem_euclid(self.field.p as i64) as u64)
    }
    fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
    fn add(&self, rhs: &Self) -> Self {
        let p = self.field.p;
        let coords = self
            .coords
            .iter()
            .zip(&rhs.coords)
            .map(|(a, b)| {
                let s = a + b;
                if s >= p {
                    s - p
                } else {
                    s
                }
            })
            .collect();
        FpExt {
            coords,
            field: Arc::clone(&self.field),
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        let p = self.field.p;
        let coords = self
            .coords
            .iter()
            .zip(&rhs.coords)
            .map(|(a, b)| if a >= b { a - b } else { a + p - b })
            .collect();
        FpExt {
            coords,
            field: Arc::clone(&self.field),
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        let k = self.field.degree();
        let p = self.field.p;
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &a) in self.coords.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coords.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a * b % p) % p;
            }
        }
        FpExt {
            coords: self.field.reduce(prod),
            field: Arc::clone(&self.field),
        }
    }
    fn neg(&self) -> Self {
        let p = self.field.p;
        FpExt {
            coords: self.coords.iter().map(|&c| if c == 0 { 0 } else { p - c }).collect(),
            field: Arc::clone(&self.field),
        }
    }
    fn inv(&self) -> Result<Self, NumberError> {
        if self.is_zero() {
            return Err(NumberError::DivisionByZero);
        }
        let (g, s, _) = self.as_poly().xgcd(&self.field.modulus_poly());
        if g.degree() != Some(0) {
            return Err(NumberError::DivisionByZero);
        }
        let mut coords: Vec<u64> = s.coeffs().iter().map(|c| c.value()).collect();
        coords.resize(self.field.degree(), 0);
        Ok(FpExt {
            coords,
            field: Arc::clone(&self.field),
        })
    }
    fn same_field(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || self.field == other.field
    }
}

impl FiniteFieldElement for FpExt {
    fn characteristic(&self) -> u64 {
        self.field.p
    }
    fn order(&self) -> BigUint {
        BigUint::from(self.field.p).pow(self.field.degree() as u32)
    }
    fn random_like<R: Rng + ?Sized>(&self, rng: &mut R) -> Self {
        let p = self.field.p;
        FpExt {
            coords: (0..self.field.degree()).map(|_| rng.gen_range(0..p)).collect(),
            field: Arc::clone(&self.field),
        }
    }
    fn sort_key(&self) -> Vec<u64> {
        self.coords.clone()
    }
}
