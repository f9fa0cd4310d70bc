//! Exact scalar arithmetic: rationals, number fields, prime fields and their
//! extensions, plus univariate polynomial factorization over prime fields.
//!
//! Every scalar type implements [`FieldElement`]. Elements carry their field
//! (modulus, minimal polynomial, extension modulus) so that generic code can
//! build zeros and ones without a separate context object.

mod ext_field;
mod factor;
mod nf_roots;
mod number_field;
mod prime_field;
mod rational;
mod unipoly;

use std::fmt;

use num_bigint::BigUint;
use rand::Rng;
use thiserror::Error;

pub use ext_field::{ExtField, FpExt};
pub use factor::{
    distinct_degree_factorization, ext_roots, factor_univariate, is_irreducible, roots_in_field,
    squarefree_factorization,
};
pub use nf_roots::roots_in_number_field;
pub use number_field::{AlgebraicElement, NumberField, Reduction};
pub use prime_field::{draw_prime, is_prime_u64, Fp, PRIME_RANGE};
pub use rational::Rational;
pub use unipoly::UniPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumberError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("bad prime {p}: {reason}")]
    BadPrime { p: u64, reason: String },
    #[error("invalid number field: {0}")]
    InvalidField(String),
    #[error("cannot parse rational `{0}`")]
    Parse(String),
}

/// Common interface of all exact scalar types.
///
/// Binary operations assume both operands live in the same field; the
/// `try_*` variants check this and report [`NumberError::FieldMismatch`].
pub trait FieldElement: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_i64_like(&self, v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self, NumberError>;
    fn same_field(&self, other: &Self) -> bool;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn div(&self, rhs: &Self) -> Result<Self, NumberError> {
        Ok(self.mul(&rhs.inv()?))
    }

    fn pow_u64(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    fn try_add(&self, rhs: &Self) -> Result<Self, NumberError> {
        self.check_field(rhs)?;
        Ok(self.add(rhs))
    }

    fn try_sub(&self, rhs: &Self) -> Result<Self, NumberError> {
        self.check_field(rhs)?;
        Ok(self.sub(rhs))
    }

    fn try_mul(&self, rhs: &Self) -> Result<Self, NumberError> {
        self.check_field(rhs)?;
        Ok(self.mul(rhs))
    }

    fn try_div(&self, rhs: &Self) -> Result<Self, NumberError> {
        self.check_field(rhs)?;
        self.div(rhs)
    }

    fn check_field(&self, rhs: &Self) -> Result<(), NumberError> {
        if self.same_field(rhs) {
            Ok(())
        } else {
            Err(NumberError::FieldMismatch)
        }
    }
}

/// Finite fields: prime fields and their extensions.
pub trait FiniteFieldElement: FieldElement {
    fn characteristic(&self) -> u64;
    /// Number of elements of the field.
    fn order(&self) -> BigUint;
    fn random_like<R: Rng + ?Sized>(&self, rng: &mut R) -> Self;
    /// Coordinates over the prime field, used for deterministic ordering.
    fn sort_key(&self) -> Vec<u64>;
    /// Raise to an arbitrary-precision exponent.
    fn pow_big(&self, e: &BigUint) -> Self {
        let mut acc = self.one_like();
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc);
            if e.bit(i) {
                acc = acc.mul(self);
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests;
