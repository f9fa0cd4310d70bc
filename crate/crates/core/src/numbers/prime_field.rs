use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigUint;
use rand::Rng;

use super::{FieldElement, FiniteFieldElement, NumberError};

/// Census primes are drawn from this range.
pub const PRIME_RANGE: RangeInclusive<u64> = (1 << 20) + 1..=(1 << 31) - 1;

/// Element of `F_p` for an odd prime `p < 2^32`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    value: u64,
    p: u64,
}

impl Fp {
    pub fn new(value: i64, p: u64) -> Self {
        Fp {
            value: value.rem_euclid(p as i64) as u64,
            p,
        }
    }

    pub fn from_u64(value: u64, p: u64) -> Self {
        Fp { value: value % p, p }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

pub(crate) fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(p as i128) as u64)
}

impl FieldElement for Fp {
    fn zero_like(&self) -> Self {
        Fp { value: 0, p: self.p }
    }
    fn one_like(&self) -> Self {
        Fp { value: 1, p: self.p }
    }
    fn from_i64_like(&self, v: i64) -> Self {
        Fp::new(v, self.p)
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        let s = self.value + rhs.value;
        Fp {
            value: if s >= self.p { s - self.p } else { s },
            p: self.p,
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        Fp {
            value: if self.value >= rhs.value {
                self.value - rhs.value
            } else {
                self.value + self.p - rhs.value
            },
            p: self.p,
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        Fp {
            value: (self.value * rhs.value) % self.p,
            p: self.p,
        }
    }
    fn neg(&self) -> Self {
        Fp {
            value: if self.value == 0 { 0 } else { self.p - self.value },
            p: self.p,
        }
    }
    fn inv(&self) -> Result<Self, NumberError> {
        if self.value == 0 {
            return Err(NumberError::DivisionByZero);
        }
        let v = inv_mod(self.value, self.p).ok_or(NumberError::DivisionByZero)?;
        Ok(Fp { value: v, p: self.p })
    }
    fn same_field(&self, other: &Self) -> bool {
        self.p == other.p
    }
}

impl FiniteFieldElement for Fp {
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn order(&self) -> BigUint {
        BigUint::from(self.p)
    }
    fn random_like<R: Rng + ?Sized>(&self, rng: &mut R) -> Self {
        Fp {
            value: rng.gen_range(0..self.p),
            p: self.p,
        }
    }
    fn sort_key(&self) -> Vec<u64> {
        vec![self.value]
    }
}

fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u128;
    let mut base = (b % m) as u128;
    let m128 = m as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m128;
        }
        base = base * base % m128;
        e >>= 1;
    }
    acc as u64
}

/// Deterministic Miller-Rabin for all `n < 2^64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &q in &SMALL {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Uniformly random prime in [`PRIME_RANGE`].
pub fn draw_prime<R: Rng + ?Sized>(rng: &mut R) -> u64 {
    loop {
        let c = rng.gen_range(PRIME_RANGE) | 1;
        if is_prime_u64(c) {
            return c;
        }
    }
}
