//! Exact syzygies of minimal degree.
//!
//! Over `Q` the canonical kernel vector (normalized to 1 in the first free
//! column of the reduced echelon form) is computed modulo many primes and
//! lifted by Chinese remaindering and rational reconstruction. Over a larger
//! number field the kernel is computed directly. Either way the result is
//! only returned after exact verification.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{syzygy_matrix, verify_syzygy, Syzygy};
use crate::linalg::Echelon;
use crate::numbers::{draw_prime, AlgebraicElement, FieldElement, Fp, NumberError, Rational};
use crate::poly::{monomial_basis, HomPoly};

const MAX_PRIMES: usize = 400;
const WITNESS_SEED_SALT: u64 = 0x5157_4e45_5353;

/// Reduction of `f` modulo `p` through the first root of the minimal
/// polynomial; `None` when `p` is bad for `f`.
pub(super) fn reduce_form(f: &HomPoly<AlgebraicElement>, p: u64) -> Result<Option<HomPoly<Fp>>, NumberError> {
    let red = match f.zero_scalar().field().reduction(p, 0) {
        Ok(r) => r,
        Err(NumberError::BadPrime { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    match f.try_map(Fp::new(0, p), |c| red.reduce(c)) {
        Ok(fp) if fp.num_terms() == f.num_terms() => Ok(Some(fp)),
        Ok(_) | Err(NumberError::BadPrime { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

fn to_syzygy(f: &HomPoly<AlgebraicElement>, r: u32, v: &[AlgebraicElement]) -> Syzygy {
    let basis = monomial_basis(r);
    let n = basis.len();
    let zero = f.zero_scalar().clone();
    let comp = |i: usize| {
        HomPoly::from_terms(
            r,
            zero.clone(),
            basis.iter().enumerate().map(|(j, e)| (v[i * n + j].clone(), *e)),
        )
    };
    [comp(0), comp(1), comp(2)]
}

fn exact_witness(f: &HomPoly<AlgebraicElement>, r: u32) -> Option<Syzygy> {
    let a = syzygy_matrix(f, r);
    let ncols = 3 * monomial_basis(r).len();
    let mut e = Echelon::new(ncols, f.zero_scalar().clone());
    for row in a {
        e.insert(row);
    }
    let v = e.null_space().into_iter().next()?;
    let w = to_syzygy(f, r, &v);
    verify_syzygy(f, &w).then_some(w)
}

/// Kernel data modulo one prime: pivot columns and the canonical vector.
fn modular_kernel(fp: &HomPoly<Fp>, r: u32, p: u64) -> Option<(Vec<usize>, Vec<u64>)> {
    let a = syzygy_matrix(fp, r);
    let ncols = 3 * monomial_basis(r).len();
    let mut e = Echelon::new(ncols, Fp::new(0, p));
    for row in a {
        e.insert(row);
    }
    let v = e.null_space().into_iter().next()?;
    Some((e.pivots(), v.iter().map(|x| x.value()).collect()))
}

/// Pivot sets of the true (rational) echelon form are preferred: higher
/// rank first, then lexicographically earlier pivots.
fn better_pattern(a: &[usize], b: &[usize]) -> bool {
    a.len() > b.len() || (a.len() == b.len() && a < b)
}

fn crt_witness(f: &HomPoly<AlgebraicElement>, r: u32, seed: u64) -> Option<Syzygy> {
    let field = f.zero_scalar().field().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ WITNESS_SEED_SALT);
    let mut pattern: Option<Vec<usize>> = None;
    let mut residues: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    for _ in 0..MAX_PRIMES {
        let p = draw_prime(&mut rng);
        let Ok(Some(fp)) = reduce_form(f, p) else { continue };
        let Some((piv, v)) = modular_kernel(&fp, r, p) else {
            continue;
        };
        match &pattern {
            Some(cur) if *cur == piv => {}
            Some(cur) if !better_pattern(&piv, cur) => continue,
            _ => {
                pattern = Some(piv);
                residues = vec![BigInt::zero(); v.len()];
                modulus = BigInt::one();
            }
        }
        let pb = BigInt::from(p);
        let m_inv = Fp::from_u64((&modulus % &pb).try_into().expect("fits"), p)
            .inv()
            .expect("coprime moduli")
            .value();
        for (x, &b) in residues.iter_mut().zip(&v) {
            let a_mod = (&*x % &pb).try_into().unwrap_or(0u64);
            let t = Fp::from_u64(b, p).sub(&Fp::from_u64(a_mod, p)).value();
            let k = (BigInt::from(t) * m_inv).mod_floor(&pb);
            *x += &modulus * k;
        }
        modulus *= &pb;
        let coords: Option<Vec<Rational>> = residues
            .iter()
            .map(|x| Rational::reconstruct_big(x, &modulus))
            .collect();
        if let Some(c) = coords {
            let v: Vec<AlgebraicElement> = c.into_iter().map(|q| field.from_rational(q)).collect();
            let w = to_syzygy(f, r, &v);
            if verify_syzygy(f, &w) {
                return Some(w);
            }
        }
    }
    None
}

/// Nonzero exact syzygy of degree `r`, verified by multiplication.
pub(super) fn find_witness(f: &HomPoly<AlgebraicElement>, r: u32, seed: u64) -> Option<Syzygy> {
    if f.zero_scalar().field().is_rational() {
        crt_witness(f, r, seed).or_else(|| exact_witness(f, r))
    } else {
        exact_witness(f, r)
    }
}
