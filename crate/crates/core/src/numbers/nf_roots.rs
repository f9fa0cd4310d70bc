//! Roots of univariate polynomials inside a number field, by p-adic lifting.
//!
//! A prime `p` is chosen at which the minimal polynomial splits into distinct
//! linear factors, so `K ⊗ Z_p` is a product of copies of `Z_p`. Every root
//! of `f` in `K` maps to a root of each image of `f`; the images are lifted by
//! Newton iteration, recombined through the Vandermonde matrix of the lifted
//! roots of the minimal polynomial, and rationally reconstructed. Candidates
//! are kept only after exact evaluation, so the result never contains a false
//! root; it can miss a root whose coordinates exceed the final precision.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::factor::roots_in_prime_field;
use super::{draw_prime, AlgebraicElement, FieldElement, Fp, NumberField, Rational, UniPoly};

const ROOT_SEED: u64 = 0x726f_6f74;
const MAX_PRIME_DRAWS: usize = 200;
const MAX_COMBINATIONS: usize = 4096;
/// Precision is doubled from one prime power up to roughly this many bits.
const MAX_BITS: u64 = 4096;

fn modinv(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let g = a.mod_floor(m).extended_gcd(m);
    g.gcd.is_one().then(|| g.x.mod_floor(m))
}

fn rational_mod(r: &Rational, m: &BigInt) -> Option<BigInt> {
    Some((r.numer() * modinv(r.denom(), m)?).mod_floor(m))
}

fn eval_mod(coeffs: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    coeffs
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
}

fn derivative(coeffs: &[BigInt]) -> Vec<BigInt> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect()
}

/// Newton lift of the simple root `x0` of `coeffs` from `p` to `m = p^k`.
fn lift(coeffs: &[BigInt], x0: u64, p: u64, m: &BigInt) -> Option<BigInt> {
    let d = derivative(coeffs);
    let mut x = BigInt::from(x0);
    let mut modulus = BigInt::from(p);
    while &modulus < m {
        modulus = (&modulus * &modulus).min(m.clone());
        let fx = eval_mod(coeffs, &x, &modulus);
        let dx = eval_mod(&d, &x, &modulus);
        x = (&x - fx * modinv(&dx, &modulus)?).mod_floor(&modulus);
    }
    Some(x)
}

/// Solves `V c = rho (mod m)` for the Vandermonde matrix of `alphas`.
fn solve_vandermonde(alphas: &[BigInt], rho: &[BigInt], m: &BigInt) -> Option<Vec<BigInt>> {
    let n = alphas.len();
    let mut a: Vec<Vec<BigInt>> = alphas
        .iter()
        .zip(rho)
        .map(|(al, r)| {
            let mut row: Vec<BigInt> = Vec::with_capacity(n + 1);
            let mut pw = BigInt::one();
            for _ in 0..n {
                row.push(pw.clone());
                pw = (pw * al).mod_floor(m);
            }
            row.push(r.clone());
            row
        })
        .collect();
    for c in 0..n {
        let piv = (c..n).find(|&r| modinv(&a[r][c], m).is_some())?;
        a.swap(c, piv);
        let inv = modinv(&a[c][c], m)?;
        for x in a[c].iter_mut() {
            *x = (&*x * &inv).mod_floor(m);
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for j in 0..=n {
                    let v = (&a[r][j] - &f * &a[c][j]).mod_floor(m);
                    a[r][j] = v;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n].clone()).collect())
}

struct Setup {
    p: u64,
    /// Roots of the minimal polynomial mod `p`, one per embedding.
    alpha0: Vec<u64>,
    /// Roots of each image of `f` mod `p`.
    images: Vec<Vec<u64>>,
}

/// A prime where the minimal polynomial splits into distinct roots and every
/// image of the squarefree `f` stays squarefree of full degree.
fn find_setup(field: &NumberField, f: &UniPoly<AlgebraicElement>) -> Option<Setup> {
    let n = field.degree();
    let deg = f.degree()?;
    let mut rng = ChaCha8Rng::seed_from_u64(ROOT_SEED);
    'draw: for _ in 0..MAX_PRIME_DRAWS {
        let p = draw_prime(&mut rng);
        let Ok(alpha0) = field.roots_mod_p(p) else { continue };
        if alpha0.len() != n {
            continue;
        }
        let mut images = Vec::with_capacity(n);
        for &al in &alpha0 {
            let zero = Fp::new(0, p);
            let mut cs = Vec::with_capacity(deg + 1);
            for c in f.coeffs() {
                let mut acc = zero;
                for r in c.coords().iter().rev() {
                    let Some(v) = r.mod_p(p) else { continue 'draw };
                    acc = acc.mul(&Fp::from_u64(al, p)).add(&Fp::from_u64(v, p));
                }
                cs.push(acc);
            }
            let img = UniPoly::new(cs, zero);
            if img.degree() != Some(deg) || img.gcd(&img.derivative()).degree() != Some(0) {
                continue 'draw;
            }
            images.push(roots_in_prime_field(&img).into_iter().map(|r| r.value()).collect());
        }
        return Some(Setup { p, alpha0, images });
    }
    None
}

fn squarefree_part(f: &UniPoly<AlgebraicElement>) -> UniPoly<AlgebraicElement> {
    let g = f.gcd(&f.derivative());
    f.div_rem(&g).expect("nonzero gcd").0.monic()
}

fn multiplicity(f: &UniPoly<AlgebraicElement>, r: &AlgebraicElement) -> usize {
    let lin = UniPoly::new(vec![r.neg(), r.one_like()], r.zero_like());
    let mut p = f.clone();
    let mut k = 0;
    loop {
        let (q, rem) = p.div_rem(&lin).expect("nonzero divisor");
        if !rem.is_zero() {
            return k;
        }
        p = q;
        k += 1;
    }
}

/// Roots of `f` lying in its coefficient field, with multiplicities, in the
/// order they were found. Every returned root is exact; roots of very large
/// height may be missed, so callers must check the total multiplicity.
pub fn roots_in_number_field(f: &UniPoly<AlgebraicElement>) -> Vec<(AlgebraicElement, usize)> {
    let Some(deg) = f.degree() else { return Vec::new() };
    if deg == 0 {
        return Vec::new();
    }
    let field: Arc<NumberField> = f.zero_scalar().field().clone();
    let n = field.degree();
    let sf = squarefree_part(f);
    let sf_deg = sf.degree().unwrap_or(0);
    let mut found: Vec<AlgebraicElement> = Vec::new();
    if sf_deg == 1 {
        found.push(sf.coeff(0).neg());
    } else if let Some(setup) = find_setup(&field, &sf) {
        let combos: usize = setup.images.iter().map(|r| r.len().max(1)).product();
        if combos == 0 || combos > MAX_COMBINATIONS || setup.images.iter().any(|r| r.is_empty()) {
            return collect(f, found);
        }
        let p = setup.p;
        let pb = BigInt::from(p);
        let mut k: u32 = 2;
        while found.len() < sf_deg && (k as u64) * 31 <= MAX_BITS {
            let m = pb.pow(k);
            let Some(minpoly_m) = field
                .minpoly()
                .iter()
                .map(|c| rational_mod(c, &m))
                .collect::<Option<Vec<BigInt>>>()
            else {
                break;
            };
            let Some(alphas) = setup
                .alpha0
                .iter()
                .map(|&a| lift(&minpoly_m, a, p, &m))
                .collect::<Option<Vec<BigInt>>>()
            else {
                break;
            };
            // Images of sf under each embedding, lifted roots.
            let mut lifted: Vec<Vec<BigInt>> = Vec::with_capacity(n);
            for (i, al) in alphas.iter().enumerate() {
                let Some(coeffs) = sf
                    .coeffs()
                    .iter()
                    .map(|c| {
                        let cs: Option<Vec<BigInt>> = c.coords().iter().map(|r| rational_mod(r, &m)).collect();
                        cs.map(|cs| eval_mod(&cs, al, &m))
                    })
                    .collect::<Option<Vec<BigInt>>>()
                else {
                    return collect(f, found);
                };
                let roots: Option<Vec<BigInt>> = setup.images[i].iter().map(|&r| lift(&coeffs, r, p, &m)).collect();
                let Some(roots) = roots else { return collect(f, found) };
                lifted.push(roots);
            }
            for idx in 0..combos {
                let mut rest = idx;
                let rho: Vec<BigInt> = lifted
                    .iter()
                    .map(|rs| {
                        let r = rs[rest % rs.len()].clone();
                        rest /= rs.len();
                        r
                    })
                    .collect();
                let Some(c) = solve_vandermonde(&alphas, &rho, &m) else {
                    continue;
                };
                let Some(coords) = c
                    .iter()
                    .map(|x| Rational::reconstruct_big(x, &m))
                    .collect::<Option<Vec<Rational>>>()
                else {
                    continue;
                };
                let Ok(beta) = field.element(coords) else { continue };
                if !found.contains(&beta) && sf.eval(&beta).is_zero() {
                    found.push(beta);
                }
            }
            k *= 2;
        }
    }
    collect(f, found)
}

fn collect(f: &UniPoly<AlgebraicElement>, found: Vec<AlgebraicElement>) -> Vec<(AlgebraicElement, usize)> {
    found
        .into_iter()
        .map(|r| {
            let k = multiplicity(f, &r);
            (r, k)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(field: &Arc<NumberField>, cs: &[AlgebraicElement]) -> UniPoly<AlgebraicElement> {
        UniPoly::new(cs.to_vec(), field.zero())
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        let k = NumberField::rationals();
        let q = |a: i64, b: i64| k.from_rational(Rational::frac(a, b));
        // (t - 2/3)^2 (t + 5) (t^2 + 1)
        let f = poly(&k, &[q(-2, 3), q(1, 1)])
            .mul(&poly(&k, &[q(-2, 3), q(1, 1)]))
            .mul(&poly(&k, &[q(5, 1), q(1, 1)]))
            .mul(&poly(&k, &[q(1, 1), q(0, 1), q(1, 1)]));
        let mut roots = roots_in_number_field(&f);
        roots.sort_by(|a, b| a.0.coords().cmp(b.0.coords()));
        assert_eq!(roots, vec![(q(-5, 1), 1), (q(2, 3), 2)]);
    }

    #[test]
    fn square_roots_in_quadratic_field() {
        let k = NumberField::from_i64s(&[-3, 0, 1], "sqrt3").unwrap();
        let a = k.generator();
        let q = |v: i64| k.from_rational(Rational::from_int(v));
        // t^2 - 12 has roots ±2a; t^2 + 1 has none.
        let f = poly(&k, &[q(-12), q(0), q(1)]).mul(&poly(&k, &[q(1), q(0), q(1)]));
        let roots = roots_in_number_field(&f);
        assert_eq!(roots.len(), 2);
        for (r, e) in &roots {
            assert_eq!(*e, 1);
            assert_eq!(r.mul(r), q(12));
        }
        assert!(roots.iter().any(|(r, _)| *r == a.mul(&q(2))));
        // t - (1/7 + 3a/5) appears once.
        let beta = q(1).div(&q(7)).unwrap().add(&a.mul(&q(3).div(&q(5)).unwrap()));
        let g = poly(&k, &[beta.neg(), q(1)]).mul(&poly(&k, &[q(2), q(0), q(1)]));
        assert_eq!(roots_in_number_field(&g), vec![(beta, 1)]);
    }

    #[test]
    fn cube_roots_of_unity() {
        let k = NumberField::from_i64s(&[1, 1, 1], "omega").unwrap();
        let q = |v: i64| k.from_rational(Rational::from_int(v));
        let f = poly(&k, &[q(-1), q(0), q(0), q(1)]);
        let roots = roots_in_number_field(&f);
        assert_eq!(roots.len(), 3);
        for (r, _) in &roots {
            assert!(r.pow_u64(3).is_one());
        }
    }
}
