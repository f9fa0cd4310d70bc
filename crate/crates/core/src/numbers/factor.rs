//! Factorization of univariate polynomials over finite fields: squarefree
//! decomposition, distinct-degree splitting, and Cantor-Zassenhaus
//! equal-degree splitting.

use std::sync::Arc;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ExtField, FieldElement, FiniteFieldElement, Fp, FpExt, UniPoly};

/// Seed of the equal-degree splitter. The splitting only affects speed; the
/// returned factor lists are sorted.
const SPLIT_SEED: u64 = 0x636c_6c5f;

fn one_poly<S: FieldElement>(zero: &S) -> UniPoly<S> {
    UniPoly::constant(zero.one_like())
}

fn exact_div<S: FieldElement>(a: &UniPoly<S>, b: &UniPoly<S>) -> UniPoly<S> {
    let (q, r) = a.div_rem(b).expect("nonzero divisor");
    debug_assert!(r.is_zero());
    q
}

/// `f` with every coefficient replaced by its `p`-th root; requires `f' = 0`.
fn pth_root<S: FiniteFieldElement>(f: &UniPoly<S>) -> UniPoly<S> {
    let zero = f.zero_scalar().clone();
    let p = zero.characteristic() as usize;
    let e = zero.order() / BigUint::from(p);
    let cs = f.coeffs().iter().step_by(p).map(|c| c.pow_big(&e)).collect();
    UniPoly::new(cs, zero)
}

/// Squarefree decomposition `f = lc * prod g_i^{e_i}` with monic, pairwise
/// coprime, squarefree `g_i`. Factors are returned in increasing multiplicity.
pub fn squarefree_factorization<S: FiniteFieldElement>(f: &UniPoly<S>) -> Vec<(UniPoly<S>, usize)> {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let zero = f.zero_scalar().clone();
    let one = one_poly(&zero);
    let f = f.monic();
    let mut out = Vec::new();
    let mut c = f.gcd(&f.derivative());
    let mut w = exact_div(&f, &c);
    let mut i = 1;
    while w.degree() != Some(0) {
        let y = w.gcd(&c);
        let z = exact_div(&w, &y);
        if z.degree().unwrap_or(0) > 0 {
            out.push((z, i));
        }
        i += 1;
        c = exact_div(&c, &y);
        w = y;
    }
    if c != one {
        let p = zero.characteristic() as usize;
        for (g, j) in squarefree_factorization(&pth_root(&c)) {
            out.push((g, j * p));
        }
        out.sort_by_key(|(_, e)| *e);
    }
    out
}

/// Splits a monic squarefree `f` into products of irreducibles of equal
/// degree, returned as `(product, degree)` pairs.
pub fn distinct_degree_factorization<S: FiniteFieldElement>(f: &UniPoly<S>) -> Vec<(UniPoly<S>, usize)> {
    let zero = f.zero_scalar().clone();
    let q = zero.order();
    let x = UniPoly::x(zero.clone());
    let mut rest = f.monic();
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut d = 0;
    while let Some(n) = rest.degree() {
        if n == 0 {
            break;
        }
        d += 1;
        if 2 * d > n {
            out.push((rest.clone(), n));
            break;
        }
        h = h.pow_mod_big(&q, &rest);
        let g = h.sub(&x).gcd(&rest);
        if g.degree().unwrap_or(0) > 0 {
            rest = exact_div(&rest, &g);
            h = h.rem(&rest).expect("nonzero modulus");
            out.push((g, d));
        }
    }
    out
}

/// Cantor-Zassenhaus: splits a monic product of distinct irreducibles of
/// degree `d` into its factors (odd characteristic).
fn equal_degree_split<S: FiniteFieldElement, R: Rng>(f: &UniPoly<S>, d: usize, rng: &mut R) -> Vec<UniPoly<S>> {
    let n = f.degree().expect("nonzero");
    if n == d {
        return vec![f.clone()];
    }
    let zero = f.zero_scalar().clone();
    let e = (zero.order().pow(d as u32) - 1u32) / 2u32;
    let one = one_poly(&zero);
    loop {
        let a = UniPoly::new((0..n).map(|_| zero.random_like(rng)).collect(), zero.clone());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let g = a.gcd(f);
        let g = if g.degree().unwrap_or(0) > 0 {
            g
        } else {
            a.pow_mod_big(&e, f).sub(&one).gcd(f)
        };
        if let Some(dg) = g.degree() {
            if dg > 0 && dg < n {
                let mut out = equal_degree_split(&g, d, rng);
                out.extend(equal_degree_split(&exact_div(f, &g), d, rng));
                return out;
            }
        }
    }
}

fn poly_key<S: FiniteFieldElement>(f: &UniPoly<S>) -> (usize, Vec<Vec<u64>>) {
    (f.coeffs().len(), f.coeffs().iter().map(|c| c.sort_key()).collect())
}

/// Complete factorization into monic irreducibles with multiplicities,
/// sorted by degree and then coefficients. The leading coefficient is dropped.
pub fn factor_univariate<S: FiniteFieldElement>(f: &UniPoly<S>) -> Vec<(UniPoly<S>, usize)> {
    assert!(f.zero_scalar().characteristic() % 2 == 1, "odd characteristic required");
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);
    let mut out = Vec::new();
    for (g, e) in squarefree_factorization(f) {
        for (h, d) in distinct_degree_factorization(&g) {
            for irr in equal_degree_split(&h, d, &mut rng) {
                out.push((irr, e));
            }
        }
    }
    out.sort_by_key(|(g, e)| (poly_key(g), *e));
    out
}

/// Ben-Or test: `f` of degree `n` is irreducible iff `gcd(x^{q^i} - x, f) = 1`
/// for all `i <= n/2`.
pub fn is_irreducible<S: FiniteFieldElement>(f: &UniPoly<S>) -> bool {
    let n = match f.degree() {
        None | Some(0) => return false,
        Some(n) => n,
    };
    let zero = f.zero_scalar().clone();
    let q = zero.order();
    let f = f.monic();
    let x = UniPoly::x(zero);
    let mut h = x.clone();
    for _ in 1..=n / 2 {
        h = h.pow_mod_big(&q, &f);
        if h.sub(&x).gcd(&f).degree() != Some(0) {
            return false;
        }
    }
    true
}

/// Roots of `f` in its own coefficient field with multiplicities, sorted.
pub fn roots_in_field<S: FiniteFieldElement>(f: &UniPoly<S>) -> Vec<(S, usize)> {
    let zero = f.zero_scalar().clone();
    let q = zero.order();
    let x = UniPoly::x(zero.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);
    let mut out = Vec::new();
    for (g, e) in squarefree_factorization(f) {
        let lin = x.pow_mod_big(&q, &g).sub(&x).gcd(&g);
        if lin.degree().unwrap_or(0) == 0 {
            continue;
        }
        for r in equal_degree_split(&lin, 1, &mut rng) {
            out.push((r.coeff(0).neg(), e));
        }
    }
    out.sort_by_key(|(r, _)| r.sort_key());
    out
}

/// Distinct roots of `f` in `F_p`, ascending.
pub(crate) fn roots_in_prime_field(f: &UniPoly<Fp>) -> Vec<Fp> {
    if f.is_zero() {
        return Vec::new();
    }
    roots_in_field(f).into_iter().map(|(r, _)| r).collect()
}

/// Roots of `f` in the extension `field` with multiplicities, sorted by
/// power-basis coordinates. Complete whenever the degree of `field` is a
/// multiple of every irreducible factor degree of `f`.
pub fn ext_roots(f: &UniPoly<Fp>, field: &Arc<ExtField>) -> Vec<(FpExt, usize)> {
    let lifted = f.map(field.zero(), |c| field.embed_fp(c));
    roots_in_field(&lifted)
}
