use std::sync::Arc;

use super::*;
use crate::linalg::rank;
use crate::numbers::{NumberField, Rational};
use crate::poly::Exp;
use proptest::prelude::*;

fn qq() -> Arc<NumberField> {
    NumberField::rationals()
}

fn apoly(deg: u32, terms: &[(i64, Exp)]) -> HomPoly<AlgebraicElement> {
    let k = qq();
    HomPoly::from_terms(
        deg,
        k.zero(),
        terms.iter().map(|(c, e)| (k.from_rational(Rational::from_int(*c)), *e)),
    )
}

fn line(a: i64, b: i64, c: i64) -> HomPoly<AlgebraicElement> {
    apoly(1, &[(a, [1, 0, 0]), (b, [0, 1, 0]), (c, [0, 0, 1])])
}

fn circle(r2: i64) -> HomPoly<AlgebraicElement> {
    apoly(2, &[(1, [2, 0, 0]), (1, [0, 2, 0]), (-r2, [0, 0, 2])])
}

fn xyz() -> HomPoly<AlgebraicElement> {
    apoly(3, &[(1, [1, 1, 1])])
}

fn modular() -> MilnorOptions {
    MilnorOptions::default()
}

fn exact() -> MilnorOptions {
    MilnorOptions {
        exact: true,
        ..MilnorOptions::default()
    }
}

#[test]
fn syzygy_matrix_shape_and_koszul_relation() {
    let f = xyz();
    let a = syzygy_matrix(&f, 1);
    assert_eq!(a.len(), 10);
    assert_eq!(a[0].len(), 9);
    // (x, -y, 0) is a relation: x * yz - y * xz = 0.
    let zero = f.zero_scalar().clone();
    let one = zero.one_like();
    let mut v = vec![zero.clone(); 9];
    v[0] = one.clone();
    v[4] = one.neg();
    for row in &a {
        let dot = row.iter().zip(&v).fold(zero.clone(), |acc, (u, w)| acc.add(&u.mul(w)));
        assert!(dot.is_zero());
    }
}

#[test]
fn triangle_is_free_with_exponents_one_one() {
    let f = xyz();
    for opts in [modular(), exact()] {
        let rep = freeness(&f, Some(3), &opts).unwrap();
        assert_eq!(rep.r, 1);
        assert_eq!(rep.tau, 3);
        assert_eq!(rep.verdict, Verdict::Free);
        assert_eq!(rep.exponents, Some((1, 1)));
        assert_eq!(rep.milnor_hilbert[&2], 3);
        assert!(rep.n_dims.values().all(|&d| d == 0));
    }
    let w = mdr(&f, &modular()).unwrap().witness;
    assert!(verify_syzygy(&f, &w));
    assert!(w.iter().any(|p| !p.is_zero()));
}

#[test]
fn smooth_conic_is_nearly_free() {
    let f = circle(1);
    let rep = freeness(&f, Some(0), &modular()).unwrap();
    assert_eq!(rep.r, 1);
    assert_eq!(rep.tau, 0);
    assert_eq!(rep.n_dims[&0], 1);
    assert!(rep.n_dims.iter().all(|(q, d)| *q == 0 || *d == 0));
    assert_eq!(rep.verdict, Verdict::NearlyFree);
    assert_eq!(rep.routes.tjurina, Some(false));
}

#[test]
fn fermat_cubic_is_neither() {
    let f = apoly(3, &[(1, [3, 0, 0]), (1, [0, 3, 0]), (1, [0, 0, 3])]);
    let rep = freeness(&f, Some(0), &modular()).unwrap();
    assert_eq!(rep.r, 2);
    assert_eq!(rep.tau, 0);
    let hilb: Vec<u64> = (0..6).map(|q| rep.milnor_hilbert[&q]).collect();
    assert_eq!(hilb, vec![1, 3, 3, 1, 0, 0]);
    let n: Vec<u64> = (0..6).map(|q| rep.n_dims[&q]).collect();
    assert_eq!(n, hilb);
    assert_eq!(rep.verdict, Verdict::Neither);
}

#[test]
fn line_tangent_to_circle() {
    // (x - z)(x^2 + y^2 - z^2): one tacnode, tau = 3, m = 3.
    let f = line(1, 0, -1).mul(&circle(1));
    let a = freeness(&f, Some(3), &modular()).unwrap();
    let b = freeness(&f, Some(3), &exact()).unwrap();
    assert_eq!(a.tau, 3);
    assert_eq!(a.verdict, Verdict::Free);
    assert_eq!(a.exponents, Some((1, 1)));
    assert_eq!(a.syzygy.kernel_dims[&1], 2);
    assert_eq!(a.n_dims, b.n_dims);
    assert_eq!(a.milnor_hilbert, b.milnor_hilbert);
}

#[test]
fn exact_and_modular_agree_on_two_and_three_lines_with_circle() {
    let c = circle(1);
    let f4 = line(1, 0, -1).mul(&line(1, 0, 1)).mul(&c);
    let f5 = line(0, 1, -1).mul(&line(1, 0, -1)).mul(&line(1, 0, 1)).mul(&c);
    for f in [f4, f5] {
        let a = compute(&f, &modular()).unwrap();
        let b = compute(&f, &exact()).unwrap();
        assert_eq!(a.data, b.data);
        assert!(verify_syzygy(&f, &a.syzygy.witness));
        assert_eq!(a.primes.len(), 3);
        assert!(b.primes.is_empty());
    }
}

#[test]
fn tau_mismatch_is_reported() {
    let err = freeness(&xyz(), Some(4), &modular()).unwrap_err();
    assert_eq!(err, MilnorError::TauMismatch { census: 4, milnor: 3 });
    assert!(err.is_soundness_failure());
}

#[test]
fn degree_one_is_rejected() {
    assert_eq!(
        compute(&line(1, 2, 3), &modular()).unwrap_err(),
        MilnorError::DegreeTooSmall
    );
}

#[test]
fn resolution_shape_strings() {
    assert_eq!(resolution_shape(9, 4, 4), "0 -> S(-12)^2 -> S(-8)^3 -> S");
    assert_eq!(resolution_shape(5, 1, 3), "0 -> S(-5) + S(-7) -> S(-4)^3 -> S");
}

#[test]
fn serialized_key_order() {
    let rep = freeness(&xyz(), None, &modular()).unwrap();
    let s = serde_json::to_string(&rep).unwrap();
    let keys = [
        "\"m\"",
        "\"r\"",
        "\"tau\"",
        "\"verdict\"",
        "\"exponents\"",
        "\"n_dims\"",
    ];
    let pos: Vec<usize> = keys.iter().map(|k| s.find(k).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]));
}

// Oracles computed by plain rank counts, independent of the normal form tables.

fn j_rank(f: &HomPoly<Fp>, d: u32) -> usize {
    let dpart = f.deg() - 1;
    if d < dpart {
        return 0;
    }
    let rows: Vec<Vec<Fp>> = f
        .partials()
        .iter()
        .flat_map(|p| {
            monomial_basis(d - dpart)
                .into_iter()
                .map(move |e| p.mul_monomial(&e).dense())
        })
        .collect();
    rank(rows, dim_s(d as i64), f.zero_scalar())
}

fn naive_colon(f: &HomPoly<Fp>, q: u32, s: u32) -> usize {
    // dim {g : x_i^s g in J for all i} = dim S_q - rank of g -> (x^s g, y^s g, z^s g) mod J.
    let d = q + s;
    let dpart = f.deg() - 1;
    let n = dim_s(d as i64);
    let zero = *f.zero_scalar();
    let mut jrows: Vec<Vec<Fp>> = Vec::new();
    if d >= dpart {
        for p in f.partials() {
            for e in monomial_basis(d - dpart) {
                jrows.push(p.mul_monomial(&e).dense());
            }
        }
    }
    let mut jech = Echelon::new(n, zero);
    for r in jrows {
        jech.insert(r);
    }
    let mut ech = Echelon::new(3 * n, zero);
    for e in monomial_basis(q) {
        let mut row = Vec::with_capacity(3 * n);
        for i in 0..3 {
            let mut t = e;
            t[i] += s;
            let mut v = vec![zero; n];
            v[monomial_index(&t)] = zero.one_like();
            jech.reduce(&mut v);
            row.extend(v);
        }
        ech.insert(row);
    }
    dim_s(q as i64) - ech.rank()
}

fn fp_form(m: u32, coeffs: &[u64], p: u64) -> HomPoly<Fp> {
    HomPoly::from_terms(
        m,
        Fp::new(0, p),
        monomial_basis(m)
            .into_iter()
            .zip(coeffs)
            .map(|(e, &c)| (Fp::from_u64(c, p), e)),
    )
}

fn fp_linear_product(lines: &[[u64; 3]], p: u64) -> HomPoly<Fp> {
    let fs: Vec<HomPoly<Fp>> = lines
        .iter()
        .map(|l| HomPoly::linear(&[Fp::from_u64(l[0], p), Fp::from_u64(l[1], p), Fp::from_u64(l[2], p)]))
        .collect();
    HomPoly::product(&fs)
}

fn check_against_oracle(f: &HomPoly<Fp>) -> Result<(), TestCaseError> {
    let m = f.deg();
    let mut alg = MilnorAlgebra::new(f);
    for d in 0..=2 * m {
        prop_assert_eq!(alg.hilbert(d), dim_s(d as i64) - j_rank(f, d));
    }
    for q in 0..=m {
        for s in [1, 2, 4] {
            prop_assert_eq!(alg.colon_dim(q, s), naive_colon(f, q, s));
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn hilbert_and_colon_match_rank_oracle(m in 2u32..5, seed in proptest::collection::vec(0u64..101, 15)) {
        let f = fp_form(m, &seed, 101);
        prop_assume!(!f.is_zero() && f.partials().iter().any(|p| !p.is_zero()));
        check_against_oracle(&f)?;
    }

    #[test]
    fn line_products_match_rank_oracle(lines in proptest::collection::vec([0u64..7, 0u64..7, 1u64..7], 3..6)) {
        let f = fp_linear_product(&lines, 10007);
        check_against_oracle(&f)?;
    }

    #[test]
    fn kernel_dims_match_hilbert(lines in proptest::collection::vec([0u64..5, 0u64..5, 1u64..5], 3..6)) {
        let p = 10007;
        let f = fp_linear_product(&lines, p);
        let m = f.deg();
        let mut alg = MilnorAlgebra::new(&f);
        for q in 0..m {
            let a = syzygy_matrix(&f, q);
            let k = 3 * dim_s(q as i64) - rank(a, 3 * dim_s(q as i64), &Fp::new(0, p));
            let h = alg.hilbert(q + m - 1) as u64;
            prop_assert_eq!(k as i64, kernel_dim_from_hilbert(m, q, h));
        }
    }
}
