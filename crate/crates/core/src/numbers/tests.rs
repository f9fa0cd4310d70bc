use super::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn fp_poly(cs: &[i64], p: u64) -> UniPoly<Fp> {
    UniPoly::from_i64s(cs, Fp::new(0, p))
}

#[test]
fn rational_sum() {
    assert_eq!(Rational::frac(1, 3) + Rational::frac(1, 6), Rational::frac(1, 2));
}

#[test]
fn rational_parse_and_print() {
    let r: Rational = "-6/4".parse().unwrap();
    assert_eq!(r, Rational::frac(-3, 2));
    assert_eq!(r.to_num_den(), "-3/2");
    assert_eq!("7".parse::<Rational>().unwrap(), 7);
    assert!("1/0".parse::<Rational>().is_err());
    assert!("x".parse::<Rational>().is_err());
}

#[test]
fn rational_reconstruction_roundtrip() {
    let p = 2_147_483_629;
    for r in [Rational::frac(-3, 7), Rational::frac(22, 5), Rational::from_int(0)] {
        let a = r.mod_p(p).unwrap();
        assert_eq!(Rational::reconstruct(a, p), Some(r));
    }
}

#[test]
fn sqrt3_squares_to_three() {
    let k = NumberField::from_i64s(&[-3, 0, 1], "Q(sqrt3)").unwrap();
    let a = k.generator();
    assert_eq!(a.mul(&a), k.from_rational(Rational::from_int(3)));
}

#[test]
fn inverse_in_f13() {
    assert_eq!(Fp::new(5, 13).inv().unwrap(), Fp::new(8, 13));
    assert_eq!(Fp::new(0, 13).inv(), Err(NumberError::DivisionByZero));
}

#[test]
fn number_field_inverse() {
    let k = NumberField::from_i64s(&[1, 1, 1], "Q(w)").unwrap();
    let w = k.generator();
    let x = w.add(&k.from_rational(Rational::frac(2, 3)));
    assert!(x.mul(&x.inv().unwrap()).is_one());
    assert!(w.pow_u64(3).is_one());
}

#[test]
fn field_validation() {
    assert!(NumberField::from_i64s(&[0, 0, 1], "bad").is_err());
    assert!(NumberField::from_i64s(&[1, 2], "bad").is_err());
    assert!(NumberField::from_i64s(&[5], "bad").is_err());
}

#[test]
fn mismatched_fields() {
    let k = NumberField::from_i64s(&[-3, 0, 1], "a").unwrap();
    let l = NumberField::from_i64s(&[-2, 0, 1], "b").unwrap();
    assert_eq!(k.one().try_add(&l.one()), Err(NumberError::FieldMismatch));
}

#[test]
fn reduce_sqrt3_mod_11() {
    let k = NumberField::from_i64s(&[-3, 0, 1], "Q(sqrt3)").unwrap();
    assert_eq!(k.generator().reduce_mod_p(11, 0).unwrap(), Fp::new(5, 11));
    assert_eq!(k.generator().reduce_mod_p(11, 1).unwrap(), Fp::new(6, 11));
}

#[test]
fn reduce_half_mod_13() {
    let q = NumberField::rationals();
    let half = q.from_rational(Rational::frac(1, 2));
    assert_eq!(half.reduce_mod_p(13, 0).unwrap(), Fp::new(7, 13));
}

#[test]
fn reduce_sqrt3_mod_5_is_bad_prime() {
    let k = NumberField::from_i64s(&[-3, 0, 1], "Q(sqrt3)").unwrap();
    assert!(matches!(
        k.generator().reduce_mod_p(5, 0),
        Err(NumberError::BadPrime { p: 5, .. })
    ));
    let third = k.from_rational(Rational::frac(1, 3));
    assert!(matches!(third.reduce_mod_p(3, 0), Err(NumberError::BadPrime { .. })));
}

#[test]
fn factor_x2_plus_1_mod_5() {
    let f = factor_univariate(&fp_poly(&[1, 0, 1], 5));
    assert_eq!(f, vec![(fp_poly(&[2, 1], 5), 1), (fp_poly(&[3, 1], 5), 1)]);
}

#[test]
fn x2_minus_3_irreducible_mod_5() {
    let f = fp_poly(&[-3, 0, 1], 5);
    assert!(is_irreducible(&f));
    assert_eq!(factor_univariate(&f), vec![(f.clone(), 1)]);
}

#[test]
fn repeated_factor_mod_7() {
    // (x-1)^2 x
    let f = fp_poly(&[-1, 1], 7)
        .mul(&fp_poly(&[-1, 1], 7))
        .mul(&fp_poly(&[0, 1], 7));
    assert_eq!(
        factor_univariate(&f),
        vec![(fp_poly(&[0, 1], 7), 1), (fp_poly(&[6, 1], 7), 2)]
    );
}

#[test]
fn squarefree_handles_pth_powers() {
    // (x+1)^7 (x+2) over F_7
    let mut f = fp_poly(&[2, 1], 7);
    for _ in 0..7 {
        f = f.mul(&fp_poly(&[1, 1], 7));
    }
    let sq = squarefree_factorization(&f);
    assert_eq!(sq, vec![(fp_poly(&[2, 1], 7), 1), (fp_poly(&[1, 1], 7), 7)]);
}

#[test]
fn ext_roots_of_x2_plus_1_mod_7() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let f49 = ExtField::random(7, 2, &mut rng);
    let roots = ext_roots(&fp_poly(&[1, 0, 1], 7), &f49);
    assert_eq!(roots.len(), 2);
    for (r, e) in &roots {
        assert_eq!(*e, 1);
        assert!(r.mul(r).add(&f49.one()).is_zero());
        assert!(r.as_base().is_none());
    }
}

#[test]
fn ext_roots_of_x2_mod_5() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let f5 = ExtField::random(5, 1, &mut rng);
    let roots = ext_roots(&fp_poly(&[0, 0, 1], 5), &f5);
    assert_eq!(roots, vec![(f5.zero(), 2)]);
}

#[test]
fn degree_twelve_extension_contains_small_degree_roots() {
    let p = 1_000_003;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let big = ExtField::random(p, 12, &mut rng);
    // Random irreducibles of degree 3 and 4 split completely.
    let zero = Fp::new(0, p);
    for d in [3usize, 4] {
        let g = loop {
            let mut cs: Vec<Fp> = (0..d).map(|_| zero.random_like(&mut rng)).collect();
            cs.push(zero.one_like());
            let g = UniPoly::new(cs, zero);
            if is_irreducible(&g) {
                break g;
            }
        };
        let roots = ext_roots(&g, &big);
        assert_eq!(roots.len(), d);
    }
}

fn arb_fp() -> impl Strategy<Value = (u64, u64, u64)> {
    (any::<u64>(), any::<u64>(), any::<u64>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn prime_field_axioms((a, b, c) in arb_fp()) {
        let p = 2_147_483_647;
        let (a, b, c) = (Fp::from_u64(a, p), Fp::from_u64(b, p), Fp::from_u64(c, p));
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn rational_axioms(n in proptest::array::uniform6(-1000i64..1000)) {
        let d = |x: i64| if x == 0 { 1 } else { x };
        let a = Rational::frac(n[0], d(n[1]));
        let b = Rational::frac(n[2], d(n[3]));
        let c = Rational::frac(n[4], d(n[5]));
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn number_field_axioms(n in proptest::array::uniform6(-50i64..50)) {
        let k = NumberField::from_i64s(&[-3, 0, 1], "Q(sqrt3)").unwrap();
        let el = |x: i64, y: i64| k.element(vec![Rational::from_int(x), Rational::from_int(y)]).unwrap();
        let (a, b, c) = (el(n[0], n[1]), el(n[2], n[3]), el(n[4], n[5]));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn ext_field_axioms(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = ExtField::random(1_048_583, 3, &mut rng);
        let (a, b, c) = (f.zero().random_like(&mut rng), f.zero().random_like(&mut rng), f.zero().random_like(&mut rng));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn reduction_is_a_homomorphism(n in proptest::array::uniform4(-10_000i64..10_000)) {
        let k = NumberField::from_i64s(&[-3, 0, 1], "Q(sqrt3)").unwrap();
        let red = k.reduction(13, 0).unwrap();
        let x = k.element(vec![Rational::frac(n[0], 7), Rational::from_int(n[1])]).unwrap();
        let y = k.element(vec![Rational::from_int(n[2]), Rational::frac(n[3], 11)]).unwrap();
        prop_assert_eq!(red.reduce(&x.mul(&y)).unwrap(), red.reduce(&x).unwrap().mul(&red.reduce(&y).unwrap()));
        prop_assert_eq!(red.reduce(&x.add(&y)).unwrap(), red.reduce(&x).unwrap().add(&red.reduce(&y).unwrap()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn factorization_reproduces_input(cs in proptest::collection::vec(0u64..101, 2..9)) {
        let p = 101;
        let f = UniPoly::new(cs.iter().map(|&c| Fp::from_u64(c, p)).collect(), Fp::new(0, p));
        prop_assume!(f.degree().unwrap_or(0) >= 1);
        let factors = factor_univariate(&f);
        let mut prod = UniPoly::constant(Fp::new(1, p));
        for (g, e) in &factors {
            prop_assert!(is_irreducible(g));
            prop_assert!(g.leading().unwrap().is_one());
            for _ in 0..*e {
                prod = prod.mul(g);
            }
        }
        prop_assert_eq!(prod, f.monic());
    }
}
