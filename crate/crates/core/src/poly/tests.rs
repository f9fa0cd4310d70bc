use super::*;
use crate::numbers::{FieldElement, NumberField, Rational, UniPoly};
use proptest::prelude::*;

fn q(v: i64) -> Rational {
    Rational::from_int(v)
}

fn qpoly(deg: u32, terms: &[(i64, Exp)]) -> HomPoly<Rational> {
    HomPoly::from_terms(deg, q(0), terms.iter().map(|(c, e)| (q(*c), *e)))
}

fn circle(r2: i64) -> HomPoly<Rational> {
    HomPoly::quadratic(&[q(1), q(1), q(-r2), q(0), q(0), q(0)])
}

#[test]
fn partials_of_xyz() {
    let f = qpoly(3, &[(1, [1, 1, 1])]);
    let [fx, fy, fz] = f.partials();
    assert_eq!(fx, qpoly(2, &[(1, [0, 1, 1])]));
    assert_eq!(fy, qpoly(2, &[(1, [1, 0, 1])]));
    assert_eq!(fz, qpoly(2, &[(1, [1, 1, 0])]));
}

#[test]
fn partials_of_circle() {
    let [fx, fy, fz] = circle(1).partials();
    assert_eq!(fx, qpoly(1, &[(2, [1, 0, 0])]));
    assert_eq!(fy, qpoly(1, &[(2, [0, 1, 0])]));
    assert_eq!(fz, qpoly(1, &[(-2, [0, 0, 1])]));
}

#[test]
fn euler_relation_for_tangent_line_and_circle() {
    // (x - z)(x^2 + y^2 - z^2)
    let f = HomPoly::linear(&[q(1), q(0), q(-1)]).mul(&circle(1));
    assert!(f.partials().iter().all(|p| p.deg() == 2));
    assert!(f.euler_defect().is_zero());
}

#[test]
fn monomial_basis_order() {
    assert_eq!(monomial_basis(0), vec![[0, 0, 0]]);
    assert_eq!(monomial_basis(1), vec![[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
    assert_eq!(
        monomial_basis(2),
        vec![[2, 0, 0], [1, 1, 0], [1, 0, 1], [0, 2, 0], [0, 1, 1], [0, 0, 2]]
    );
    assert_eq!(monomial_basis(4).len(), 15);
    for r in 0..12 {
        for (i, e) in monomial_basis(r).iter().enumerate() {
            assert_eq!(monomial_index(e), i);
        }
        assert_eq!(monomial_basis(r).len(), dim_s(r as i64));
    }
}

#[test]
fn tangent_line_restriction_is_double() {
    let r = restrict_to_line(&circle(1), &[q(1), q(0), q(-1)]).unwrap();
    // parametrized as (s : t : s)
    assert_eq!(r.form.coeffs(), &[q(0), q(0), q(1)]);
    assert_eq!(r.point(&q(1), &q(0)), [q(1), q(0), q(1)]);
    assert!(!r.contained);
    assert_eq!(r.form.root_multiplicity(&q(1), &q(0)), 2);
}

#[test]
fn secant_restriction_has_simple_roots() {
    let r = restrict_to_line(&circle(1), &[q(0), q(0), q(1)]).unwrap();
    assert_eq!(r.form.coeffs(), &[q(1), q(0), q(1)]);
    let u = r.form.affine_part();
    assert_eq!(u.gcd(&u.derivative()).degree(), Some(0));
}

#[test]
fn contained_line_is_flagged() {
    let f = qpoly(2, &[(1, [1, 1, 0])]);
    let r = restrict_to_line(&f, &[q(1), q(0), q(0)]).unwrap();
    assert!(r.contained);
    assert!(r.form.is_zero());
    assert_eq!(
        restrict_to_line(&f, &[q(0), q(0), q(0)]).unwrap_err(),
        LineError::DegenerateLine
    );
}

#[test]
fn polar_line_is_tangent_and_random_line_through_point_is_not() {
    // Conic 2x^2 + 3y^2 - 5z^2 through (1:1:1); polar line 4x + 6y - 10z.
    let c = HomPoly::quadratic(&[q(2), q(3), q(-5), q(0), q(0), q(0)]);
    let tangent = restrict_to_line(&c, &[q(4), q(6), q(-10)]).unwrap();
    let secant = restrict_to_line(&c, &[q(1), q(-3), q(2)]).unwrap();
    let (s, t) = (q(1), q(1));
    assert_eq!(tangent.form.root_multiplicity(&s, &t), 2);
    assert_eq!(secant.form.root_multiplicity(&s, &t), 1);
}

#[test]
fn resultant_examples() {
    let f = UniPoly::from_i64s(&[-1, 0, 1], q(0));
    let g = UniPoly::from_i64s(&[-1, 1], q(0));
    assert!(resultant(&f, &g).is_zero());
    let f = UniPoly::from_i64s(&[1, 0, 1], q(0));
    let g = UniPoly::from_i64s(&[4, 0, 1], q(0));
    assert_eq!(resultant(&f, &g), q(9));
}

#[test]
fn sylvester_oracle_cofactor_expansion() {
    // Naive cofactor expansion as an independent check of Bareiss.
    fn naive(m: &[Vec<Rational>]) -> Rational {
        if m.len() == 1 {
            return m[0][0].clone();
        }
        let mut acc = q(0);
        for j in 0..m.len() {
            let minor: Vec<Vec<Rational>> = m[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(k, _)| *k != j)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let t = m[0][j].mul(&naive(&minor));
            acc = if j % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
        }
        acc
    }
    let m: Vec<Vec<Rational>> = vec![
        vec![q(0), q(2), q(-1), q(3)],
        vec![q(1), q(0), q(4), q(2)],
        vec![q(5), q(-2), q(0), q(1)],
        vec![q(2), q(2), q(2), q(0)],
    ];
    assert_eq!(det_bareiss(m.clone(), &q(0)), naive(&m));
}

#[test]
fn res_wrt_of_concentric_circles_has_double_roots() {
    // Over Q(sqrt3) as in the seven-component example; the resultant does
    // not involve sqrt3 but the computation runs in the number field.
    let k = NumberField::from_i64s(&[-3, 0, 1], "Q(sqrt3)").unwrap();
    let c1 = circle(1).map(k.zero(), |c| k.from_rational(c.clone()));
    let c2 = circle(4).map(k.zero(), |c| k.from_rational(c.clone()));
    let r = res_wrt(&c1, &c2, 0);
    assert_eq!(r.deg(), 4);
    // Res_x = (3 z^2)^2 = 9 z^4: the two intersection points on z = 0, each
    // counted twice.
    let expect = HomPoly::from_terms(4, k.zero(), [(k.from_rational(q(9)), [0, 0, 4])]);
    assert_eq!(r, expect);
}

#[test]
fn res_wrt_matches_univariate_resultant_on_specialization() {
    let f = qpoly(2, &[(1, [2, 0, 0]), (3, [1, 1, 0]), (-2, [0, 0, 2]), (1, [0, 1, 1])]);
    let g = qpoly(2, &[(2, [2, 0, 0]), (-1, [1, 0, 1]), (1, [0, 2, 0])]);
    let r = res_wrt(&f, &g, 0);
    // y = 2, z = 1: univariate polynomials in x.
    let spec = |h: &HomPoly<Rational>| {
        let cs = (0..=2)
            .map(|j| coeff_in_var(h, 0, j).eval(&[q(0), q(2), q(1)]))
            .collect();
        UniPoly::new(cs, q(0))
    };
    assert_eq!(r.eval(&[q(0), q(2), q(1)]), resultant(&spec(&f), &spec(&g)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn euler_relation(deg in 1u32..7, cs in proptest::collection::vec(-20i64..20, 28)) {
        let f = HomPoly::from_terms(
            deg,
            q(0),
            monomial_basis(deg).into_iter().zip(&cs).map(|(e, c)| (q(*c), e)),
        );
        prop_assert!(f.euler_defect().is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn resultant_vanishes_iff_common_factor(
        a in proptest::collection::vec(-5i64..5, 1..4),
        b in proptest::collection::vec(-5i64..5, 1..4),
        c in proptest::collection::vec(-5i64..5, 1..3),
    ) {
        let f = UniPoly::from_i64s(&a, q(0)).mul(&UniPoly::from_i64s(&c, q(0)));
        let g = UniPoly::from_i64s(&b, q(0));
        prop_assume!(!f.is_zero() && !g.is_zero());
        let common = f.gcd(&g).degree().unwrap_or(0) > 0;
        prop_assert_eq!(resultant(&f, &g).is_zero(), common);
    }
}
