//! Pairwise intersection points with contact orders, over any field that
//! contains them.

use std::collections::{BTreeMap, BTreeSet};

use super::Component;
use crate::numbers::{AlgebraicElement, FieldElement, FiniteFieldElement, FpExt, Rational, UniPoly};
use crate::poly::{res_wrt, restrict_to_line, HomPoly};

/// Attempts at a generic projection for a conic pair.
const PROJECTION_ATTEMPTS: usize = 20;

/// Scalars with a canonical total order, used to merge equal points.
pub(crate) trait PointField: FieldElement {
    type Key: Ord + Clone;
    fn key(&self) -> Self::Key;
}

impl PointField for FpExt {
    type Key = Vec<u64>;
    fn key(&self) -> Vec<u64> {
        self.sort_key()
    }
}

impl PointField for AlgebraicElement {
    type Key = Vec<Rational>;
    fn key(&self) -> Vec<Rational> {
        self.coords().to_vec()
    }
}

/// A merged intersection point.
#[derive(Debug, Clone)]
pub(crate) struct RawPoint<P> {
    pub coords: [P; 3],
    pub incident: BTreeSet<usize>,
    pub contacts: BTreeMap<(usize, usize), u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum IntersectError {
    /// Contact orders of a pair do not add up to the Bezout number: some
    /// point is not defined over the working field.
    Incomplete {
        i: usize,
        j: usize,
        sum: u32,
        expected: u32,
    },
    ProjectionFailed(usize, usize),
}

/// Root finder for univariate polynomials over the working field; returns the
/// roots it can find, with multiplicities.
pub(crate) type Roots<'a, P> = dyn Fn(&UniPoly<P>) -> Vec<(P, usize)> + 'a;

/// Scales so that the first nonzero coordinate is 1.
pub(crate) fn normalize<P: FieldElement>(v: [P; 3]) -> [P; 3] {
    let lead = v.iter().find(|c| !c.is_zero()).expect("nonzero point").clone();
    let inv = lead.inv().expect("nonzero");
    v.map(|c| c.mul(&inv))
}

fn cross<P: FieldElement>(a: &[P], b: &[P]) -> [P; 3] {
    [
        a[1].mul(&b[2]).sub(&a[2].mul(&b[1])),
        a[2].mul(&b[0]).sub(&a[0].mul(&b[2])),
        a[0].mul(&b[1]).sub(&a[1].mul(&b[0])),
    ]
}

fn total<P>(pts: &[([P; 3], u32)]) -> u32 {
    pts.iter().map(|(_, k)| *k).sum()
}

fn line_line<P: FieldElement>(a: &[P], b: &[P]) -> Vec<([P; 3], u32)> {
    vec![(cross(a, b), 1)]
}

/// Roots of a binary form given by its affine part and its multiplicity at
/// infinity, as `(s, t)` pairs.
fn binary_roots<P: FieldElement>(affine: &UniPoly<P>, at_infinity: u32, roots: &Roots<'_, P>) -> Vec<((P, P), u32)> {
    let zero = affine.zero_scalar().clone();
    let one = zero.one_like();
    let mut out: Vec<((P, P), u32)> = Vec::new();
    if affine.degree().unwrap_or(0) > 0 {
        for (r, k) in roots(affine) {
            out.push(((one.clone(), r), k as u32));
        }
    }
    if at_infinity > 0 {
        out.push(((zero, one), at_infinity));
    }
    out
}

fn line_conic<P: FieldElement>(line: &[P; 3], conic: &HomPoly<P>, roots: &Roots<'_, P>) -> Vec<([P; 3], u32)> {
    let r = restrict_to_line(conic, line).expect("nonzero line");
    assert!(!r.contained, "a smooth conic contains no line");
    binary_roots(&r.form.affine_part(), r.form.multiplicity_at_infinity(), roots)
        .into_iter()
        .map(|((s, t), k)| (r.point(&s, &t), k))
        .collect()
}

fn mat_vec<P: FieldElement>(m: &[[P; 3]; 3], v: &[P; 3]) -> [P; 3] {
    let row = |i: usize| m[i][0].mul(&v[0]).add(&m[i][1].mul(&v[1])).add(&m[i][2].mul(&v[2]));
    [row(0), row(1), row(2)]
}

fn det3<P: FieldElement>(m: &[[P; 3]; 3]) -> P {
    let c = cross(&m[1], &m[2]);
    m[0][0].mul(&c[0]).add(&m[0][1].mul(&c[1])).add(&m[0][2].mul(&c[2]))
}

/// `q(x, y0, z0)` as a polynomial in `x`.
fn slice_in_x<P: FieldElement>(q: &HomPoly<P>, y0: &P, z0: &P) -> UniPoly<P> {
    let zero = q.zero_scalar().clone();
    let mut cs = vec![zero.clone(); q.deg() as usize + 1];
    for (e, c) in q.terms() {
        let v = c.mul(&y0.pow_u64(e[1] as u64)).mul(&z0.pow_u64(e[2] as u64));
        cs[e[0] as usize] = cs[e[0] as usize].add(&v);
    }
    UniPoly::new(cs, zero)
}

/// Intersection of two conics after a random change of coordinates that
/// makes the projection from `(1:0:0)` generic: the center lies on neither
/// conic, on no line through two intersection points, and on no tangent line
/// at an intersection point. Then the multiplicity of each root of the
/// resultant in `x` is the intersection multiplicity.
fn conic_conic<P: FieldElement>(
    c1: &HomPoly<P>,
    c2: &HomPoly<P>,
    roots: &Roots<'_, P>,
    random: &mut dyn FnMut() -> P,
) -> Option<Vec<([P; 3], u32)>> {
    let zero = c1.zero_scalar().clone();
    'attempt: for _ in 0..PROJECTION_ATTEMPTS {
        let m: [[P; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| random()));
        if det3(&m).is_zero() {
            continue;
        }
        let (d1, d2) = (c1.linear_substitute(&m), c2.linear_substitute(&m));
        if d1.coeff(&[2, 0, 0]).is_zero() || d2.coeff(&[2, 0, 0]).is_zero() {
            continue;
        }
        let res = res_wrt(&d1, &d2, 0);
        if res.is_zero() {
            continue;
        }
        // res is a quartic in y, z; dehomogenize at z = 1 as a polynomial in y.
        let mut cs = vec![zero.clone(); 5];
        for (e, c) in res.terms() {
            cs[e[1] as usize] = c.clone();
        }
        let affine = UniPoly::new(cs, zero.clone());
        let at_inf = 4 - affine.degree().unwrap_or(0) as u32;
        let (fx1, fx2) = (d1.derivative(0), d2.derivative(0));
        let mut out = Vec::new();
        // binary_roots returns (s, t) = (z, y) pairs.
        for ((z0, y0), k) in binary_roots(&affine, at_inf, roots) {
            let g = slice_in_x(&d1, &y0, &z0).gcd(&slice_in_x(&d2, &y0, &z0));
            if g.degree() != Some(1) {
                continue 'attempt;
            }
            let x0 = g.coeff(0).neg();
            let v = [x0, y0, z0];
            if fx1.eval(&v).is_zero() || fx2.eval(&v).is_zero() {
                continue 'attempt;
            }
            out.push((mat_vec(&m, &v), k));
        }
        return Some(out);
    }
    None
}

/// Intersection points of one pair with contact orders.
pub(crate) fn intersect_pair<P: FieldElement>(
    a: &Component<P>,
    b: &Component<P>,
    roots: &Roots<'_, P>,
    random: &mut dyn FnMut() -> P,
) -> Option<Vec<([P; 3], u32)>> {
    Some(match (a, b) {
        (Component::Line(l1), Component::Line(l2)) => line_line(l1, l2),
        (Component::Line(l), c @ Component::Conic(_)) | (c @ Component::Conic(_), Component::Line(l)) => {
            line_conic(l, &c.form(), roots)
        }
        (Component::Conic(_), Component::Conic(_)) => conic_conic(&a.form(), &b.form(), roots, random)?,
    })
}

/// All pairwise intersections, merged into points. Also returns, for each
/// pair, the number of distinct points and the sum of contact orders.
pub(crate) fn intersect_all<P: PointField>(
    comps: &[Component<P>],
    roots: &Roots<'_, P>,
    random: &mut dyn FnMut() -> P,
) -> Result<(Vec<RawPoint<P>>, BTreeMap<(usize, usize), (usize, u32)>), IntersectError> {
    let mut index: BTreeMap<Vec<P::Key>, usize> = BTreeMap::new();
    let mut points: Vec<RawPoint<P>> = Vec::new();
    let mut pairs = BTreeMap::new();
    for i in 0..comps.len() {
        for j in i + 1..comps.len() {
            let pts =
                intersect_pair(&comps[i], &comps[j], roots, random).ok_or(IntersectError::ProjectionFailed(i, j))?;
            let expected = comps[i].degree() * comps[j].degree();
            let sum = total(&pts);
            if sum != expected {
                return Err(IntersectError::Incomplete { i, j, sum, expected });
            }
            pairs.insert((i, j), (pts.len(), expected));
            for (v, k) in pts {
                let v = normalize(v);
                let key: Vec<P::Key> = v.iter().map(|c| c.key()).collect();
                let idx = *index.entry(key).or_insert_with(|| {
                    points.push(RawPoint {
                        coords: v.clone(),
                        incident: BTreeSet::new(),
                        contacts: BTreeMap::new(),
                    });
                    points.len() - 1
                });
                let p = &mut points[idx];
                p.incident.insert(i);
                p.incident.insert(j);
                *p.contacts.entry((i, j)).or_insert(0) += k;
            }
        }
    }
    Ok((points, pairs))
}
