//! Common tangent lines of two smooth conics.
//!
//! A line `u x + v y + w z` is tangent to the conic with matrix `A` exactly
//! when `(u, v, w) adj(A) (u, v, w)^T = 0`, so the common tangents are the
//! intersection points of the two dual conics.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::intersect::{intersect_pair, normalize};
use super::{conic_matrix2, Component};
use crate::numbers::{
    roots_in_field, roots_in_number_field, AlgebraicElement, ExtField, FieldElement, Fp, FpExt, UniPoly,
};
use crate::poly::restrict_to_line;

/// Coefficients `(u², v², w², uv, uw, vw)` of the dual conic, from the
/// adjugate of the conic matrix.
pub fn dual_conic<S: FieldElement>(c: &[S; 6]) -> [S; 6] {
    let m = conic_matrix2(c);
    let cof = |i: usize, j: usize| {
        let r: Vec<usize> = (0..3).filter(|&x| x != i).collect();
        let s: Vec<usize> = (0..3).filter(|&x| x != j).collect();
        m[r[0]][s[0]]
            .mul(&m[r[1]][s[1]])
            .sub(&m[r[0]][s[1]].mul(&m[r[1]][s[0]]))
    };
    // adj is symmetric with adj[i][j] = (-1)^(i+j) cof(j, i).
    let two = c[0].from_i64_like(2);
    [
        cof(0, 0),
        cof(1, 1),
        cof(2, 2),
        cof(0, 1).neg().mul(&two),
        cof(0, 2).mul(&two),
        cof(1, 2).neg().mul(&two),
    ]
}

/// Contact order of a line with a conic: 2 when tangent.
fn contact_with<S: FieldElement>(line: &[S; 3], conic: &[S; 6]) -> u32 {
    let r = restrict_to_line(&Component::Conic(conic.clone()).form(), line).expect("nonzero line");
    let f = r.form.coeffs();
    // Binary quadratic a s² + b s t + c t² is a square iff b² = 4ac.
    let disc = f[1].mul(&f[1]).sub(&f[0].mul(&f[2]).mul(&f[0].from_i64_like(4)));
    if disc.is_zero() {
        2
    } else {
        1
    }
}

fn tangents<P: super::intersect::PointField>(
    c1: &[P; 6],
    c2: &[P; 6],
    roots: &super::intersect::Roots<'_, P>,
    random: &mut dyn FnMut() -> P,
) -> Option<Vec<([P; 3], u32)>> {
    let (d1, d2) = (Component::Conic(dual_conic(c1)), Component::Conic(dual_conic(c2)));
    let pts = intersect_pair(&d1, &d2, roots, random)?;
    if pts.iter().map(|(_, k)| *k).sum::<u32>() != 4 {
        return None;
    }
    let out: Vec<([P; 3], u32)> = pts.into_iter().map(|(l, k)| (normalize(l), k)).collect();
    for (l, _) in &out {
        assert_eq!(contact_with(l, c1), 2, "dual point is not tangent to the first conic");
        assert_eq!(contact_with(l, c2), 2, "dual point is not tangent to the second conic");
    }
    Some(out)
}

/// Common tangents of two distinct smooth conics over `F_{p^12}`, with the
/// intersection multiplicity of the dual conics at each.
pub fn common_tangents_mod_p(c1: &[Fp; 6], c2: &[Fp; 6], seed: u64) -> Vec<([FpExt; 3], u32)> {
    let p = c1[0].modulus();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let field = ExtField::random(p, 12, &mut rng);
    let lift = |c: &[Fp; 6]| c.map(|x| field.embed_fp(&x));
    let roots = |f: &UniPoly<FpExt>| roots_in_field(f);
    let mut random = || field.embed(rng.gen_range(0..p));
    tangents(&lift(c1), &lift(c2), &roots, &mut random).expect("the comparison field contains every tangent")
}

/// Common tangents over the conics' own number field, or `None` when some
/// tangent is not defined over it.
pub fn common_tangents_exact(
    c1: &[AlgebraicElement; 6],
    c2: &[AlgebraicElement; 6],
) -> Option<Vec<([AlgebraicElement; 3], u32)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let zero = c1[0].zero_like();
    let roots = |f: &UniPoly<AlgebraicElement>| roots_in_number_field(f);
    let mut random = || zero.from_i64_like(rng.gen_range(-7..=7));
    tangents(c1, c2, &roots, &mut random)
}
