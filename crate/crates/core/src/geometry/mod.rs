//! Arrangements of lines and smooth conics: data model, validation, the
//! singularity census, common tangents of conic pairs, the built-in catalog
//! and the JSON file format.

mod catalog;
mod census;
mod intersect;
mod io;
mod tangents;


use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::numbers::{AlgebraicElement, FieldElement, NumberError, NumberField};
use crate::poly::HomPoly;

pub use catalog::{catalog, catalog_names, CatalogEntry, CATALOG};
pub use census::{
    census, census_exact, Census, CensusOptions, Contact, LocalType, PairProfile, PairSummary, SingularPoint,
};
pub use io::{from_json, to_json, to_json_value};
pub use tangents::{common_tangents_exact, common_tangents_mod_p, dual_conic};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("component {0} is a singular conic")]
    SingularConic(usize),
    #[error("components {0} and {1} define the same curve")]
    DuplicateComponent(usize, usize),
    #[error("component {0} has all coefficients zero")]
    ZeroComponent(usize),
    #[error("arrangement has no components")]
    Empty,
    #[error("component {0} has coefficients outside the arrangement field")]
    FieldMismatch(usize),
    #[error("cannot read arrangement: {0}")]
    Parse(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),
    #[error("no good prime after {0} draws")]
    NoGoodPrime(usize),
    #[error("no generic projection found for components {0} and {1}")]
    ProjectionFailed(usize, usize),
    #[error("census differs between primes: {0}")]
    PrimeDisagreement(String),
    #[error("contact orders of components {i} and {j} sum to {sum}, expected {expected}")]
    BezoutViolation {
        i: usize,
        j: usize,
        sum: u32,
        expected: u32,
    },
    #[error(transparent)]
    Number(#[from] NumberError),
}

impl GeometryError {
    /// Errors caused by the input rather than by an internal inconsistency.
    pub fn is_validation_error(&self) -> bool {
        matches!(
            self,
            GeometryError::SingularConic(_)
                | GeometryError::DuplicateComponent(..)
                | GeometryError::ZeroComponent(_)
                | GeometryError::Empty
                | GeometryError::FieldMismatch(_)
                | GeometryError::Parse(_)
                | GeometryError::UnknownName(_)
        )
    }
}

/// A line `ax + by + cz` or a conic `ax² + by² + cz² + dxy + exz + fyz`.
#[derive(Debug, Clone, PartialEq)]
pub enum Component<S> {
    Line([S; 3]),
    Conic([S; 6]),
}

impl<S: FieldElement> Component<S> {
    pub fn degree(&self) -> u32 {
        match self {
            Component::Line(_) => 1,
            Component::Conic(_) => 2,
        }
    }

    pub fn is_line(&self) -> bool {
        matches!(self, Component::Line(_))
    }

    pub fn coeffs(&self) -> &[S] {
        match self {
            Component::Line(c) => c,
            Component::Conic(c) => c,
        }
    }

    pub fn form(&self) -> HomPoly<S> {
        match self {
            Component::Line(c) => HomPoly::linear(c),
            Component::Conic(c) => HomPoly::quadratic(c),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs().iter().all(|c| c.is_zero())
    }

    pub fn try_map<T: FieldElement, E>(&self, f: impl Fn(&S) -> Result<T, E>) -> Result<Component<T>, E> {
        Ok(match self {
            Component::Line([a, b, c]) => Component::Line([f(a)?, f(b)?, f(c)?]),
            Component::Conic([a, b, c, d, e, g]) => Component::Conic([f(a)?, f(b)?, f(c)?, f(d)?, f(e)?, f(g)?]),
        })
    }

    pub fn map<T: FieldElement>(&self, f: impl Fn(&S) -> T) -> Component<T> {
        self.try_map::<T, std::convert::Infallible>(|c| Ok(f(c)))
            .unwrap_or_else(|e| match e {})
    }

    /// Same curve: proportional coefficient vectors of the same kind.
    pub fn same_curve(&self, other: &Self) -> bool {
        if self.degree() != other.degree() {
            return false;
        }
        let (a, b) = (self.coeffs(), other.coeffs());
        (0..a.len()).all(|i| (i + 1..a.len()).all(|j| a[i].mul(&b[j]) == a[j].mul(&b[i])))
    }

    /// A conic is smooth when the determinant of its symmetric matrix is
    /// nonzero; lines are always smooth.
    pub fn is_smooth(&self) -> bool {
        match self {
            Component::Line(_) => true,
            Component::Conic(c) => !conic_det2(c).is_zero(),
        }
    }
}

/// Twice the symmetric matrix of a conic: `[[2a, d, e], [d, 2b, f], [e, f, 2c]]`.
pub fn conic_matrix2<S: FieldElement>(c: &[S; 6]) -> [[S; 3]; 3] {
    let two = c[0].from_i64_like(2);
    let [a, b, cc, d, e, f] = c;
    [
        [two.mul(a), d.clone(), e.clone()],
        [d.clone(), two.mul(b), f.clone()],
        [e.clone(), f.clone(), two.mul(cc)],
    ]
}

/// Determinant of [`conic_matrix2`], which is 8 times the determinant of the
/// symmetric matrix of the conic.
pub fn conic_det2<S: FieldElement>(c: &[S; 6]) -> S {
    let m = conic_matrix2(c);
    let t = |i: usize, j: usize, k: usize, l: usize| m[i][k].mul(&m[j][l]).sub(&m[i][l].mul(&m[j][k]));
    m[0][0]
        .mul(&t(1, 2, 1, 2))
        .sub(&m[0][1].mul(&t(1, 2, 0, 2)))
        .add(&m[0][2].mul(&t(1, 2, 0, 1)))
}

#[derive(Debug, Clone)]
pub struct Arrangement {
    pub name: Option<String>,
    pub field: Arc<NumberField>,
    /// Lines first, then conics.
    pub components: Vec<Component<AlgebraicElement>>,
}

impl Arrangement {
    pub fn new(
        name: Option<String>,
        field: Arc<NumberField>,
        lines: Vec<[AlgebraicElement; 3]>,
        conics: Vec<[AlgebraicElement; 6]>,
    ) -> Self {
        let components = lines
            .into_iter()
            .map(Component::Line)
            .chain(conics.into_iter().map(Component::Conic))
            .collect();
        Arrangement {
            name,
            field,
            components,
        }
    }

    /// Number of lines.
    pub fn d(&self) -> u32 {
        self.components.iter().filter(|c| c.is_line()).count() as u32
    }

    /// Number of conics.
    pub fn k(&self) -> u32 {
        self.components.len() as u32 - self.d()
    }

    /// Degree of the defining polynomial, `d + 2k`.
    pub fn m(&self) -> u32 {
        self.components.iter().map(|c| c.degree()).sum()
    }

    pub fn defining_polynomial(&self) -> HomPoly<AlgebraicElement> {
        let forms: Vec<_> = self.components.iter().map(|c| c.form()).collect();
        HomPoly::product(&forms)
    }

    pub fn display_name(&self) -> &str {
        self.name.as_deref().unwrap_or("unnamed")
    }
}

/// Checks that lines are nonzero, conics smooth and components pairwise
/// distinct.
pub fn validate(arr: &Arrangement) -> Result<(), GeometryError> {
    if arr.components.is_empty() {
        return Err(GeometryError::Empty);
    }
    let zero = arr.field.zero();
    for (i, c) in arr.components.iter().enumerate() {
        if c.coeffs().iter().any(|x| !x.same_field(&zero)) {
            return Err(GeometryError::FieldMismatch(i));
        }
        if c.is_zero() {
            return Err(GeometryError::ZeroComponent(i));
        }
        if !c.is_smooth() {
            return Err(GeometryError::SingularConic(i));
        }
    }
    for i in 0..arr.components.len() {
        for j in i + 1..arr.components.len() {
            if arr.components[i].same_curve(&arr.components[j]) {
                return Err(GeometryError::DuplicateComponent(i, j));
            }
        }
    }
    Ok(())
}

/// The invariants `(m; n2, t, n3)` together with `d` and `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WeakCombinatorics {
    pub m: u32,
    pub d: u32,
    pub k: u32,
    pub n2: u64,
    pub t: u64,
    pub n3: u64,
}

impl WeakCombinatorics {
    pub fn new(d: u32, k: u32, n2: u64, t: u64, n3: u64) -> Self {
        WeakCombinatorics {
            m: d + 2 * k,
            d,
            k,
            n2,
            t,
            n3,
        }
    }

    /// Total Tjurina number `n2 + 3t + 4n3`.
    pub fn tau(&self) -> u64 {
        self.n2 + 3 * self.t + 4 * self.n3
    }
}

fn binom2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error, Serialize)]
#[error("4C(k,2) + 2kd + C(d,2) = {lhs} but n2 + 2t + 3n3 = {rhs}")]
pub struct CombinatorialViolation {
    pub lhs: u64,
    pub rhs: u64,
}

/// Counts pairwise intersections with multiplicity in two ways:
/// `4 C(k,2) + 2kd + C(d,2) = n2 + 2t + 3n3`.
pub fn combinatorial_check(n2: u64, t: u64, n3: u64, d: u32, k: u32) -> Result<u64, CombinatorialViolation> {
    let (d, k) = (d as u64, k as u64);
    let lhs = 4 * binom2(k) + 2 * k * d + binom2(d);
    let rhs = n2 + 2 * t + 3 * n3;
    if lhs == rhs {
        Ok(lhs)
    } else {
        Err(CombinatorialViolation { lhs, rhs })
    }
}
