//! Singularity census: every intersection point of the arrangement with its
//! incident components, contact orders and local type.
//!
//! The default mode reduces the arrangement modulo several random primes and
//! computes all points in `F_{p^12}`, which contains every point field that
//! can occur (degrees 1 to 4). The censuses at different primes must agree.
//! The exact mode works over the arrangement's own field and succeeds only
//! when all intersection points are defined over it.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::intersect::{intersect_all, normalize, IntersectError, RawPoint};
use super::{Arrangement, Component, GeometryError, WeakCombinatorics};
use crate::numbers::{
    draw_prime, roots_in_field, roots_in_number_field, AlgebraicElement, ExtField, FieldElement, Fp, FpExt,
    NumberError, Rational,
};

/// Degree of the comparison field `F_{p^12}`; 12 = lcm(1, 2, 3, 4).
const EXTENSION_DEGREE: usize = 12;
const MAX_BAD_PRIMES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusOptions {
    pub primes: usize,
    pub seed: u64,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions { primes: 3, seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum LocalType {
    Node,
    Tacnode,
    OrdinaryTriple,
    OutOfClass(String),
}

impl LocalType {
    /// Classifies a point from the number of incident components and the
    /// contact orders of the pairs meeting there.
    pub fn classify(incident: usize, contacts: &[u32]) -> LocalType {
        match incident {
            2 => match contacts[0] {
                1 => LocalType::Node,
                2 => LocalType::Tacnode,
                3 => LocalType::OutOfClass("A5 contact".into()),
                4 => LocalType::OutOfClass("A7 contact".into()),
                c => LocalType::OutOfClass(format!("contact order {c}")),
            },
            3 if contacts.iter().all(|&c| c == 1) => LocalType::OrdinaryTriple,
            3 => LocalType::OutOfClass("non-ordinary triple".into()),
            4 => LocalType::OutOfClass("quadruple point".into()),
            n => LocalType::OutOfClass(format!("{n}-fold point")),
        }
    }

    pub fn is_in_class(&self) -> bool {
        !matches!(self, LocalType::OutOfClass(_))
    }

    /// Milnor and Tjurina number of the in-class types (A1, A3, D4).
    pub fn tau(&self) -> Option<u64> {
        match self {
            LocalType::Node => Some(1),
            LocalType::Tacnode => Some(3),
            LocalType::OrdinaryTriple => Some(4),
            LocalType::OutOfClass(_) => None,
        }
    }
}

impl fmt::Display for LocalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalType::Node => f.write_str("node"),
            LocalType::Tacnode => f.write_str("tacnode"),
            LocalType::OrdinaryTriple => f.write_str("ordinary triple point"),
            LocalType::OutOfClass(s) => write!(f, "out of class ({s})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Contact {
    pub i: usize,
    pub j: usize,
    pub order: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingularPoint {
    pub local_type: LocalType,
    /// Number of components through the point.
    pub multiplicity: usize,
    pub incident: Vec<usize>,
    pub contacts: Vec<Contact>,
    /// Exact coordinates, normalized so the first nonzero one is 1, when they
    /// are known and certified.
    pub coordinates: Option<[String; 3]>,
}

impl SingularPoint {
    fn signature(&self) -> (LocalType, Vec<usize>, Vec<Contact>) {
        (self.local_type.clone(), self.incident.clone(), self.contacts.clone())
    }
}

/// Numbers of conic pairs meeting in 2, 3 and 4 points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct PairProfile {
    pub m2: u64,
    pub m3: u64,
    pub m4: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairSummary {
    pub i: usize,
    pub j: usize,
    /// Number of distinct intersection points.
    pub points: usize,
    /// Sum of contact orders, equal to the product of the degrees.
    pub contact_sum: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Census {
    pub n2: u64,
    pub t: u64,
    pub n3: u64,
    pub in_class: bool,
    /// `n2 + 3t + 4n3`, only for in-class arrangements.
    pub tau: Option<u64>,
    pub pair_profile: PairProfile,
    pub points: Vec<SingularPoint>,
    pub pairs: Vec<PairSummary>,
    /// Primes used; empty for an exact census.
    pub primes: Vec<u64>,
    pub exact: bool,
}

impl Census {
    pub fn weak_combinatorics(&self, d: u32, k: u32) -> WeakCombinatorics {
        WeakCombinatorics::new(d, k, self.n2, self.t, self.n3)
    }

    /// `(n2, t, n3, m2, m3, m4)`.
    pub fn counts(&self) -> (u64, u64, u64, u64, u64, u64) {
        let p = self.pair_profile;
        (self.n2, self.t, self.n3, p.m2, p.m3, p.m4)
    }

    pub fn out_of_class_points(&self) -> impl Iterator<Item = &SingularPoint> {
        self.points.iter().filter(|p| !p.local_type.is_in_class())
    }

    /// Tacnodes where two conics are tangent.
    pub fn conic_pair_tacnodes(&self, arr: &Arrangement) -> u64 {
        self.points
            .iter()
            .filter(|p| p.local_type == LocalType::Tacnode && p.incident.iter().all(|&i| !arr.components[i].is_line()))
            .count() as u64
    }

    /// Whether every pair's contact orders add up to the product of degrees.
    pub fn bezout_holds(&self, arr: &Arrangement) -> bool {
        let n = arr.components.len();
        self.pairs.len() == n * (n - 1) / 2
            && self
                .pairs
                .iter()
                .all(|p| p.contact_sum == arr.components[p.i].degree() * arr.components[p.j].degree())
    }
}

fn assemble<P: FieldElement>(
    raw: &[RawPoint<P>],
    pairs: &BTreeMap<(usize, usize), (usize, u32)>,
    is_conic: &[bool],
    coordinates: impl Fn(&RawPoint<P>) -> Option<[String; 3]>,
) -> Census {
    let mut points: Vec<SingularPoint> = raw
        .iter()
        .map(|r| {
            let contacts: Vec<Contact> = r
                .contacts
                .iter()
                .map(|(&(i, j), &order)| Contact { i, j, order })
                .collect();
            let orders: Vec<u32> = contacts.iter().map(|c| c.order).collect();
            SingularPoint {
                local_type: LocalType::classify(r.incident.len(), &orders),
                multiplicity: r.incident.len(),
                incident: r.incident.iter().copied().collect(),
                contacts,
                coordinates: coordinates(r),
            }
        })
        .collect();
    points.sort_by(|a, b| (&a.incident, &a.contacts, &a.coordinates).cmp(&(&b.incident, &b.contacts, &b.coordinates)));
    let count = |t: LocalType| points.iter().filter(|p| p.local_type == t).count() as u64;
    let (n2, t, n3) = (
        count(LocalType::Node),
        count(LocalType::Tacnode),
        count(LocalType::OrdinaryTriple),
    );
    let in_class = points.iter().all(|p| p.local_type.is_in_class());
    let mut profile = PairProfile::default();
    for (&(i, j), &(npts, _)) in pairs {
        if is_conic[i] && is_conic[j] {
            match npts {
                2 => profile.m2 += 1,
                3 => profile.m3 += 1,
                4 => profile.m4 += 1,
                _ => {}
            }
        }
    }
    Census {
        n2,
        t,
        n3,
        in_class,
        tau: in_class.then_some(n2 + 3 * t + 4 * n3),
        pair_profile: profile,
        points,
        pairs: pairs
            .iter()
            .map(|(&(i, j), &(points, contact_sum))| PairSummary {
                i,
                j,
                points,
                contact_sum,
            })
            .collect(),
        primes: Vec::new(),
        exact: false,
    }
}

fn is_conic_mask(arr: &Arrangement) -> Vec<bool> {
    arr.components.iter().map(|c| !c.is_line()).collect()
}

/// Reduction of the arrangement modulo `p`, or `None` when `p` is bad: a
/// denominator vanishes, the minimal polynomial has no root, or a component
/// degenerates or collides with another.
fn reduce_arrangement(arr: &Arrangement, p: u64) -> Result<Option<Vec<Component<Fp>>>, GeometryError> {
    let red = match arr.field.reduction(p, 0) {
        Ok(r) => r,
        Err(NumberError::BadPrime { .. }) => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let mut comps = Vec::with_capacity(arr.components.len());
    for c in &arr.components {
        match c.try_map(|x| red.reduce(x)) {
            Ok(r) => comps.push(r),
            Err(NumberError::BadPrime { .. }) => return Ok(None),
            Err(e) => return Err(e.into()),
        }
    }
    let good = comps.iter().all(|c| !c.is_zero() && c.is_smooth())
        && (0..comps.len()).all(|i| (i + 1..comps.len()).all(|j| !comps[i].same_curve(&comps[j])));
    Ok(good.then_some(comps))
}

/// Exact coordinates of a point whose normalized coordinates lie in `F_p`,
/// by rational reconstruction, accepted only if the candidate lies on exactly
/// the incident components.
fn certify_rational_point(arr: &Arrangement, r: &RawPoint<FpExt>, p: u64) -> Option<[String; 3]> {
    let mut q: Vec<Rational> = Vec::with_capacity(3);
    for c in &r.coords {
        q.push(Rational::reconstruct(c.as_base()?, p)?);
    }
    let pt = [0, 1, 2].map(|i| arr.field.from_rational(q[i].clone()));
    for (i, c) in arr.components.iter().enumerate() {
        if c.form().eval(&pt).is_zero() != r.incident.contains(&i) {
            return None;
        }
    }
    Some([0, 1, 2].map(|i| q[i].to_string()))
}

struct PrimeCensus {
    p: u64,
    raw: Vec<RawPoint<FpExt>>,
    pairs: BTreeMap<(usize, usize), (usize, u32)>,
}

fn census_at_prime(comps: &[Component<Fp>], p: u64, rng: &mut ChaCha8Rng) -> Result<PrimeCensus, GeometryError> {
    let field = ExtField::random(p, EXTENSION_DEGREE, rng);
    let lifted: Vec<Component<FpExt>> = comps.iter().map(|c| c.map(|x| field.embed_fp(x))).collect();
    let roots = |f: &crate::numbers::UniPoly<FpExt>| roots_in_field(f);
    let mut random = || field.embed(rng.gen_range(0..p));
    let (raw, pairs) = intersect_all(&lifted, &roots, &mut random).map_err(|e| match e {
        IntersectError::Incomplete { i, j, sum, expected } => GeometryError::BezoutViolation { i, j, sum, expected },
        IntersectError::ProjectionFailed(i, j) => GeometryError::ProjectionFailed(i, j),
    })?;
    Ok(PrimeCensus { p, raw, pairs })
}

fn summary(c: &Census) -> String {
    format!("(n2, t, n3) = ({}, {}, {}), {} points", c.n2, c.t, c.n3, c.points.len())
}

/// Multi-modular census. The arrangement must have passed
/// [`super::validate`].
pub fn census(arr: &Arrangement, opts: &CensusOptions) -> Result<Census, GeometryError> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let is_conic = is_conic_mask(arr);
    let mut bad = 0;
    let mut first: Option<Census> = None;
    let mut primes = Vec::new();
    while primes.len() < opts.primes.max(1) {
        let p = draw_prime(&mut rng);
        let Some(comps) = reduce_arrangement(arr, p)? else {
            bad += 1;
            if bad > MAX_BAD_PRIMES {
                return Err(GeometryError::NoGoodPrime(bad));
            }
            continue;
        };
        let pc = census_at_prime(&comps, p, &mut rng)?;
        let c = if first.is_none() {
            assemble(&pc.raw, &pc.pairs, &is_conic, |r| certify_rational_point(arr, r, pc.p))
        } else {
            assemble(&pc.raw, &pc.pairs, &is_conic, |_| None)
        };
        if let Some(f) = &first {
            let sig = |c: &Census| {
                let mut v: Vec<_> = c.points.iter().map(|p| p.signature()).collect();
                v.sort();
                (v, c.pairs.clone())
            };
            if sig(f) != sig(&c) {
                return Err(GeometryError::PrimeDisagreement(format!(
                    "prime {} gives {}, prime {p} gives {}",
                    primes[0],
                    summary(f),
                    summary(&c)
                )));
            }
        } else {
            first = Some(c);
        }
        primes.push(p);
    }
    let mut c = first.expect("at least one prime");
    c.primes = primes;
    Ok(c)
}

/// Census over the arrangement's own field. Returns `Ok(None)` when some
/// intersection point is not defined over that field (or has coordinates
/// too large for the root finder), in which case only the modular census is
/// available.
pub fn census_exact(arr: &Arrangement, seed: u64) -> Result<Option<Census>, GeometryError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let zero = arr.field.zero();
    let roots = |f: &crate::numbers::UniPoly<AlgebraicElement>| roots_in_number_field(f);
    let mut random = || zero.from_i64_like(rng.gen_range(-7..=7));
    let (raw, pairs) = match intersect_all(&arr.components, &roots, &mut random) {
        Ok(v) => v,
        Err(IntersectError::Incomplete { .. }) => return Ok(None),
        Err(IntersectError::ProjectionFailed(i, j)) => return Err(GeometryError::ProjectionFailed(i, j)),
    };
    let mut c = assemble(&raw, &pairs, &is_conic_mask(arr), |r| {
        Some(normalize(r.coords.clone()).map(|x| format!("{x:?}")))
    });
    c.exact = true;
    Ok(Some(c))
}
