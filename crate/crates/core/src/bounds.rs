//! Spectra, semicontinuity bounds, the orbifold Miyaoka-Yau inequality and
//! lower bounds on the minimal degree of a Jacobian relation.
//!
//! Everything is exact rational arithmetic.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::geometry::WeakCombinatorics;
use crate::numbers::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("alpha = {alpha} is outside the validity range [0, {max}] for a {kind}")]
    AlphaOutOfRange {
        kind: SingType,
        alpha: Rational,
        max: Rational,
    },
    #[error("not applicable: {0}")]
    NotApplicable(String),
}

fn q(n: i64, d: i64) -> Rational {
    Rational::frac(n, d)
}

fn int(n: i64) -> Rational {
    Rational::from_int(n)
}

/// A multiset of spectral numbers.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct Spectrum(BTreeMap<Rational, u64>);

impl Spectrum {
    pub fn new() -> Self {
        Spectrum::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (Rational, u64)>>(pairs: I) -> Self {
        let mut s = Spectrum::new();
        for (a, n) in pairs {
            s.add(a, n);
        }
        s
    }

    pub fn add(&mut self, alpha: Rational, n: u64) {
        if n > 0 {
            *self.0.entry(alpha).or_insert(0) += n;
        }
    }

    /// `Sp(x^m) = {1/m, ..., (m-1)/m}`.
    pub fn of_power(m: u32) -> Self {
        Spectrum::from_pairs((1..m as i64).map(|j| (q(j, m as i64), 1)))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Rational, u64)> {
        self.0.iter().map(|(a, n)| (a, *n))
    }

    pub fn multiplicity(&self, alpha: &Rational) -> u64 {
        self.0.get(alpha).copied().unwrap_or(0)
    }

    /// Total multiplicity, the Milnor number.
    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    /// Invariance under `alpha -> center - alpha`; `center` is 1 for curves.
    pub fn is_symmetric_about(&self, center: &Rational) -> bool {
        let two_c = center + center;
        self.0.iter().all(|(a, n)| self.multiplicity(&(&two_c - a)) == *n)
    }

    /// Sum of multiplicities of the spectral numbers in `(lo, hi]`.
    pub fn deg_b(&self, lo: &Rational, hi: &Rational) -> u64 {
        assert!(lo < hi, "empty interval");
        self.0.iter().filter(|(a, _)| *a > lo && *a <= hi).map(|(_, n)| n).sum()
    }
}

/// Spectrum of `f(x) + g(y)`: all pairwise sums.
pub fn thom_sebastiani(a: &Spectrum, b: &Spectrum) -> Spectrum {
    let mut out = Spectrum::new();
    for (x, n) in a.entries() {
        for (y, k) in b.entries() {
            out.add(x + y, n * k);
        }
    }
    out
}

pub fn deg_b(sp: &Spectrum, lo: &Rational, hi: &Rational) -> u64 {
    sp.deg_b(lo, hi)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SingType {
    A1,
    A3,
    D4,
    /// `m` lines through a point.
    CentralMultiple(u32),
}

impl fmt::Display for SingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingType::A1 => f.write_str("node"),
            SingType::A3 => f.write_str("tacnode"),
            SingType::D4 => f.write_str("ordinary triple point"),
            SingType::CentralMultiple(m) => write!(f, "ordinary {m}-fold point"),
        }
    }
}

impl SingType {
    pub fn mu(&self) -> u64 {
        match self {
            SingType::A1 => 1,
            SingType::A3 => 3,
            SingType::D4 => 4,
            SingType::CentralMultiple(m) => (*m as u64 - 1).pow(2),
        }
    }

    /// Log canonical threshold.
    pub fn lct(&self) -> Rational {
        match self {
            SingType::A1 => int(1),
            SingType::A3 => q(3, 4),
            SingType::D4 => q(2, 3),
            SingType::CentralMultiple(m) => q(2, *m as i64),
        }
    }
}

pub fn spectrum(s: SingType) -> Spectrum {
    match s {
        SingType::A1 => Spectrum::from_pairs([(int(1), 1)]),
        SingType::A3 => Spectrum::from_pairs([(q(3, 4), 1), (int(1), 1), (q(5, 4), 1)]),
        SingType::D4 => Spectrum::from_pairs([(q(2, 3), 1), (int(1), 2), (q(4, 3), 1)]),
        SingType::CentralMultiple(m) => {
            assert!(m >= 2, "a multiple point needs at least two lines");
            let m = m as i64;
            let mut s = Spectrum::new();
            for j in 1..m {
                s.add(q(j + 1, m), j as u64);
            }
            for j in 2..m {
                s.add(q(m + j - 1, m), (m - j) as u64);
            }
            s
        }
    }
}

/// Local orbifold Euler number of `(P^2, alpha C)` at a point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum OrbifoldEuler {
    Exact(Rational),
    /// Only an upper bound is known; inequalities use the bound.
    AtMost(Rational),
}

impl OrbifoldEuler {
    pub fn value(&self) -> &Rational {
        match self {
            OrbifoldEuler::Exact(v) | OrbifoldEuler::AtMost(v) => v,
        }
    }
}

pub fn orbifold_euler(s: SingType, alpha: &Rational) -> Result<OrbifoldEuler, BoundsError> {
    let max = match s {
        SingType::A1 => int(1),
        SingType::A3 => q(1, 4),
        SingType::D4 => q(2, 3),
        SingType::CentralMultiple(_) => {
            return Err(BoundsError::NotApplicable(format!(
                "no orbifold Euler number for a {s}"
            )))
        }
    };
    if alpha.is_negative() || *alpha > max {
        return Err(BoundsError::AlphaOutOfRange {
            kind: s,
            alpha: alpha.clone(),
            max,
        });
    }
    let one = int(1);
    Ok(match s {
        SingType::A1 => {
            let v = &one - alpha;
            OrbifoldEuler::Exact(&v * &v)
        }
        SingType::A3 => OrbifoldEuler::Exact(&one - &(&int(2) * alpha)),
        _ => {
            let v = &one - &(&q(3, 2) * alpha);
            OrbifoldEuler::AtMost(&v * &v)
        }
    })
}

/// One named inequality `lhs <= rhs`; `holds` is set only when applicable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: Option<bool>,
    pub applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    fn le(name: &str, lhs: Rational, rhs: Rational) -> Self {
        let holds = Some(lhs <= rhs);
        Check {
            name: name.into(),
            lhs,
            rhs,
            holds,
            applicable: true,
            note: None,
        }
    }

    fn skipped(name: &str, lhs: Rational, rhs: Rational, why: &str) -> Self {
        Check {
            name: name.into(),
            lhs,
            rhs,
            holds: None,
            applicable: false,
            note: Some(why.into()),
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Not applicable, or applicable and satisfied.
    pub fn ok(&self) -> bool {
        self.holds != Some(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct BoundsReport {
    pub checks: Vec<Check>,
}

impl BoundsReport {
    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn violations(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.ok())
    }
}

pub const PROP2_TACNODES_TRIPLES: &str = "semicontinuity: t + n3";
pub const PROP2_TRIPLES: &str = "semicontinuity: n3";
pub const PROP2_TAU: &str = "semicontinuity: n2 + 3t + 4n3";
pub const PROP2_ASYMPTOTIC: &str = "semicontinuity: t + n3, closed form in m";
pub const CENTRAL_ESTIMATE: &str = "central spectrum: deg over (1/3, 4/3] vs estimate";
pub const CENTRAL_ESTIMATE_LOW: &str = "central spectrum: deg over (-1/3, 2/3] vs estimate";
pub const SEMICONT_EXACT: &str = "semicontinuity with exact central spectrum";
pub const SEMICONT_EXACT_LOW: &str = "semicontinuity with exact central spectrum, (-1/3, 2/3]";
pub const LOG_MY: &str = "orbifold Miyaoka-Yau at alpha = 1/4";
pub const HIRZEBRUCH: &str = "Hirzebruch-type: d + 4t <= 20k + n2 + 3n3/4";
pub const MDR_LOWER: &str = "mdr >= alpha_C m - 2";
pub const FREE_CEILING: &str = "free: ceil(alpha_C m - 2) <= floor((m - 1)/2)";

/// `m = 3m' + eps` with `eps` in `{1, 2, 3}`.
pub fn m_prime(m: u32) -> (u64, u64) {
    assert!(m >= 1);
    let mp = (m as u64 - 1) / 3;
    (mp, m as u64 - 3 * mp)
}

/// `(S1, S2)`, the lower estimates for the central spectral mass below 1/3
/// and above 4/3.
pub fn central_estimates(m: u32) -> (u64, u64) {
    let (mp, _) = m_prime(m);
    (mp * mp.saturating_sub(1) / 2, mp * (2 * mp).saturating_sub(1))
}

/// The per-point spectral mass of the in-class points: `n2 + 3t + 4n3`
/// over `(1/3, 4/3]` and `n3` over `(-1/3, 2/3]`.
pub fn local_spectral_mass(w: &WeakCombinatorics, lo: &Rational, hi: &Rational) -> u64 {
    [(SingType::A1, w.n2), (SingType::A3, w.t), (SingType::D4, w.n3)]
        .iter()
        .map(|&(s, n)| n * spectrum(s).deg_b(lo, hi))
        .sum()
}

pub fn check_prop2(w: &WeakCombinatorics) -> Vec<Check> {
    let m = w.m as i64;
    let (mp, eps) = m_prime(w.m);
    let (mp, eps) = (mp as i64, eps as i64);
    let penalty = mp * (5 * mp - 3) / 2;
    let t_n3 = (w.t + w.n3) as i64;
    let binom = (m - 1) * (m - 2) / 2;
    let mut out = vec![
        Check::le(PROP2_TACNODES_TRIPLES, int(t_n3), int(binom + w.k as i64 - penalty)),
        Check::le(PROP2_TRIPLES, int(w.n3 as i64), int((mp + 1) * (2 * mp + 1))),
        Check::le(PROP2_TAU, int(w.tau() as i64), int((m - 1) * (m - 1) - penalty)),
        Check::le(
            PROP2_ASYMPTOTIC,
            int(t_n3),
            q(4 * m * m + m * (10 * eps - 9) - 5 * eps * eps - 9 * eps + 18, 18),
        ),
    ];
    if w.m >= 2 {
        let central = spectrum(SingType::CentralMultiple(w.m));
        let (s1, s2) = central_estimates(w.m);
        let hi_mass = central.deg_b(&q(1, 3), &q(4, 3));
        let lo_mass = central.deg_b(&q(-1, 3), &q(2, 3));
        out.push(Check::le(
            CENTRAL_ESTIMATE,
            int(hi_mass as i64),
            int((m - 1) * (m - 1) - (s1 + s2) as i64),
        ));
        out.push(Check::le(
            CENTRAL_ESTIMATE_LOW,
            int(lo_mass as i64),
            int((mp + 1) * (2 * mp + 1)),
        ));
        out.push(Check::le(
            SEMICONT_EXACT,
            int(local_spectral_mass(w, &q(1, 3), &q(4, 3)) as i64),
            int(hi_mass as i64),
        ));
        out.push(Check::le(
            SEMICONT_EXACT_LOW,
            int(local_spectral_mass(w, &q(-1, 3), &q(2, 3)) as i64),
            int(lo_mass as i64),
        ));
    }
    out
}

/// Both sides of the orbifold Miyaoka-Yau inequality at `alpha`:
/// `sum 3(alpha(mu_p - 1) + 1 - e_orb(p)) <= (3 alpha - alpha^2) m^2 - 3 alpha m`.
pub fn log_my_sides(w: &WeakCombinatorics, alpha: &Rational) -> Result<(Rational, Rational), BoundsError> {
    let m = int(w.m as i64);
    let lower = &int(3) / &m;
    if *alpha < lower || *alpha > q(1, 4) {
        return Err(BoundsError::NotApplicable(format!(
            "alpha = {alpha} is outside [3/m, 1/4] = [{lower}, 1/4]"
        )));
    }
    let mut lhs = int(0);
    for (s, n) in [(SingType::A1, w.n2), (SingType::A3, w.t), (SingType::D4, w.n3)] {
        let e = orbifold_euler(s, alpha)?;
        let per = &int(3) * &(&(&(alpha * &int(s.mu() as i64 - 1)) + &int(1)) - e.value());
        lhs = &lhs + &(&per * &int(n as i64));
    }
    let rhs = &(&(&(&int(3) * alpha) - &(alpha * alpha)) * &(&m * &m)) - &(&(&int(3) * alpha) * &m);
    Ok((lhs, rhs))
}

pub fn check_log_my(w: &WeakCombinatorics, alpha: &Rational) -> Check {
    match log_my_sides(w, alpha) {
        Ok((lhs, rhs)) => Check::le(LOG_MY, lhs, rhs),
        Err(e) => Check::skipped(LOG_MY, int(0), int(0), &e.to_string()),
    }
}

pub fn check_hirzebruch(w: &WeakCombinatorics) -> Check {
    let lhs = int((w.d as u64 + 4 * w.t) as i64);
    let rhs = &int((20 * w.k as u64 + w.n2) as i64) + &(&q(3, 4) * &int(w.n3 as i64));
    if 2 * w.k + w.d >= 12 {
        Check::le(HIRZEBRUCH, lhs, rhs)
    } else {
        Check::skipped(HIRZEBRUCH, lhs, rhs, "requires 2k + d >= 12")
    }
}

/// Minimal log canonical threshold over the in-class types present; 1 when
/// the curve is smooth.
pub fn arnold_exponent(w: &WeakCombinatorics) -> Rational {
    [(SingType::A1, w.n2), (SingType::A3, w.t), (SingType::D4, w.n3)]
        .iter()
        .filter(|(_, n)| *n > 0)
        .map(|(s, _)| s.lct())
        .min()
        .unwrap_or_else(|| int(1))
}

/// `alpha m - 2` and its integer ceiling, the least `mdr` it allows.
pub fn mdr_lower_bound(alpha: &Rational, m: u32) -> (Rational, i64) {
    let b = &(alpha * &int(m as i64)) - &int(2);
    let c = b.ceil().try_into().expect("small bound");
    (b, c)
}

/// Largest degree of a free curve whose Arnold exponent is at least `alpha`:
/// the largest `m` with `ceil(alpha m - 2) <= floor((m - 1)/2)`.
pub fn max_free_degree(alpha: &Rational) -> u32 {
    assert!(*alpha > q(1, 2), "unbounded for alpha <= 1/2");
    // Past 3/(2 alpha - 1) even the rational inequality fails; below it the
    // integer version is not monotone in m.
    let cap: i64 = (&int(3) / &(&(&int(2) * alpha) - &int(1)))
        .floor()
        .try_into()
        .expect("small cap");
    (1..=cap as u32)
        .filter(|&m| mdr_lower_bound(alpha, m).1 <= (m as i64 - 1) / 2)
        .max()
        .unwrap_or(0)
}

/// Facts about the Jacobian syzygies, when known.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MdrFacts {
    pub mdr: u32,
    pub free: bool,
}

pub fn arnold_and_mdr_bound(w: &WeakCombinatorics, facts: Option<MdrFacts>) -> Vec<Check> {
    let alpha = arnold_exponent(w);
    let (bound, least) = mdr_lower_bound(&alpha, w.m);
    let note = format!("alpha_C = {alpha}, so mdr >= {least}");
    let lower = match facts {
        Some(f) => Check::le(MDR_LOWER, bound.clone(), int(f.mdr as i64)),
        None => Check::skipped(MDR_LOWER, bound.clone(), int(0), "mdr not computed"),
    }
    .with_note(note);
    let half = (w.m as i64 - 1) / 2;
    let ceiling = match facts {
        Some(f) if f.free => Check::le(FREE_CEILING, int(least), int(half)),
        _ => Check::skipped(FREE_CEILING, int(least), int(half), "curve not known to be free"),
    };
    vec![lower, ceiling]
}

/// Every check for an in-class arrangement.
pub fn bounds_report(w: &WeakCombinatorics, facts: Option<MdrFacts>) -> BoundsReport {
    let mut checks = check_prop2(w);
    checks.push(check_log_my(w, &q(1, 4)));
    checks.push(check_hirzebruch(w));
    checks.extend(arnold_and_mdr_bound(w, facts));
    BoundsReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(d: u32, k: u32, n2: u64, t: u64, n3: u64) -> WeakCombinatorics {
        WeakCombinatorics::new(d, k, n2, t, n3)
    }

    #[test]
    fn small_spectra() {
        assert_eq!(spectrum(SingType::A1), Spectrum::from_pairs([(int(1), 1)]));
        assert_eq!(spectrum(SingType::CentralMultiple(3)), spectrum(SingType::D4));
        assert_eq!(spectrum(SingType::CentralMultiple(2)), spectrum(SingType::A1));
        let half = Spectrum::of_power(2);
        assert_eq!(thom_sebastiani(&half, &half), spectrum(SingType::A1));
        assert_eq!(thom_sebastiani(&half, &Spectrum::of_power(4)), spectrum(SingType::A3));
        let cube = Spectrum::of_power(3);
        assert_eq!(thom_sebastiani(&cube, &cube), spectrum(SingType::D4));
    }

    #[test]
    fn deg_b_examples() {
        assert_eq!(spectrum(SingType::A3).deg_b(&q(1, 3), &q(4, 3)), 3);
        assert_eq!(spectrum(SingType::D4).deg_b(&q(-1, 3), &q(2, 3)), 1);
        assert_eq!(spectrum(SingType::A1).deg_b(&q(1, 3), &q(4, 3)), 1);
    }

    #[test]
    fn central_spectrum_of_nine_lines() {
        let s = spectrum(SingType::CentralMultiple(9));
        assert_eq!(s.total(), 64);
        assert_eq!(s.deg_b(&q(1, 3), &q(4, 3)), 51);
        assert_eq!(s.deg_b(&q(-1, 3), &q(2, 3)), 15);
        assert_eq!(central_estimates(9), (1, 6));
    }

    #[test]
    fn orbifold_values() {
        let a = q(1, 4);
        assert_eq!(
            orbifold_euler(SingType::A1, &a).unwrap(),
            OrbifoldEuler::Exact(q(9, 16))
        );
        assert_eq!(orbifold_euler(SingType::A3, &a).unwrap(), OrbifoldEuler::Exact(q(1, 2)));
        assert_eq!(
            orbifold_euler(SingType::D4, &a).unwrap(),
            OrbifoldEuler::AtMost(q(25, 64))
        );
        assert!(matches!(
            orbifold_euler(SingType::A3, &q(1, 3)),
            Err(BoundsError::AlphaOutOfRange { .. })
        ));
        assert!(orbifold_euler(SingType::A1, &q(-1, 5)).is_err());
    }

    #[test]
    fn per_point_log_my_contributions() {
        for (wc, expected) in [
            (w(12, 0, 1, 0, 0), q(21, 16)),
            (w(12, 0, 0, 1, 0), int(3)),
            (w(12, 0, 0, 0, 1), q(261, 64)),
        ] {
            assert_eq!(log_my_sides(&wc, &q(1, 4)).unwrap().0, expected);
        }
    }

    #[test]
    fn log_my_examples() {
        let c = check_log_my(&w(12, 0, 66, 0, 0), &q(1, 4));
        assert_eq!(
            (c.lhs.clone(), c.rhs.clone(), c.holds),
            (q(693, 8), int(90), Some(true))
        );
        let c = check_log_my(&w(0, 6, 60, 0, 0), &q(1, 4));
        assert_eq!((c.lhs.clone(), c.holds), (q(315, 4), Some(true)));
        let c = check_log_my(&w(3, 2, 0, 5, 3), &q(1, 4));
        assert!(!c.applicable && c.holds.is_none());
    }

    #[test]
    fn prop2_examples() {
        let cl7 = check_prop2(&w(3, 2, 0, 5, 3));
        let get = |name: &str| cl7.iter().find(|c| c.name == name).unwrap().clone();
        assert_eq!(
            (get(PROP2_TACNODES_TRIPLES).lhs, get(PROP2_TACNODES_TRIPLES).rhs),
            (int(8), int(10))
        );
        assert_eq!((get(PROP2_TAU).lhs, get(PROP2_TAU).rhs), (int(27), int(29)));
        let hesse = check_prop2(&w(9, 0, 0, 0, 12));
        let c = hesse.iter().find(|c| c.name == PROP2_TRIPLES).unwrap();
        assert_eq!((c.lhs.clone(), c.rhs.clone()), (int(12), int(15)));
        assert!(hesse.iter().chain(cl7.iter()).all(Check::ok));
        let est = hesse.iter().find(|c| c.name == CENTRAL_ESTIMATE).unwrap();
        assert_eq!((est.lhs.clone(), est.rhs.clone()), (int(51), int(57)));
    }

    #[test]
    fn hirzebruch_examples() {
        assert_eq!(check_hirzebruch(&w(12, 0, 66, 0, 0)).holds, Some(true));
        let c = check_hirzebruch(&w(0, 6, 48, 6, 0));
        assert_eq!((c.lhs.clone(), c.rhs.clone(), c.holds), (int(24), int(168), Some(true)));
        assert!(!check_hirzebruch(&w(3, 2, 0, 5, 3)).applicable);
    }

    #[test]
    fn arnold_examples() {
        assert_eq!(arnold_exponent(&w(9, 0, 0, 0, 12)), q(2, 3));
        assert_eq!(mdr_lower_bound(&q(2, 3), 9), (int(4), 4));
        let facts = Some(MdrFacts { mdr: 4, free: true });
        assert!(arnold_and_mdr_bound(&w(9, 0, 0, 0, 12), facts)
            .iter()
            .all(|c| c.holds == Some(true)));
        assert_eq!(mdr_lower_bound(&q(3, 4), 5), (q(7, 4), 2));
        assert_eq!(arnold_exponent(&w(1, 1, 0, 1, 0)), q(3, 4));
        assert_eq!(mdr_lower_bound(&q(3, 4), 3), (q(1, 4), 1));
        assert_eq!(max_free_degree(&q(2, 3)), 9);
        assert_eq!(max_free_degree(&q(3, 4)), 5);
        assert_eq!(max_free_degree(&int(1)), 3);
    }

    #[test]
    fn report_skips_unknown_mdr() {
        let r = bounds_report(&w(1, 1, 0, 1, 0), None);
        assert!(!r.get(MDR_LOWER).unwrap().applicable);
        assert_eq!(r.violations().count(), 0);
        let json = serde_json::to_value(&r).unwrap();
        assert!(json.as_array().unwrap().iter().any(|c| c["name"] == LOG_MY));
    }

    fn arb_weak() -> impl Strategy<Value = WeakCombinatorics> {
        // Random (d, k, t, n3); n2 is then forced by the count identity.
        (0u32..10, 0u32..8, 0u64..30, 0u64..30).prop_filter_map("count identity", |(d, k, t, n3)| {
            let (dd, kk) = (d as i64, k as i64);
            let pairs = 2 * kk * (kk - 1) + 2 * kk * dd + dd * (dd - 1) / 2;
            let n2 = pairs - 2 * t as i64 - 3 * n3 as i64;
            (n2 >= 0 && d + 2 * k >= 2).then(|| w(d, k, n2 as u64, t, n3))
        })
    }

    proptest! {
        #[test]
        fn spectra_are_symmetric_with_total_mu(m in 2u32..16) {
            for s in [SingType::A1, SingType::A3, SingType::D4, SingType::CentralMultiple(m)] {
                let sp = spectrum(s);
                prop_assert!(sp.is_symmetric_about(&int(1)));
                prop_assert_eq!(sp.total(), s.mu());
                prop_assert!(sp.entries().all(|(a, _)| *a > 0 && *a < 2));
            }
        }

        #[test]
        fn central_mass_within_estimates(m in 2u32..40) {
            let s = spectrum(SingType::CentralMultiple(m));
            let (s1, s2) = central_estimates(m);
            let (mp, _) = m_prime(m);
            let mu = (m as u64 - 1).pow(2);
            prop_assert!(s.deg_b(&q(1, 3), &q(4, 3)) <= mu - s1 - s2);
            prop_assert!(s.deg_b(&q(-1, 3), &q(2, 3)) <= (mp + 1) * (2 * mp + 1));
        }

        #[test]
        fn local_mass_matches_closed_form(wc in arb_weak()) {
            prop_assert_eq!(local_spectral_mass(&wc, &q(1, 3), &q(4, 3)), wc.tau());
            prop_assert_eq!(local_spectral_mass(&wc, &q(-1, 3), &q(2, 3)), wc.n3);
        }

        #[test]
        fn log_my_and_count_imply_hirzebruch(wc in arb_weak()) {
            let lm = check_log_my(&wc, &q(1, 4));
            if lm.holds == Some(true) {
                prop_assert_eq!(check_hirzebruch(&wc).holds, Some(true));
            }
        }

        #[test]
        fn mdr_bound_matches_direct_evaluation(n2 in 0u64..3, t in 0u64..3, n3 in 0u64..3, m in 3u32..20) {
            let wc = WeakCombinatorics { m, d: m, k: 0, n2, t, n3 };
            let mut lcts = vec![];
            if n2 > 0 { lcts.push(q(1, 1)); }
            if t > 0 { lcts.push(q(3, 4)); }
            if n3 > 0 { lcts.push(q(2, 3)); }
            let alpha = lcts.into_iter().min().unwrap_or(int(1));
            prop_assert_eq!(arnold_exponent(&wc), alpha.clone());
            let b = &(&alpha * &int(m as i64)) - &int(2);
            prop_assert_eq!(mdr_lower_bound(&alpha, m).0, b);
        }
    }
}
