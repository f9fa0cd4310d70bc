//! Enumeration of the weak combinatorics compatible with freeness, pruning,
//! and the classification of free conic-line arrangements.
//!
//! A free arrangement of `d` lines and `k` conics with exponents
//! `d1 <= d2` satisfies `d1 + d2 = m - 1` and
//! `d1^2 + d1 d2 + d2^2 = n2 + 3t + 4n3`, together with the count
//! `n2 + 2t + 3n3 = 4C(k,2) + 2kd + C(d,2)`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::analysis::{analyze, AnalysisError, AnalysisOptions};
use crate::bounds::{arnold_exponent, mdr_lower_bound};
use crate::geometry::{catalog, WeakCombinatorics, CATALOG};
use crate::milnor::Verdict;
use crate::numbers::Rational;

/// Largest degree of a free arrangement with only nodes, tacnodes and
/// ordinary triple points.
pub const MAX_FREE_DEGREE: u32 = 9;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Candidate {
    pub d: u32,
    pub k: u32,
    pub n2: u64,
    pub t: u64,
    pub n3: u64,
    pub d1: u32,
    pub d2: u32,
    /// Names of the failed rules; empty for a survivor.
    pub pruned_by: Vec<&'static str>,
    pub realization: Option<String>,
    /// For survivors without a realization: the geometric argument that
    /// rules them out, which is not re-proved here.
    pub excluded_by: Option<String>,
}

impl Candidate {
    pub fn new(d: u32, k: u32, n2: u64, t: u64, n3: u64, d1: u32, d2: u32) -> Self {
        Candidate {
            d,
            k,
            n2,
            t,
            n3,
            d1,
            d2,
            pruned_by: vec![],
            realization: None,
            excluded_by: None,
        }
    }

    pub fn m(&self) -> u32 {
        self.d + 2 * self.k
    }

    pub fn weak(&self) -> WeakCombinatorics {
        WeakCombinatorics::new(self.d, self.k, self.n2, self.t, self.n3)
    }

    pub fn survives(&self) -> bool {
        self.pruned_by.is_empty()
    }

    /// `(n2, t, n3, d1, d2)`.
    pub fn key(&self) -> (u64, u64, u64, u32, u32) {
        (self.n2, self.t, self.n3, self.d1, self.d2)
    }

    /// Both identities and `1 <= d1 <= d2`.
    pub fn is_consistent(&self) -> bool {
        let (d1, d2) = (self.d1 as u64, self.d2 as u64);
        self.d1 >= 1
            && self.d1 <= self.d2
            && self.d1 + self.d2 + 1 == self.m()
            && d1 * d1 + d2 * d2 + d1 * d2 == self.weak().tau()
            && pair_count(self.d, self.k) == self.n2 + 2 * self.t + 3 * self.n3
    }
}

fn binom2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

/// `4C(k,2) + 2kd + C(d,2)`: pairwise intersections with multiplicity.
pub fn pair_count(d: u32, k: u32) -> u64 {
    let (d, k) = (d as u64, k as u64);
    4 * binom2(k) + 2 * k * d + binom2(d)
}

/// All candidates for `(d, k)`, ordered by `(d1, t, n3)`.
pub fn enumerate_candidates(d: u32, k: u32) -> Vec<Candidate> {
    let m = d + 2 * k;
    if m < 3 {
        return vec![];
    }
    let count = pair_count(d, k);
    let mut out = Vec::new();
    for d1 in 1..=(m - 1) / 2 {
        let d2 = m - 1 - d1;
        let tau = (d1 * d1 + d2 * d2 + d1 * d2) as u64;
        for t in 0..=tau / 3 {
            for n3 in 0..=(tau - 3 * t) / 4 {
                let n2 = tau - 3 * t - 4 * n3;
                if n2 + 2 * t + 3 * n3 == count {
                    out.push(Candidate::new(d, k, n2, t, n3, d1, d2));
                }
            }
        }
    }
    out
}

/// Reference enumeration: a plain loop over `(n2, t, n3, d1)` bounded by
/// `tau <= (m-1)^2`, keeping the keys of consistent candidates.
pub fn enumerate_naive(d: u32, k: u32) -> BTreeSet<(u64, u64, u64, u32, u32)> {
    let m = d + 2 * k;
    let mut out = BTreeSet::new();
    if m < 3 {
        return out;
    }
    let top = ((m - 1) * (m - 1)) as u64;
    for n2 in 0..=top {
        for t in 0..=top / 3 {
            for n3 in 0..=top / 4 {
                if n2 + 3 * t + 4 * n3 > top {
                    continue;
                }
                for d1 in 1..m {
                    let d2 = m as i64 - 1 - d1 as i64;
                    if d2 < d1 as i64 {
                        continue;
                    }
                    let c = Candidate::new(d, k, n2, t, n3, d1, d2 as u32);
                    if c.is_consistent() {
                        out.insert(c.key());
                    }
                }
            }
        }
    }
    out
}

/// A pruning rule and where it comes from.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Rule {
    pub name: &'static str,
    pub source: &'static str,
    /// Labeled heuristic; its firings are reported separately.
    pub heuristic: bool,
}

pub const RULE_NODES_TRIPLES: &str = "n2 + n3 <= 3(d - 1)/2";
pub const RULE_TACNODES: &str = "t >= k^2 - k + kd + (d - 1)(d - 3)/4 - n3";
pub const RULE_DEGREE: &str = "m <= 9";
pub const RULE_MDR: &str = "d1 >= 2m/3 - 2";
pub const RULE_ARNOLD: &str = "d1 >= alpha_C m - 2";
pub const RULE_PAIR_PROFILE: &str = "conic pair profile exists";
pub const RULE_CAPACITY: &str = "t <= dk + 2C(k,2)";
pub const RULE_LINE_TANGENCY: &str = "line tangencies avoid bitangent pairs";

pub const RULES: &[Rule] = &[
    Rule {
        name: RULE_NODES_TRIPLES,
        source: "d1 d2 <= (m-1)^2/4 combined with the two identities",
        heuristic: false,
    },
    Rule {
        name: RULE_TACNODES,
        source: "previous rule rewritten with the intersection count",
        heuristic: false,
    },
    Rule {
        name: RULE_DEGREE,
        source: "mdr >= 2m/3 - 2 for these singularities, and mdr <= (m-1)/2 for free curves",
        heuristic: false,
    },
    Rule {
        name: RULE_MDR,
        source: "Arnold exponent of nodes, tacnodes and triple points is at least 2/3; mdr = d1",
        heuristic: false,
    },
    Rule {
        name: RULE_ARNOLD,
        source: "mdr >= alpha_C m - 2 with alpha_C the least lct of the types present",
        heuristic: false,
    },
    Rule {
        name: RULE_PAIR_PROFILE,
        source: "some m2 + m3 + m4 = C(k,2) with 2m2 + m3 <= t and 2m3 + 4m4 <= n2 + n3",
        heuristic: false,
    },
    Rule {
        name: RULE_CAPACITY,
        source: "a line meets a conic in at most one tangency; two conics in at most two",
        heuristic: true,
    },
    Rule {
        name: RULE_LINE_TANGENCY,
        source: "a line is tangent to at most one conic of a bitangent pair, so the conics \
                 tangent to one line are independent in the bitangency graph",
        heuristic: false,
    },
];

pub fn rule(name: &str) -> Option<&'static Rule> {
    RULES.iter().find(|r| r.name == name)
}

/// Conic pair profiles `(m2, m3, m4)` allowed by the point counts.
pub fn pair_profiles(c: &Candidate) -> Vec<(u64, u64, u64)> {
    let pairs = binom2(c.k as u64);
    let mut out = Vec::new();
    for m2 in 0..=pairs {
        for m3 in 0..=pairs - m2 {
            let m4 = pairs - m2 - m3;
            if 2 * m2 + m3 <= c.t && 2 * m3 + 4 * m4 <= c.n2 + c.n3 {
                out.push((m2, m3, m4));
            }
        }
    }
    out
}

/// Largest independent set a graph on `k` vertices with `e` edges can have:
/// the largest `s` with `C(s,2) <= C(k,2) - e`.
pub fn max_independent(k: u64, e: u64) -> u64 {
    let free = binom2(k) - e;
    (0..=k).filter(|&s| binom2(s) <= free).max().unwrap_or(0)
}

/// Every rule `c` fails, in rule order.
pub fn failed_rules(c: &Candidate) -> Vec<&'static str> {
    let (d, k) = (c.d as i64, c.k as i64);
    let (n2, t, n3) = (c.n2 as i64, c.t as i64, c.n3 as i64);
    let m = c.m();
    let mut out = Vec::new();
    if 2 * (n2 + n3) > 3 * (d - 1) {
        out.push(RULE_NODES_TRIPLES);
    }
    if 4 * t < 4 * (k * k - k + k * d) + (d - 1) * (d - 3) - 4 * n3 {
        out.push(RULE_TACNODES);
    }
    if m > MAX_FREE_DEGREE {
        out.push(RULE_DEGREE);
    }
    if (c.d1 as i64) < mdr_lower_bound(&Rational::frac(2, 3), m).1 {
        out.push(RULE_MDR);
    }
    if (c.d1 as i64) < mdr_lower_bound(&arnold_exponent(&c.weak()), m).1 {
        out.push(RULE_ARNOLD);
    }
    let profiles = pair_profiles(c);
    if profiles.is_empty() {
        out.push(RULE_PAIR_PROFILE);
    }
    if t > d * k + 2 * binom2(c.k as u64) as i64 {
        out.push(RULE_CAPACITY);
    }
    // Conic-conic tacnodes are exactly 2m2 + m3; the rest come from lines.
    let line_room = profiles
        .iter()
        .any(|&(m2, m3, _)| c.t - (2 * m2 + m3) <= c.d as u64 * max_independent(c.k as u64, m2));
    if !profiles.is_empty() && !line_room {
        out.push(RULE_LINE_TANGENCY);
    }
    out
}

pub fn apply_prunes(mut c: Candidate) -> Candidate {
    c.pruned_by = failed_rules(&c);
    c
}

/// The geometric argument excluding numerical survivors of `(d, k)` that
/// have no free realization.
pub fn geometric_exclusion(d: u32, k: u32) -> Option<&'static str> {
    match d {
        2 if k == 1 => Some("a tangent line meets the conic only at its point of tangency"),
        3 if k == 1 => Some("placement of tangent lines and triple points on one conic"),
        1 if k >= 2 => Some("one line tangent to every conic of a bitangent family"),
        2 if k >= 2 => Some("a line adds at most one tacnode to a bitangent family"),
        3 if k == 2 => Some("placement of tangent lines and triple points on two conics"),
        3 if k >= 3 => Some("tacnode capacity of three lines against three conics"),
        4 => Some("four lines: conic graph and line sub-arrangement case analysis"),
        5 => Some("five lines: conic graph and line sub-arrangement case analysis"),
        6 => Some("six lines: line sub-arrangement case analysis"),
        7 => Some("seven lines: line sub-arrangement case analysis"),
        _ => None,
    }
}

/// A catalog arrangement checked to be free.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Realization {
    pub name: String,
    pub weak: WeakCombinatorics,
    pub exponents: (u32, u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PairStatus {
    /// Some survivor is realized by a free catalog arrangement.
    Realizable { realizations: Vec<String> },
    /// Survivors exist numerically; excluded by a geometric argument.
    ExcludedByCaseAnalysis { argument: String, survivors: usize },
    /// Every candidate is pruned.
    Empty,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairReport {
    pub d: u32,
    pub k: u32,
    pub m: u32,
    #[serde(flatten)]
    pub status: PairStatus,
    pub candidates: Vec<Candidate>,
    /// Candidates whose only failed rules are heuristic.
    pub heuristic_only: Vec<(u64, u64, u64, u32, u32)>,
}

impl PairReport {
    pub fn survivors(&self) -> impl Iterator<Item = &Candidate> {
        self.candidates.iter().filter(|c| c.survives())
    }

    pub fn is_excluded(&self) -> bool {
        !matches!(self.status, PairStatus::Realizable { .. })
    }
}

/// Enumerates, prunes and labels one `(d, k)`.
pub fn classify_pair(d: u32, k: u32, realizations: &[Realization]) -> PairReport {
    let mut candidates: Vec<Candidate> = enumerate_candidates(d, k).into_iter().map(apply_prunes).collect();
    let mut names = Vec::new();
    for c in candidates.iter_mut().filter(|c| c.survives()) {
        if let Some(r) = realizations
            .iter()
            .find(|r| r.weak == c.weak() && r.exponents == (c.d1, c.d2))
        {
            c.realization = Some(r.name.clone());
            names.push(r.name.clone());
        } else {
            c.excluded_by = Some(
                geometric_exclusion(d, k)
                    .unwrap_or("not covered by a known argument")
                    .into(),
            );
        }
    }
    let heuristic_only = candidates
        .iter()
        .filter(|c| !c.survives() && c.pruned_by.iter().all(|n| rule(n).is_some_and(|r| r.heuristic)))
        .map(Candidate::key)
        .collect();
    let survivors = candidates.iter().filter(|c| c.survives()).count();
    let status = if !names.is_empty() {
        PairStatus::Realizable { realizations: names }
    } else if survivors > 0 {
        PairStatus::ExcludedByCaseAnalysis {
            argument: geometric_exclusion(d, k)
                .unwrap_or("not covered by a known argument")
                .into(),
            survivors,
        }
    } else {
        PairStatus::Empty
    };
    PairReport {
        d,
        k,
        m: d + 2 * k,
        status,
        candidates,
        heuristic_only,
    }
}

/// All `(d, k)` with `d <= max_d`, `1 <= k <= max_k`.
pub fn admissible_pairs(max_d: u32, max_k: u32, realizations: &[Realization]) -> Vec<PairReport> {
    let mut out = Vec::new();
    for d in 0..=max_d {
        for k in 1..=max_k {
            out.push(classify_pair(d, k, realizations));
        }
    }
    out
}

/// Pairs with `m = d + 2k` between 3 and `max_m`, `k >= 1`.
pub fn pairs_up_to_degree(max_m: u32, realizations: &[Realization]) -> Vec<PairReport> {
    let mut out = Vec::new();
    for k in 1..=max_m / 2 {
        for d in 0..=max_m - 2 * k {
            if d + 2 * k >= 3 {
                out.push(classify_pair(d, k, realizations));
            }
        }
    }
    out.sort_by_key(|p| (p.d, p.k));
    out
}

/// One case of the classification of free arrangements with `d >= 1`,
/// `k >= 1`.
#[derive(Debug, Clone, Copy)]
pub struct ClassificationCase {
    pub case: u32,
    pub description: &'static str,
    pub catalog: &'static str,
    pub counts: (u64, u64, u64),
    pub exponents: (u32, u32),
}

pub const CLASSIFICATION: &[ClassificationCase] = &[
    ClassificationCase {
        case: 1,
        description: "a smooth conic and a tangent line",
        catalog: "CL3",
        counts: (0, 1, 0),
        exponents: (1, 1),
    },
    ClassificationCase {
        case: 2,
        description: "a smooth conic and two tangent lines",
        catalog: "CL4",
        counts: (1, 2, 0),
        exponents: (1, 2),
    },
    ClassificationCase {
        case: 3,
        description: "a smooth conic inscribed in a triangle",
        catalog: "CL5",
        counts: (3, 3, 0),
        exponents: (2, 2),
    },
    ClassificationCase {
        case: 3,
        description: "a smooth conic circumscribed about a triangle",
        catalog: "CL5'",
        counts: (0, 0, 3),
        exponents: (2, 2),
    },
    ClassificationCase {
        case: 4,
        description: "a triangle with an inscribed and a circumscribed conic",
        catalog: "CL7",
        counts: (0, 5, 3),
        exponents: (3, 3),
    },
];

#[derive(Debug, Clone, Serialize)]
pub struct CaseCheck {
    pub case: u32,
    pub catalog: String,
    pub expected: ((u64, u64, u64), (u32, u32)),
    pub found: ((u64, u64, u64), Option<(u32, u32)>),
    pub verdict: Verdict,
    pub ok: bool,
}

/// Free catalog arrangements of one weak combinatorics.
#[derive(Debug, Clone, Serialize)]
pub struct TeraoGroup {
    pub weak: WeakCombinatorics,
    pub members: Vec<(String, Verdict)>,
    pub consistent: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub cases: Vec<CaseCheck>,
    pub groups: Vec<TeraoGroup>,
    pub realizations: Vec<Realization>,
    pub pairs: Vec<PairReport>,
    /// Human-readable description of every mismatch.
    pub failures: Vec<String>,
}

impl ClassificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Analyzes every catalog arrangement of degree at most `max_m`, keeping the
/// in-class ones: `(name, weak combinatorics, verdict, exponents)`.
pub fn in_class_catalog(
    max_m: u32,
    opts: &AnalysisOptions,
) -> Result<Vec<(String, WeakCombinatorics, Verdict, Option<(u32, u32)>)>, AnalysisError> {
    let mut out = Vec::new();
    for e in CATALOG {
        let arr = e.arrangement();
        if arr.m() > max_m {
            continue;
        }
        let r = analyze(&arr, opts)?;
        if let Some(w) = r.weak_combinatorics {
            out.push((e.name.to_string(), w, r.freeness.verdict, r.freeness.exponents));
        }
    }
    Ok(out)
}

pub fn verify_classification(opts: &AnalysisOptions) -> Result<ClassificationReport, AnalysisError> {
    let mut failures = Vec::new();
    let mut cases = Vec::new();
    for case in CLASSIFICATION {
        let arr = catalog(case.catalog)?;
        let r = analyze(&arr, opts)?;
        let found = ((r.census.n2, r.census.t, r.census.n3), r.freeness.exponents);
        let ok = r.census.in_class
            && found.0 == case.counts
            && found.1 == Some(case.exponents)
            && r.freeness.verdict == Verdict::Free;
        if !ok {
            failures.push(format!(
                "case {} ({}): expected counts {:?} exponents {:?}, found {:?} {:?} ({})",
                case.case, case.catalog, case.counts, case.exponents, found.0, found.1, r.freeness.verdict
            ));
        }
        cases.push(CaseCheck {
            case: case.case,
            catalog: case.catalog.into(),
            expected: (case.counts, case.exponents),
            found,
            verdict: r.freeness.verdict,
            ok,
        });
    }

    let members = in_class_catalog(MAX_FREE_DEGREE, opts)?;
    let mut by_weak: BTreeMap<WeakCombinatorics, Vec<(String, Verdict)>> = BTreeMap::new();
    let mut realizations = Vec::new();
    for (name, w, v, exps) in &members {
        by_weak.entry(*w).or_default().push((name.clone(), *v));
        if let (Verdict::Free, Some(e)) = (v, exps) {
            realizations.push(Realization {
                name: name.clone(),
                weak: *w,
                exponents: *e,
            });
        }
    }
    let groups: Vec<TeraoGroup> = by_weak
        .into_iter()
        .map(|(weak, members)| {
            let consistent = members
                .windows(2)
                .all(|p| (p[0].1 == Verdict::Free) == (p[1].1 == Verdict::Free));
            TeraoGroup {
                weak,
                members,
                consistent,
            }
        })
        .collect();
    for g in groups.iter().filter(|g| !g.consistent) {
        failures.push(format!(
            "freeness differs within weak combinatorics {:?}: {:?}",
            g.weak, g.members
        ));
    }

    let pairs = pairs_up_to_degree(MAX_FREE_DEGREE, &realizations);
    let realized: Vec<(u32, u32, u64, u64, u64)> = pairs
        .iter()
        .flat_map(|p| p.survivors().filter(|c| c.realization.is_some()))
        .map(|c| (c.d, c.k, c.n2, c.t, c.n3))
        .collect();
    let mut expected: Vec<(u32, u32, u64, u64, u64)> = CLASSIFICATION
        .iter()
        .map(|c| {
            let arr = catalog(c.catalog).expect("catalog entry");
            (arr.d(), arr.k(), c.counts.0, c.counts.1, c.counts.2)
        })
        .collect();
    expected.sort();
    let mut realized_sorted = realized.clone();
    realized_sorted.sort();
    if realized_sorted != expected {
        failures.push(format!(
            "realizable survivors {realized_sorted:?} differ from {expected:?}"
        ));
    }
    for p in &pairs {
        if (4..=7).contains(&p.d) && !p.is_excluded() {
            failures.push(format!("(d, k) = ({}, {}) is not excluded", p.d, p.k));
        }
        if p.m > MAX_FREE_DEGREE && p.survivors().next().is_some() {
            failures.push(format!("(d, k) = ({}, {}) has a survivor with m > 9", p.d, p.k));
        }
    }

    Ok(ClassificationReport {
        cases,
        groups,
        realizations,
        pairs,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_matches_naive_loop() {
        for k in 0..=4 {
            for d in 0..=9 {
                if d + 2 * k > 9 {
                    continue;
                }
                let fast: BTreeSet<_> = enumerate_candidates(d, k).iter().map(Candidate::key).collect();
                assert_eq!(fast, enumerate_naive(d, k), "d = {d}, k = {k}");
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        let one = enumerate_candidates(1, 1);
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].key(), (0, 1, 0, 1, 1));
        assert!(enumerate_candidates(3, 2).iter().any(|c| c.key() == (0, 5, 3, 3, 3)));
        assert!(enumerate_candidates(0, 2).is_empty());
    }

    #[test]
    fn enumeration_order() {
        let c = enumerate_candidates(3, 2);
        let keys: Vec<_> = c.iter().map(|c| (c.d1, c.t, c.n3)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn candidates_satisfy_the_exponent_identity() {
        for k in 1..=4 {
            for d in 0..=8 {
                for c in enumerate_candidates(d, k) {
                    let (d, k, t, n3) = (d as i64, k as i64, c.t as i64, c.n3 as i64);
                    let rhs2 = 2 * (2 * k * k - 2 * k + 1 + 2 * k * d - t - n3) + d * d - 3 * d;
                    assert_eq!(2 * (c.d1 as i64) * (c.d2 as i64), rhs2);
                    assert!(c.is_consistent());
                }
            }
        }
    }

    #[test]
    fn degree_zero_is_pruned() {
        let c = apply_prunes(Candidate::new(0, 6, 0, 0, 0, 1, 10));
        assert!(c.pruned_by.contains(&RULE_NODES_TRIPLES));
        assert!(c.pruned_by.contains(&RULE_DEGREE));
    }

    #[test]
    fn triple_point_candidate_with_small_d1() {
        // Survives the counting rules but not the mdr lower bound.
        let c = apply_prunes(Candidate::new(3, 1, 0, 3, 1, 1, 3));
        assert!(c.is_consistent());
        assert_eq!(c.pruned_by, vec![RULE_MDR, RULE_ARNOLD]);
    }

    #[test]
    fn two_lines_three_conics_is_pruned() {
        let p = classify_pair(2, 3, &[]);
        assert!(p.survivors().next().is_none());
        assert!(p.candidates.iter().all(|c| !c.pruned_by.is_empty()));
    }

    #[test]
    fn line_tangency_rule_kills_one_line_many_conics() {
        for k in 2..=4 {
            let p = classify_pair(1, k, &[]);
            assert!(p.survivors().next().is_none(), "k = {k}");
        }
    }

    #[test]
    fn independent_set_bound() {
        assert_eq!(max_independent(3, 3), 1);
        assert_eq!(max_independent(3, 0), 3);
        assert_eq!(max_independent(4, 1), 3);
        assert_eq!(max_independent(2, 1), 1);
    }

    #[test]
    fn no_survivor_beyond_nine() {
        for p in pairs_up_to_degree(14, &[]) {
            if p.m > 9 {
                assert!(p.survivors().next().is_none(), "({}, {})", p.d, p.k);
            }
        }
    }

    #[test]
    fn rules_have_sources() {
        let names: BTreeSet<_> = RULES.iter().map(|r| r.name).collect();
        assert_eq!(names.len(), RULES.len());
        assert_eq!(RULES.iter().filter(|r| r.heuristic).count(), 1);
    }
}
