//! Reproduction harness: every acceptance criterion as a runnable check.

use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::analysis::{analyze, AnalysisOptions, AnalysisReport};
use crate::bounds::{
    spectrum, SingType, Spectrum, HIRZEBRUCH, LOG_MY, PROP2_TACNODES_TRIPLES, PROP2_TAU, PROP2_TRIPLES,
};
use crate::classify::{enumerate_candidates, enumerate_naive, verify_classification, Candidate};
use crate::geometry::{catalog, census, combinatorial_check, Arrangement, CensusOptions, CATALOG};
use crate::milnor::Verdict;
use crate::numbers::Rational;
use crate::poly::{monomial_basis, HomPoly};

/// Per-arrangement time limit for the freeness table.
pub const TIME_LIMIT: Duration = Duration::from_secs(10);

struct Entry {
    arrangement: Arrangement,
    result: OnceLock<(Result<AnalysisReport, String>, Duration)>,
}

/// Shared state: each catalog arrangement is analyzed at most once.
pub struct Context {
    pub opts: AnalysisOptions,
    entries: BTreeMap<String, Entry>,
}

impl Context {
    pub fn new(opts: AnalysisOptions) -> Self {
        let entries = CATALOG
            .iter()
            .map(|e| {
                (
                    e.name.to_string(),
                    Entry {
                        arrangement: e.arrangement(),
                        result: OnceLock::new(),
                    },
                )
            })
            .collect();
        Context { opts, entries }
    }

    /// Replaces a catalog arrangement, for testing that the checks notice.
    pub fn override_arrangement(&mut self, name: &str, arrangement: Arrangement) {
        self.entries.insert(
            name.to_string(),
            Entry {
                arrangement,
                result: OnceLock::new(),
            },
        );
    }

    pub fn arrangement(&self, name: &str) -> &Arrangement {
        &self.entries[name].arrangement
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    fn timed(&self, name: &str) -> &(Result<AnalysisReport, String>, Duration) {
        let e = &self.entries[name];
        e.result.get_or_init(|| {
            let start = Instant::now();
            let r = analyze(&e.arrangement, &self.opts).map_err(|err| err.to_string());
            (r, start.elapsed())
        })
    }

    pub fn analysis(&self, name: &str) -> Result<&AnalysisReport, String> {
        self.timed(name).0.as_ref().map_err(|e| format!("{name}: {e}"))
    }

    pub fn elapsed(&self, name: &str) -> Duration {
        self.timed(name).1
    }
}

/// Collects failures; a criterion passes when none were recorded.
#[derive(Default)]
pub struct Outcome {
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl Outcome {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn with<T>(&mut self, r: Result<T, String>, f: impl FnOnce(&mut Self, T)) {
        match r {
            Ok(v) => f(self, v),
            Err(e) => self.failures.push(e),
        }
    }
}

pub struct Criterion {
    pub id: u32,
    pub group: &'static str,
    pub title: &'static str,
    run: fn(&Context) -> Outcome,
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: u32,
    pub group: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    pub elapsed_ms: u128,
}

impl CriterionResult {
    /// `PASS 1 freeness: ...` or `FAIL ...`.
    pub fn line(&self) -> String {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        format!("{tag} {} {}: {}", self.id, self.group, self.title)
    }
}

pub const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        group: "freeness",
        title: "freeness table of the catalog",
        run: freeness_table,
    },
    Criterion {
        id: 2,
        group: "census",
        title: "census counts, out-of-class points, seed independence",
        run: census_table,
    },
    Criterion {
        id: 3,
        group: "identities",
        title: "intersection count, Tjurina sum, exponent identity",
        run: identity_gates,
    },
    Criterion {
        id: 4,
        group: "bounds",
        title: "semicontinuity, Miyaoka-Yau and Hirzebruch-type bounds",
        run: bounds_checks,
    },
    Criterion {
        id: 5,
        group: "classification",
        title: "enumeration, pruning and the free classification",
        run: classification,
    },
    Criterion {
        id: 6,
        group: "properties",
        title: "property suites",
        run: properties,
    },
    Criterion {
        id: 7,
        group: "determinism",
        title: "identical reports for identical seeds",
        run: determinism,
    },
];

/// Runs the criteria whose group or title contains `filter`.
pub fn run(ctx: &Context, filter: Option<&str>) -> Vec<CriterionResult> {
    CRITERIA
        .iter()
        .filter(|c| filter.is_none_or(|f| c.group.contains(f) || c.title.contains(f)))
        .map(|c| {
            let start = Instant::now();
            let o = (c.run)(ctx);
            CriterionResult {
                id: c.id,
                group: c.group,
                title: c.title,
                passed: o.failures.is_empty(),
                failures: o.failures,
                notes: o.notes,
                elapsed_ms: start.elapsed().as_millis(),
            }
        })
        .collect()
}

const FREENESS_TABLE: &[(&str, Verdict, Option<(u32, u32)>)] = &[
    ("CL3", Verdict::Free, Some((1, 1))),
    ("CL4", Verdict::Free, Some((1, 2))),
    ("CL5", Verdict::Free, Some((2, 2))),
    ("CL5'", Verdict::Free, Some((2, 2))),
    ("CL7", Verdict::Free, Some((3, 3))),
    ("dual-hesse", Verdict::Free, Some((4, 4))),
    ("CL1", Verdict::Free, Some((2, 3))),
    ("CL2", Verdict::NearlyFree, None),
];

fn freeness_table(ctx: &Context) -> Outcome {
    let mut o = Outcome::default();
    for &(name, verdict, exps) in FREENESS_TABLE {
        o.with(ctx.analysis(name), |o, r| {
            let f = &r.freeness;
            o.check(f.verdict == verdict && f.exponents == exps, || {
                format!(
                    "{name}: expected {verdict} {exps:?}, found {} {:?}",
                    f.verdict, f.exponents
                )
            });
            o.note(format!("{name}: {} {:?}", f.verdict, f.exponents));
        });
        let t = ctx.elapsed(name);
        o.check(t < TIME_LIMIT, || format!("{name}: took {t:?}"));
    }
    o
}

const CENSUS_TABLE: &[(&str, (u64, u64, u64))] = &[
    ("CL3", (0, 1, 0)),
    ("CL4", (1, 2, 0)),
    ("CL5", (3, 3, 0)),
    ("CL5'", (0, 0, 3)),
    ("CL7", (0, 5, 3)),
    ("dual-hesse", (0, 0, 12)),
];

const SEEDS: std::ops::Range<u64> = 0..5;

fn census_table(ctx: &Context) -> Outcome {
    let mut o = Outcome::default();
    for &(name, counts) in CENSUS_TABLE {
        o.with(ctx.analysis(name), |o, r| {
            let c = &r.census;
            o.check(c.in_class && (c.n2, c.t, c.n3) == counts, || {
                format!(
                    "{name}: expected {counts:?}, found {:?} (in class: {})",
                    (c.n2, c.t, c.n3),
                    c.in_class
                )
            });
        });
    }
    for name in ["CL1", "CL2"] {
        o.with(ctx.analysis(name), |o, r| {
            let bad: Vec<_> = r.census.out_of_class_points().collect();
            let origin = Some(["0".to_string(), "0".to_string(), "1".to_string()]);
            o.check(
                !r.census.in_class && bad.len() == 1 && bad[0].multiplicity == 4 && bad[0].coordinates == origin,
                || format!("{name}: expected one out-of-class point of multiplicity 4 at (0:0:1), found {bad:?}"),
            );
        });
    }
    for &(name, _) in CENSUS_TABLE
        .iter()
        .chain([("CL1", (0, 0, 0)), ("CL2", (0, 0, 0))].iter())
    {
        let arr = ctx.arrangement(name);
        let runs: Vec<_> = SEEDS
            .map(|seed| {
                census(
                    arr,
                    &CensusOptions {
                        primes: ctx.opts.primes,
                        seed,
                    },
                )
                .map(|c| (c.counts(), c.in_class, c.points))
                .map_err(|e| e.to_string())
            })
            .collect();
        o.check(runs.windows(2).all(|w| w[0] == w[1]), || {
            format!("{name}: census depends on the seed")
        });
    }
    o
}

fn identity_gates(ctx: &Context) -> Outcome {
    let mut o = Outcome::default();
    for name in ctx.names() {
        o.with(ctx.analysis(name), |o, r| {
            let c = &r.census;
            if c.in_class {
                o.check(combinatorial_check(c.n2, c.t, c.n3, r.d, r.k).is_ok(), || {
                    format!("{name}: intersection count fails")
                });
                let tau = c.n2 + 3 * c.t + 4 * c.n3;
                o.check(c.tau == Some(tau) && r.freeness.tau == tau, || {
                    format!(
                        "{name}: census tau {:?}, Jacobian tau {}, n2 + 3t + 4n3 = {tau}",
                        c.tau, r.freeness.tau
                    )
                });
            }
            if let Some((d1, d2)) = r.freeness.exponents {
                let mm = (r.m - 1) as u64;
                o.check(
                    d1 + d2 + 1 == r.m && (d1 * d2) as u64 + r.freeness.tau == mm * mm,
                    || format!("{name}: exponents ({d1}, {d2}) with tau {}", r.freeness.tau),
                );
            }
        });
    }
    o
}

fn bound_sides(r: &AnalysisReport, name: &str) -> Result<(Rational, Rational, Option<bool>), String> {
    let b = r
        .bounds
        .as_ref()
        .ok_or_else(|| format!("{}: no bounds (out of class)", r.name))?;
    let c = b.get(name).ok_or_else(|| format!("{}: missing check {name}", r.name))?;
    Ok((c.lhs.clone(), c.rhs.clone(), c.holds))
}

fn bounds_checks(ctx: &Context) -> Outcome {
    let mut o = Outcome::default();
    let exact = [
        ("CL7", PROP2_TACNODES_TRIPLES, 8, 10),
        ("dual-hesse", PROP2_TRIPLES, 12, 15),
        ("CL7", PROP2_TAU, 27, 29),
    ];
    for (name, check, lhs, rhs) in exact {
        o.with(
            ctx.analysis(name).and_then(|r| bound_sides(r, check)),
            |o, (l, r, holds)| {
                o.check(l == lhs && r == rhs && holds == Some(true), || {
                    format!("{name}: {check}: expected {lhs} <= {rhs}, found {l} <= {r}")
                });
                o.note(format!("{name}: {check}: {l} <= {r}"));
            },
        );
    }
    for name in ctx.names() {
        o.with(ctx.analysis(name), |o, r| {
            if r.census.in_class {
                o.with(bound_sides(r, PROP2_TAU), |o, (l, rr, holds)| {
                    o.check(holds == Some(true), || format!("{name}: {PROP2_TAU}: {l} > {rr}"));
                });
            }
        });
    }
    let constructed = [
        ("generic-12-lines", (66, 0, 0)),
        ("generic-6-conics", (60, 0, 0)),
        ("bitangent-6-conics", (48, 6, 0)),
    ];
    for (name, counts) in constructed {
        o.with(ctx.analysis(name), |o, r| {
            let c = &r.census;
            o.check((c.n2, c.t, c.n3) == counts, || {
                format!("{name}: census {:?}, expected {counts:?}", (c.n2, c.t, c.n3))
            });
            for check in [HIRZEBRUCH, LOG_MY] {
                o.with(bound_sides(r, check), |o, (l, rr, holds)| {
                    o.check(holds == Some(true), || {
                        format!("{name}: {check}: {l} <= {rr} is {holds:?}")
                    });
                    o.note(format!("{name}: {check}: {l} <= {rr}"));
                });
            }
        });
    }
    o
}

fn classification(ctx: &Context) -> Outcome {
    let mut o = Outcome::default();
    match verify_classification(&ctx.opts) {
        Ok(rep) => {
            o.failures.extend(rep.failures.iter().cloned());
            for c in &rep.cases {
                o.note(format!(
                    "case {} {}: {:?} {:?}",
                    c.case, c.catalog, c.found.0, c.found.1
                ));
            }
        }
        Err(e) => o.failures.push(e.to_string()),
    }
    o
}

/// A random form of degree 1..=6 with small integer coefficients.
fn random_form(rng: &mut ChaCha8Rng) -> HomPoly<Rational> {
    let deg = rng.gen_range(1..=6);
    let mut terms = Vec::new();
    for e in monomial_basis(deg) {
        if rng.gen_bool(0.5) {
            terms.push((Rational::from_int(rng.gen_range(-9i64..=9)), e));
        }
    }
    HomPoly::from_terms(deg, Rational::zero(), terms)
}

fn properties(ctx: &Context) -> Outcome {
    let mut o = Outcome::default();

    let mut rng = ChaCha8Rng::seed_from_u64(ctx.opts.seed);
    let bad = (0..500)
        .filter(|_| !random_form(&mut rng).euler_defect().is_zero())
        .count();
    o.check(bad == 0, || format!("Euler relation fails on {bad} of 500 forms"));

    let one = Rational::one();
    let mut types = vec![SingType::A1, SingType::A3, SingType::D4];
    types.extend((2..=12).map(SingType::CentralMultiple));
    for s in types {
        let sp = spectrum(s);
        o.check(sp.is_symmetric_about(&one) && sp.total() == s.mu(), || {
            format!("{s}: spectrum not symmetric or total {} != {}", sp.total(), s.mu())
        });
    }
    o.check(spectrum(SingType::CentralMultiple(3)) == spectrum(SingType::D4), || {
        "three concurrent lines and D4 have different spectra".into()
    });
    let cube = Spectrum::of_power(3);
    o.check(
        crate::bounds::thom_sebastiani(&cube, &cube) == spectrum(SingType::D4),
        || "Thom-Sebastiani of x^3 and y^3 differs from D4".into(),
    );
    let degs =
        |lo: Rational, hi: Rational| [SingType::A1, SingType::A3, SingType::D4].map(|s| spectrum(s).deg_b(&lo, &hi));
    let (high, low) = (
        degs(Rational::frac(1, 3), Rational::frac(4, 3)),
        degs(Rational::frac(-1, 3), Rational::frac(2, 3)),
    );
    o.check(high == [1, 3, 4] && low == [0, 0, 1], || {
        format!("deg_B coefficients {high:?} and {low:?}")
    });

    for name in ctx.names() {
        o.with(ctx.analysis(name), |o, r| {
            o.check(r.census.bezout_holds(ctx.arrangement(name)), || {
                format!("{name}: contact orders fail Bezout")
            });
            if r.census.in_class {
                let routes = &r.freeness.routes;
                o.check(routes.tjurina == Some(routes.n_module), || {
                    format!("{name}: routes disagree: {routes:?}")
                });
            }
        });
    }

    for k in 0..=4u32 {
        for d in 0..=9u32 {
            if d + 2 * k > 9 {
                continue;
            }
            let fast: std::collections::BTreeSet<_> = enumerate_candidates(d, k).iter().map(Candidate::key).collect();
            o.check(fast == enumerate_naive(d, k), || {
                format!("enumeration differs from the reference at ({d}, {k})")
            });
        }
    }
    o
}

fn determinism(ctx: &Context) -> Outcome {
    let mut o = Outcome::default();
    for name in ["CL7", "CL2", "dual-hesse"] {
        let arr = catalog(name).expect("catalog entry");
        let run = || {
            analyze(&arr, &ctx.opts)
                .map_err(|e| e.to_string())
                .and_then(|r| serde_json::to_string(&r).map_err(|e| e.to_string()))
        };
        let (a, b) = (run(), run());
        o.check(a.is_ok() && a == b, || format!("{name}: reports differ between runs"));
    }
    o
}
