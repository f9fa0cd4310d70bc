//! Jacobian syzygies, the Milnor algebra `M(f) = S/J_f`, the module
//! `N(f) = I_f / J_f` (with `I_f` the saturation of `J_f`), and the resulting
//! freeness verdicts.
//!
//! Dimensions of graded pieces are computed modulo several random primes
//! (after reducing the number field through a root of its minimal
//! polynomial) and must agree across primes. The minimal degree of a
//! relation is certified exactly: full column rank modulo a prime proves that
//! no relation exists in low degree, and the relation found in degree `r` is
//! reconstructed over the coefficient field and checked by exact
//! multiplication. With `exact` set, every dimension is computed directly
//! over the coefficient field instead.

mod algebra;
mod witness;

use std::collections::BTreeMap;
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

pub use algebra::MilnorAlgebra;

use crate::linalg::Echelon;
use crate::numbers::{draw_prime, AlgebraicElement, FieldElement, Fp, NumberError};
use crate::poly::{dim_s, monomial_basis, monomial_index, HomPoly};

/// Maximum number of rejected primes before giving up.
const MAX_BAD_PRIMES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MilnorError {
    #[error("the form must have degree at least 2")]
    DegreeTooSmall,
    #[error("saturation did not stabilize in degree {q} before s = {s}")]
    StabilizationOverflow { q: u32, s: u32 },
    #[error("no good prime found after {0} draws")]
    NoGoodPrime(usize),
    #[error("modular computations disagree across primes: {0}")]
    ModularDisagreement(String),
    #[error("freeness routes disagree: N(f) route says free = {route_a}, Tjurina route says free = {route_b}")]
    RouteDisagreement { route_a: bool, route_b: bool },
    #[error("Tjurina number mismatch: census {census}, Milnor algebra {milnor}")]
    TauMismatch { census: u64, milnor: u64 },
    #[error("free curve violates d1 d2 = (m-1)^2 - tau: d1 = {d1}, d2 = {d2}, tau = {tau}")]
    ExponentIdentity { d1: u32, d2: u32, tau: u64 },
    #[error("could not certify a syzygy of degree {0}")]
    WitnessFailed(u32),
    #[error(transparent)]
    Number(#[from] NumberError),
}

impl MilnorError {
    /// Internal consistency failures, as opposed to bad input.
    pub fn is_soundness_failure(&self) -> bool {
        matches!(
            self,
            MilnorError::ModularDisagreement(_)
                | MilnorError::RouteDisagreement { .. }
                | MilnorError::TauMismatch { .. }
                | MilnorError::ExponentIdentity { .. }
                | MilnorError::WitnessFailed(_)
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MilnorOptions {
    /// Number of primes for the modular computation.
    pub primes: usize,
    pub seed: u64,
    /// Compute every dimension over the coefficient field itself.
    pub exact: bool,
}

impl Default for MilnorOptions {
    fn default() -> Self {
        MilnorOptions {
            primes: 3,
            seed: 0,
            exact: false,
        }
    }
}

/// Matrix of `(a, b, c) -> a f_x + b f_y + c f_z` from `S_q^3` to
/// `S_{q+m-1}`. Rows follow `monomial_basis(q + m - 1)`; columns are three
/// consecutive copies of `monomial_basis(q)` (for `a`, `b`, `c`).
pub fn syzygy_matrix<S: FieldElement>(f: &HomPoly<S>, q: u32) -> Vec<Vec<S>> {
    let partials = f.partials();
    let zero = f.zero_scalar().clone();
    let src = monomial_basis(q);
    let nrows = dim_s((q + f.deg() - 1) as i64);
    let ncols = 3 * src.len();
    let mut m = vec![vec![zero; ncols]; nrows];
    for (i, p) in partials.iter().enumerate() {
        for (j, e) in src.iter().enumerate() {
            for (t, c) in p.mul_monomial(e).terms() {
                m[monomial_index(t)][i * src.len() + j] = c.clone();
            }
        }
    }
    m
}

/// Graded data of `S/J_f` and `N(f)` over one field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobianData {
    pub m: u32,
    /// `dim ker` of the syzygy map for `q = 0..=r`.
    pub kernel_dims: Vec<u64>,
    /// `dim (S/J_f)_q` for `q` in the window `[0, 3m]`.
    pub hilbert: Vec<u64>,
    /// `dim N(f)_q` for `q` in the window.
    pub n_dims: Vec<u64>,
}

impl JacobianData {
    pub fn mdr(&self) -> u32 {
        self.kernel_dims.len() as u32 - 1
    }

    /// Stable value of the Hilbert function at the top of the window.
    pub fn tau(&self) -> u64 {
        *self.hilbert.last().expect("nonempty window")
    }
}

/// Kernel dimensions of the syzygy maps for `q = 0, 1, ...` up to the first
/// nonzero one (at most `m - 1`).
pub fn syzygy_kernel_dims<S: FieldElement>(f: &HomPoly<S>) -> Vec<u64> {
    let zero = f.zero_scalar().clone();
    let mut out = Vec::new();
    for q in 0..f.deg() {
        let a = syzygy_matrix(f, q);
        let ncols = 3 * dim_s(q as i64);
        let k = ncols - crate::linalg::rank(a, ncols, &zero);
        out.push(k as u64);
        if k > 0 {
            break;
        }
    }
    out
}

/// Computes [`JacobianData`] over the coefficient field of `f`.
pub fn jacobian_data<S: FieldElement>(f: &HomPoly<S>) -> Result<JacobianData, MilnorError> {
    let m = f.deg();
    if m < 2 {
        return Err(MilnorError::DegreeTooSmall);
    }
    let top = 3 * m;
    let kernel_dims = syzygy_kernel_dims(f);
    let mut alg = MilnorAlgebra::new(f);
    let hilbert: Vec<u64> = (0..=top).map(|q| alg.hilbert(q) as u64).collect();
    let mut n_dims = Vec::with_capacity(hilbert.len());
    for q in 0..=top {
        let j_dim = dim_s(q as i64) as u64 - hilbert[q as usize];
        let mut s = 1;
        let mut prev = alg.colon_dim(q, s);
        loop {
            s *= 2;
            if s > 3 * m {
                return Err(MilnorError::StabilizationOverflow { q, s });
            }
            let cur = alg.colon_dim(q, s);
            if cur == prev {
                break;
            }
            prev = cur;
        }
        n_dims.push(prev as u64 - j_dim);
    }
    Ok(JacobianData {
        m,
        kernel_dims,
        hilbert,
        n_dims,
    })
}

/// Good primes for reducing `f`, paired with the reduced forms.
fn reduced_forms(
    f: &HomPoly<AlgebraicElement>,
    primes: usize,
    seed: u64,
) -> Result<Vec<(u64, HomPoly<Fp>)>, MilnorError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut bad = 0;
    while out.len() < primes {
        let p = draw_prime(&mut rng);
        match witness::reduce_form(f, p)? {
            Some(fp) => out.push((p, fp)),
            None => {
                bad += 1;
                if bad > MAX_BAD_PRIMES {
                    return Err(MilnorError::NoGoodPrime(bad));
                }
            }
        }
    }
    Ok(out)
}

/// The three components of a syzygy `a f_x + b f_y + c f_z = 0`.
pub type Syzygy = [HomPoly<AlgebraicElement>; 3];

#[derive(Debug, Clone)]
pub struct SyzygyReport {
    pub m: u32,
    pub r: u32,
    pub kernel_dims: BTreeMap<u32, u64>,
    pub witness: Syzygy,
}

/// `true` when `a f_x + b f_y + c f_z = 0` holds exactly.
pub fn verify_syzygy<S: FieldElement>(f: &HomPoly<S>, w: &[HomPoly<S>; 3]) -> bool {
    let [fx, fy, fz] = f.partials();
    w[0].mul(&fx).add(&w[1].mul(&fy)).add(&w[2].mul(&fz)).is_zero()
}

/// Dimensions and certified mdr from either the modular or the exact route.
#[derive(Debug, Clone)]
pub struct MilnorComputation {
    pub data: JacobianData,
    pub syzygy: SyzygyReport,
    /// Primes used for the dimension counts (empty in exact mode).
    pub primes: Vec<u64>,
}

pub fn compute(f: &HomPoly<AlgebraicElement>, opts: &MilnorOptions) -> Result<MilnorComputation, MilnorError> {
    if f.deg() < 2 {
        return Err(MilnorError::DegreeTooSmall);
    }
    let (data, primes) = if opts.exact {
        (jacobian_data(f)?, Vec::new())
    } else {
        let forms = reduced_forms(f, opts.primes.max(1), opts.seed)?;
        let mut first: Option<JacobianData> = None;
        let mut primes = Vec::new();
        for (p, fp) in &forms {
            let d = jacobian_data(fp)?;
            if let Some(f0) = &first {
                if *f0 != d {
                    return Err(MilnorError::ModularDisagreement(format!(
                        "graded dimensions differ between primes {} and {p}",
                        primes[0]
                    )));
                }
            } else {
                first = Some(d);
            }
            primes.push(*p);
        }
        (first.expect("at least one prime"), primes)
    };
    let r = data.mdr();
    let witness = witness::find_witness(f, r, opts.seed).ok_or(MilnorError::WitnessFailed(r))?;
    let syzygy = SyzygyReport {
        m: f.deg(),
        r,
        kernel_dims: data
            .kernel_dims
            .iter()
            .enumerate()
            .map(|(q, k)| (q as u32, *k))
            .collect(),
        witness,
    };
    Ok(MilnorComputation { data, syzygy, primes })
}

/// Minimal degree of a Jacobian relation with an exact witness.
pub fn mdr(f: &HomPoly<AlgebraicElement>, opts: &MilnorOptions) -> Result<SyzygyReport, MilnorError> {
    Ok(compute(f, opts)?.syzygy)
}

/// `dim (S/J_f)_q` for `q = 0..=up_to`.
pub fn milnor_hilbert<S: FieldElement>(f: &HomPoly<S>, up_to: u32) -> BTreeMap<u32, u64> {
    let mut alg = MilnorAlgebra::new(f);
    (0..=up_to).map(|q| (q, alg.hilbert(q) as u64)).collect()
}

/// `dim N(f)_q` over the window `[0, 3m]`.
pub fn n_dims(f: &HomPoly<AlgebraicElement>, opts: &MilnorOptions) -> Result<BTreeMap<u32, u64>, MilnorError> {
    Ok(to_map(&compute(f, opts)?.data.n_dims))
}

fn to_map(v: &[u64]) -> BTreeMap<u32, u64> {
    v.iter().enumerate().map(|(q, d)| (q as u32, *d)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Free,
    NearlyFree,
    Neither,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Free => "free",
            Verdict::NearlyFree => "nearly free",
            Verdict::Neither => "neither free nor nearly free",
        };
        f.write_str(s)
    }
}

/// Operational criterion used for the nearly free verdict.
pub const NEARLY_FREE_CRITERION: &str = "N(f) != 0 and dim N(f)_q <= 1 for all q (criterion per cited reference)";

#[derive(Debug, Clone, Serialize)]
pub struct Routes {
    /// Free according to `N(f) = 0`.
    pub n_module: bool,
    /// Free according to `r <= (m-1)/2` and `r(m-1-r) = (m-1)^2 - tau`, run
    /// only when an in-class census supplies tau.
    pub tjurina: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SyzygySummary {
    pub kernel_dims: BTreeMap<u32, u64>,
    pub witness: [String; 3],
}

/// Freeness verdict. Field order is the serialized key order.
#[derive(Debug, Clone, Serialize)]
pub struct FreenessReport {
    pub m: u32,
    pub r: u32,
    pub tau: u64,
    pub verdict: Verdict,
    pub exponents: Option<(u32, u32)>,
    pub n_dims: BTreeMap<u32, u64>,
    pub nearly_free_criterion: &'static str,
    pub routes: Routes,
    /// Shape of the minimal resolution of `M(f)`, derived from the exponents.
    pub resolution: Option<String>,
    pub milnor_hilbert: BTreeMap<u32, u64>,
    pub syzygy: SyzygySummary,
    /// Primes used for the graded dimensions; empty when computed exactly.
    pub primes: Vec<u64>,
}

/// `0 -> S(-d1-m+1) + S(-d2-m+1) -> S(-m+1)^3 -> S` with equal shifts merged.
pub fn resolution_shape(m: u32, d1: u32, d2: u32) -> String {
    let s = m - 1;
    let left = if d1 == d2 {
        format!("S(-{})^2", d1 + s)
    } else {
        format!("S(-{}) + S(-{})", d1 + s, d2 + s)
    };
    format!("0 -> {left} -> S(-{s})^3 -> S")
}

/// Freeness verdict for `f`. `census_tau` is the total Tjurina number from an
/// in-class census, which enables the second route.
pub fn freeness(
    f: &HomPoly<AlgebraicElement>,
    census_tau: Option<u64>,
    opts: &MilnorOptions,
) -> Result<FreenessReport, MilnorError> {
    let comp = compute(f, opts)?;
    freeness_from(&comp, census_tau)
}

pub fn freeness_from(comp: &MilnorComputation, census_tau: Option<u64>) -> Result<FreenessReport, MilnorError> {
    let data = &comp.data;
    let m = data.m;
    let r = data.mdr();
    let tau = data.tau();
    if let Some(ct) = census_tau {
        if ct != tau {
            return Err(MilnorError::TauMismatch {
                census: ct,
                milnor: tau,
            });
        }
    }
    let route_a = data.n_dims.iter().all(|&d| d == 0);
    let route_b = census_tau.map(|t| {
        let mm = (m - 1) as i64;
        let rr = r as i64;
        2 * rr <= mm && rr * (mm - rr) == mm * mm - t as i64
    });
    if let Some(b) = route_b {
        if b != route_a {
            return Err(MilnorError::RouteDisagreement { route_a, route_b: b });
        }
    }
    let verdict = if route_a {
        Verdict::Free
    } else if data.n_dims.iter().all(|&d| d <= 1) {
        Verdict::NearlyFree
    } else {
        Verdict::Neither
    };
    let exponents = if route_a {
        let (d1, d2) = (r, m - 1 - r);
        let mm = (m - 1) as u64;
        if (d1 as u64) * (d2 as u64) + tau != mm * mm {
            return Err(MilnorError::ExponentIdentity { d1, d2, tau });
        }
        Some((d1, d2))
    } else {
        None
    };
    Ok(FreenessReport {
        m,
        r,
        tau,
        verdict,
        exponents,
        n_dims: to_map(&data.n_dims),
        nearly_free_criterion: NEARLY_FREE_CRITERION,
        routes: Routes {
            n_module: route_a,
            tjurina: route_b,
        },
        resolution: exponents.map(|(d1, d2)| resolution_shape(m, d1, d2)),
        milnor_hilbert: to_map(&data.hilbert),
        syzygy: SyzygySummary {
            kernel_dims: comp.syzygy.kernel_dims.clone(),
            witness: comp.syzygy.witness.clone().map(|p| format!("{p:?}")),
        },
        primes: comp.primes.clone(),
    })
}

/// Kernel dimension of the syzygy map in degree `q` from the Hilbert
/// function: `3 dim S_q - dim S_{q+m-1} + dim M(f)_{q+m-1}`.
pub fn kernel_dim_from_hilbert(m: u32, q: u32, hilbert_at: u64) -> i64 {
    3 * dim_s(q as i64) as i64 - dim_s((q + m - 1) as i64) as i64 + hilbert_at as i64
}

/// Rank of a matrix over a prime field; exposed for cross-checks.
pub fn rank_mod_p(rows: Vec<Vec<Fp>>, ncols: usize, p: u64) -> usize {
    let mut e = Echelon::new(ncols, Fp::new(0, p));
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

#[cfg(test)]
mod tests;
