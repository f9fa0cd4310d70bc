//! The full pipeline for one arrangement: census, freeness, bounds.

use serde::Serialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::bounds::{bounds_report, BoundsReport, MdrFacts};
use crate::geometry::{
    census, census_exact, to_json, validate, Arrangement, Census, CensusOptions, GeometryError, WeakCombinatorics,
};
use crate::milnor::{freeness, FreenessReport, MilnorError, MilnorOptions, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalysisOptions {
    pub primes: usize,
    pub seed: u64,
    /// Exact census where every singular point is defined over the base
    /// field, and exact Jacobian computations.
    pub exact: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            primes: 3,
            seed: 0,
            exact: false,
        }
    }
}

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Milnor(#[from] MilnorError),
}

impl AnalysisError {
    pub fn is_validation_error(&self) -> bool {
        matches!(self, AnalysisError::Geometry(e) if e.is_validation_error())
    }

    /// Two independent computations disagreed.
    pub fn is_soundness_failure(&self) -> bool {
        match self {
            AnalysisError::Geometry(e) => matches!(
                e,
                GeometryError::PrimeDisagreement(_) | GeometryError::BezoutViolation { .. }
            ),
            AnalysisError::Milnor(e) => e.is_soundness_failure(),
        }
    }
}

/// Field order is the serialized key order.
#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub name: String,
    /// First 16 hex digits of the SHA-256 of the arrangement file.
    pub hash: String,
    pub d: u32,
    pub k: u32,
    pub m: u32,
    pub weak_combinatorics: Option<WeakCombinatorics>,
    pub census: Census,
    pub freeness: FreenessReport,
    /// Only for in-class arrangements.
    pub bounds: Option<BoundsReport>,
    pub seed: u64,
    pub primes: usize,
}

impl AnalysisReport {
    pub fn verdict(&self) -> Verdict {
        self.freeness.verdict
    }
}

pub fn arrangement_hash(arr: &Arrangement) -> String {
    let digest = Sha256::digest(to_json(arr).as_bytes());
    digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

/// Exact census when requested and available, modular otherwise.
pub fn run_census(arr: &Arrangement, opts: &AnalysisOptions) -> Result<Census, GeometryError> {
    if opts.exact {
        if let Some(c) = census_exact(arr, opts.seed)? {
            return Ok(c);
        }
    }
    census(
        arr,
        &CensusOptions {
            primes: opts.primes,
            seed: opts.seed,
        },
    )
}

pub fn analyze(arr: &Arrangement, opts: &AnalysisOptions) -> Result<AnalysisReport, AnalysisError> {
    validate(arr)?;
    let c = run_census(arr, opts)?;
    let mopts = MilnorOptions {
        primes: opts.primes,
        seed: opts.seed,
        exact: opts.exact,
    };
    let fr = freeness(&arr.defining_polynomial(), c.tau, &mopts)?;
    let weak = c.in_class.then(|| c.weak_combinatorics(arr.d(), arr.k()));
    let bounds = weak.map(|w| {
        let facts = MdrFacts {
            mdr: fr.r,
            free: fr.verdict == Verdict::Free,
        };
        bounds_report(&w, Some(facts))
    });
    Ok(AnalysisReport {
        name: arr.display_name().to_string(),
        hash: arrangement_hash(arr),
        d: arr.d(),
        k: arr.k(),
        m: arr.m(),
        weak_combinatorics: weak,
        census: c,
        freeness: fr,
        bounds,
        seed: opts.seed,
        primes: opts.primes,
    })
}
