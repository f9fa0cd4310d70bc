use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context as _};
use clap::{Args, Parser, Subcommand, ValueEnum};
use cll_core::analysis::{analyze, AnalysisError, AnalysisOptions, AnalysisReport};
use cll_core::bounds::{spectrum, SingType};
use cll_core::classify::{
    classify_pair, in_class_catalog, pairs_up_to_degree, rule, verify_classification, PairReport, PairStatus,
    Realization,
};
use cll_core::geometry::{catalog, from_json, to_json, validate, Arrangement, GeometryError, CATALOG};
use cll_core::milnor::Verdict;
use cll_core::numbers::Rational;
use cll_core::verify::{self, Context};
use serde::Serialize;
use serde_json::json;

/// Exact analysis of arrangements of lines and smooth conics.
#[derive(Parser)]
#[command(name = "cll", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Census, freeness and bounds for one arrangement.
    Analyze(AnalyzeArgs),
    /// Candidate weak combinatorics of free arrangements, with pruning.
    Enumerate(EnumerateArgs),
    /// Check the classification of free arrangements against the catalog.
    Classify(OutputArgs),
    /// Spectrum of a singularity type: A1, A3, D4 or an integer m for m
    /// concurrent lines.
    Spectrum(SpectrumArgs),
    /// Built-in arrangements.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Run every reproduction criterion.
    VerifyPaper(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ComputeArgs {
    /// Number of primes for modular computations.
    #[arg(long, default_value_t = 3)]
    primes: usize,
    /// Random seed; the CLL_SEED environment variable takes precedence.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Exact census and Jacobian computations where possible.
    #[arg(long)]
    exact: bool,
}

impl ComputeArgs {
    fn options(&self) -> anyhow::Result<AnalysisOptions> {
        let seed = match std::env::var("CLL_SEED") {
            Ok(s) => s
                .trim()
                .parse()
                .with_context(|| format!("CLL_SEED={s} is not an integer"))?,
            Err(_) => self.seed,
        };
        Ok(AnalysisOptions {
            primes: self.primes.max(1),
            seed,
            exact: self.exact,
        })
    }
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Arrangement file (JSON).
    path: Option<PathBuf>,
    /// Analyze a catalog arrangement instead of a file.
    #[arg(long, conflicts_with = "path")]
    catalog: Option<String>,
    #[command(flatten)]
    compute: ComputeArgs,
    #[command(flatten)]
    out: OutputArgs,
    /// Include wall-clock timing in the report.
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, requires = "k", conflicts_with = "max_m")]
    d: Option<u32>,
    #[arg(long, requires = "d")]
    k: Option<u32>,
    /// All (d, k) with k >= 1 and 3 <= d + 2k <= max-m.
    #[arg(long)]
    max_m: Option<u32>,
    /// List pruned candidates too.
    #[arg(long)]
    all: bool,
    /// Analyze the catalog and mark survivors realized by a free arrangement.
    #[arg(long)]
    realize: bool,
    #[command(flatten)]
    compute: ComputeArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct SpectrumArgs {
    kind: String,
    /// Also print the spectral mass in (LO, HI], e.g. --interval 1/3 4/3.
    #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_hyphen_values = true)]
    interval: Option<Vec<String>>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Names and descriptions.
    List,
    /// One arrangement and its defining polynomial.
    Show { name: String },
    /// One arrangement as a JSON file.
    Export {
        name: String,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Run only criteria whose group or title contains this text.
    #[arg(long)]
    filter: Option<String>,
    #[command(flatten)]
    compute: ComputeArgs,
    #[command(flatten)]
    out: OutputArgs,
}

/// An error with its exit code: 2 for bad input, 3 when two independent
/// computations disagree, 1 otherwise.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        Failure { code: 1, error }
    }
}

impl From<AnalysisError> for Failure {
    fn from(e: AnalysisError) -> Self {
        let code = if e.is_validation_error() {
            2
        } else if e.is_soundness_failure() {
            3
        } else {
            1
        };
        Failure { code, error: e.into() }
    }
}

fn invalid(e: GeometryError) -> Failure {
    Failure {
        code: 2,
        error: e.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Analyze(a) => cmd_analyze(a),
        Command::Enumerate(a) => cmd_enumerate(a),
        Command::Classify(o) => cmd_classify(o),
        Command::Spectrum(a) => cmd_spectrum(a),
        Command::Catalog { action } => cmd_catalog(action),
        Command::VerifyPaper(a) => cmd_verify(a),
    }
}

/// Writes the whole text at once; files go through a temporary sibling and
/// a rename so a failed run never leaves partial output.
fn emit(text: &str, output: Option<&Path>) -> anyhow::Result<()> {
    match output {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => {
            let mut tmp = path.as_os_str().to_owned();
            tmp.push(".tmp");
            let tmp = PathBuf::from(tmp);
            std::fs::write(&tmp, text).with_context(|| format!("writing {}", tmp.display()))?;
            std::fs::rename(&tmp, path).with_context(|| format!("writing {}", path.display()))
        }
    }
}

fn pretty(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn load(a: &AnalyzeArgs) -> Result<Arrangement, Failure> {
    let arr = match (&a.path, &a.catalog) {
        (_, Some(name)) => catalog(name).map_err(invalid)?,
        (Some(path), None) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure {
                code: 2,
                error: anyhow!("cannot read {}: {e}", path.display()),
            })?;
            from_json(&text).map_err(invalid)?
        }
        (None, None) => {
            return Err(Failure {
                code: 2,
                error: anyhow!("give an arrangement file or --catalog NAME"),
            })
        }
    };
    validate(&arr).map_err(invalid)?;
    Ok(arr)
}

fn cmd_analyze(a: AnalyzeArgs) -> Result<u8, Failure> {
    let arr = load(&a)?;
    let opts = a.compute.options()?;
    let start = Instant::now();
    let report = analyze(&arr, &opts)?;
    let elapsed = start.elapsed();
    let text = match a.out.format {
        Format::Json => {
            let timing = a.timing.then_some(Timing {
                total_ms: elapsed.as_millis() as u64,
            });
            pretty(&Timed {
                report: &report,
                timing,
            })
        }
        Format::Table => {
            let mut t = analysis_table(&report);
            if a.timing {
                let _ = writeln!(t, "time: {} ms", elapsed.as_millis());
            }
            t
        }
    };
    emit(&text, a.out.output.as_deref())?;
    Ok(0)
}

#[derive(Serialize)]
struct Timing {
    total_ms: u64,
}

/// The report with an optional trailing `timing` object, keeping key order.
#[derive(Serialize)]
struct Timed<'a> {
    #[serde(flatten)]
    report: &'a AnalysisReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing: Option<Timing>,
}

fn analysis_table(r: &AnalysisReport) -> String {
    let mut s = String::new();
    let c = &r.census;
    let f = &r.freeness;
    let _ = writeln!(s, "{} (hash {})", r.name, r.hash);
    let _ = writeln!(s, "lines d = {}, conics k = {}, degree m = {}", r.d, r.k, r.m);
    let _ = writeln!(
        s,
        "census: n2 = {}, t = {}, n3 = {}, in class: {}",
        c.n2, c.t, c.n3, c.in_class
    );
    let p = c.pair_profile;
    if r.k >= 2 {
        let _ = writeln!(s, "conic pairs meeting in 2/3/4 points: {}/{}/{}", p.m2, p.m3, p.m4);
    }
    for pt in c.out_of_class_points() {
        let at = pt.coordinates.as_ref().map_or("(not rational)".to_string(), |x| {
            format!("({}:{}:{})", x[0], x[1], x[2])
        });
        let _ = writeln!(s, "  {} at {} on components {:?}", pt.local_type, at, pt.incident);
    }
    let _ = writeln!(s, "mdr r = {}, tau = {}", f.r, f.tau);
    let _ = write!(s, "verdict: {}", f.verdict);
    if let Some((d1, d2)) = f.exponents {
        let _ = write!(s, ", exponents ({d1}, {d2})");
    }
    if f.verdict == Verdict::NearlyFree {
        let _ = write!(s, " ({})", f.nearly_free_criterion);
    }
    let _ = writeln!(s);
    if let Some(res) = &f.resolution {
        let _ = writeln!(s, "resolution: {res}");
    }
    let n: Vec<String> = f
        .n_dims
        .iter()
        .filter(|(_, d)| **d > 0)
        .map(|(q, d)| format!("{q}:{d}"))
        .collect();
    if !n.is_empty() {
        let _ = writeln!(s, "dim N(f)_q: {}", n.join(" "));
    }
    if let Some(b) = &r.bounds {
        let _ = writeln!(s, "bounds:");
        for ch in &b.checks {
            let status = match ch.holds {
                Some(true) => "holds",
                Some(false) => "FAILS",
                None => "n/a",
            };
            let _ = writeln!(s, "  {:<6} {:<55} {} <= {}", status, ch.name, ch.lhs, ch.rhs);
        }
    }
    s
}

fn cmd_enumerate(a: EnumerateArgs) -> Result<u8, Failure> {
    let max_m = match (a.d, a.k, a.max_m) {
        (Some(d), Some(k), None) => d + 2 * k,
        (None, None, Some(m)) => m,
        _ => 0,
    };
    let mut realizations = Vec::new();
    if a.realize {
        for (name, weak, verdict, exponents) in in_class_catalog(max_m, &a.compute.options()?)? {
            if let (Verdict::Free, Some(exponents)) = (verdict, exponents) {
                realizations.push(Realization { name, weak, exponents });
            }
        }
    }
    let pairs: Vec<PairReport> = match (a.d, a.k, a.max_m) {
        (Some(d), Some(k), None) => vec![classify_pair(d, k, &realizations)],
        (None, None, Some(m)) => pairs_up_to_degree(m, &realizations),
        _ => {
            return Err(Failure {
                code: 2,
                error: anyhow!("give --d and --k, or --max-m"),
            })
        }
    };
    let text = match a.out.format {
        Format::Json => pretty(&pairs),
        Format::Table => enumerate_table(&pairs, a.all),
    };
    emit(&text, a.out.output.as_deref())?;
    Ok(0)
}

fn status_label(s: &PairStatus) -> String {
    match s {
        PairStatus::Realizable { realizations } => {
            format!("realizable: {}", realizations.join(", "))
        }
        PairStatus::ExcludedByCaseAnalysis { argument, .. } => {
            format!("survivors; excluded by case analysis ({argument})")
        }
        PairStatus::Empty => "no survivors".into(),
    }
}

fn enumerate_table(pairs: &[PairReport], all: bool) -> String {
    let mut s = String::new();
    for p in pairs {
        let _ = writeln!(
            s,
            "d = {}, k = {}, m = {}: {} candidates, {} survivors",
            p.d,
            p.k,
            p.m,
            p.candidates.len(),
            p.survivors().count()
        );
        for c in p.candidates.iter().filter(|c| all || c.survives()) {
            let fate = if c.survives() {
                match (&c.realization, &c.excluded_by) {
                    (Some(r), _) => format!("realized by {r}"),
                    (None, Some(why)) => format!("survives; {why}"),
                    (None, None) => "survives".into(),
                }
            } else {
                let names: Vec<String> = c
                    .pruned_by
                    .iter()
                    .map(|n| {
                        if rule(n).is_some_and(|r| r.heuristic) {
                            format!("{n} (heuristic)")
                        } else {
                            n.to_string()
                        }
                    })
                    .collect();
                format!("pruned: {}", names.join("; "))
            };
            let _ = writeln!(
                s,
                "  (n2, t, n3) = ({}, {}, {}), (d1, d2) = ({}, {}): {fate}",
                c.n2, c.t, c.n3, c.d1, c.d2
            );
        }
        if !p.candidates.is_empty() && p.survivors().next().is_none() && !all {
            let _ = writeln!(s, "  (use --all to list pruned candidates)");
        }
    }
    s
}

fn cmd_classify(o: OutputArgs) -> Result<u8, Failure> {
    let rep = verify_classification(&AnalysisOptions::default())?;
    let text = match o.format {
        Format::Json => pretty(&rep),
        Format::Table => {
            let mut s = String::new();
            for c in &rep.cases {
                let _ = writeln!(
                    s,
                    "case {} {:<5} counts {:?} exponents {:?}: {}",
                    c.case,
                    c.catalog,
                    c.found.0,
                    c.found.1,
                    if c.ok { "ok" } else { "MISMATCH" }
                );
            }
            let _ = writeln!(s, "weak combinatorics groups:");
            for g in &rep.groups {
                let names: Vec<String> = g.members.iter().map(|(n, v)| format!("{n} ({v})")).collect();
                let _ = writeln!(
                    s,
                    "  m = {}; n2 = {}, t = {}, n3 = {}: {}",
                    g.weak.m,
                    g.weak.n2,
                    g.weak.t,
                    g.weak.n3,
                    names.join(", ")
                );
            }
            let _ = writeln!(s, "(d, k) with m <= 9:");
            for p in &rep.pairs {
                let _ = writeln!(s, "  ({}, {}): {}", p.d, p.k, status_label(&p.status));
            }
            for f in &rep.failures {
                let _ = writeln!(s, "FAILURE: {f}");
            }
            s
        }
    };
    emit(&text, o.output.as_deref())?;
    Ok(if rep.passed() { 0 } else { 1 })
}

fn parse_type(kind: &str) -> anyhow::Result<SingType> {
    Ok(match kind.to_ascii_uppercase().as_str() {
        "A1" | "NODE" => SingType::A1,
        "A3" | "TACNODE" => SingType::A3,
        "D4" | "TRIPLE" => SingType::D4,
        other => {
            let m: u32 = other
                .parse()
                .map_err(|_| anyhow!("unknown type `{kind}`; use A1, A3, D4 or a number of lines"))?;
            if m < 2 {
                return Err(anyhow!("a multiple point needs at least two lines"));
            }
            SingType::CentralMultiple(m)
        }
    })
}

fn cmd_spectrum(a: SpectrumArgs) -> Result<u8, Failure> {
    let s = parse_type(&a.kind).map_err(|e| Failure { code: 2, error: e })?;
    let sp = spectrum(s);
    let interval = match &a.interval {
        Some(v) => {
            let lo: Rational = v[0].parse().map_err(|_| Failure {
                code: 2,
                error: anyhow!("bad bound {}", v[0]),
            })?;
            let hi: Rational = v[1].parse().map_err(|_| Failure {
                code: 2,
                error: anyhow!("bad bound {}", v[1]),
            })?;
            if lo >= hi {
                return Err(Failure {
                    code: 2,
                    error: anyhow!("empty interval ({lo}, {hi}]"),
                });
            }
            let mass = sp.deg_b(&lo, &hi);
            Some((lo, hi, mass))
        }
        None => None,
    };
    let text = match a.out.format {
        Format::Json => {
            let mut v = json!({
                "type": s.to_string(),
                "mu": s.mu(),
                "lct": s.lct(),
                "spectrum": sp,
            });
            if let Some((lo, hi, mass)) = &interval {
                v["interval"] = json!({ "lo": lo, "hi": hi, "mass": mass });
            }
            pretty(&v)
        }
        Format::Table => {
            let mut t = format!("{s}: mu = {}, lct = {}\n", s.mu(), s.lct());
            for (alpha, n) in sp.entries() {
                let _ = writeln!(t, "  {:>6}  x{n}", alpha.to_string());
            }
            if let Some((lo, hi, mass)) = &interval {
                let _ = writeln!(t, "mass in ({lo}, {hi}]: {mass}");
            }
            t
        }
    };
    emit(&text, a.out.output.as_deref())?;
    Ok(0)
}

fn cmd_catalog(action: CatalogAction) -> Result<u8, Failure> {
    match action {
        CatalogAction::List => {
            let mut s = String::new();
            for e in CATALOG {
                let arr = e.arrangement();
                let _ = writeln!(
                    s,
                    "{:<20} d={} k={} m={:<3} {}",
                    e.name,
                    arr.d(),
                    arr.k(),
                    arr.m(),
                    e.description
                );
            }
            print!("{s}");
        }
        CatalogAction::Show { name } => {
            let arr = catalog(&name).map_err(invalid)?;
            let e = CATALOG.iter().find(|e| e.name == name).expect("found above");
            println!("{}: {}", e.name, e.description);
            println!(
                "field: {} (minimal polynomial coefficients {:?})",
                arr.field.label(),
                arr.field.minpoly()
            );
            println!("f = {:?}", arr.defining_polynomial());
        }
        CatalogAction::Export { name, output } => {
            let arr = catalog(&name).map_err(invalid)?;
            let mut text = to_json(&arr);
            text.push('\n');
            emit(&text, output.as_deref())?;
        }
    }
    Ok(0)
}

fn cmd_verify(a: VerifyArgs) -> Result<u8, Failure> {
    let ctx = Context::new(a.compute.options()?);
    let results = verify::run(&ctx, a.filter.as_deref());
    if results.is_empty() {
        return Err(Failure {
            code: 2,
            error: anyhow!("no criterion matches the filter"),
        });
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    let text = match a.out.format {
        Format::Json => pretty(&json!({ "criteria": results, "failed": failed })),
        Format::Table => {
            let mut s = String::new();
            for r in &results {
                let _ = writeln!(s, "{} ({} ms)", r.line(), r.elapsed_ms);
                for f in &r.failures {
                    let _ = writeln!(s, "    {f}");
                }
            }
            let _ = writeln!(s, "{} criteria, {} failed", results.len(), failed);
            s
        }
    };
    emit(&text, a.out.output.as_deref())?;
    Ok(if failed == 0 { 0 } else { 1 })
}
