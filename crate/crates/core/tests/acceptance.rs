//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines are always printed.

use std::process::ExitCode;

use cll_core::analysis::AnalysisOptions;
use cll_core::verify::{run, Context};

fn main() -> ExitCode {
    let filter = std::env::args().skip(1).find(|a| !a.starts_with('-'));
    let ctx = Context::new(AnalysisOptions::default());
    let results = run(&ctx, filter.as_deref());
    for r in &results {
        println!("{} ({} ms)", r.line(), r.elapsed_ms);
        for f in &r.failures {
            println!("    {f}");
        }
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    println!("{} criteria, {} failed", results.len(), failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
