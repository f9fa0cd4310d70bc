use std::process::{Command, Output};

use serde_json::Value;

fn cll(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cll"))
        .args(args)
        .env_remove("CLL_SEED")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn analyze_cl7_is_free_with_equal_exponents() {
    let v = json(&cll(&["analyze", "--catalog", "CL7", "--format", "json"]));
    assert_eq!(v["freeness"]["verdict"], "Free");
    assert_eq!(v["freeness"]["exponents"], serde_json::json!([3, 3]));
    assert_eq!(v["census"]["n2"], 0);
    assert_eq!(v["census"]["t"], 5);
    assert_eq!(v["census"]["n3"], 3);
    assert_eq!(v["census"]["in_class"], true);
}

#[test]
fn analyze_cl2_is_nearly_free_and_out_of_class() {
    let v = json(&cll(&["analyze", "--catalog", "CL2", "--format", "json"]));
    assert_eq!(v["freeness"]["verdict"], "NearlyFree");
    assert_eq!(v["census"]["in_class"], false);
    assert!(v["bounds"].is_null());
}

#[test]
fn report_keys_come_in_fixed_order() {
    let out = cll(&["analyze", "--catalog", "CL3", "--format", "json"]);
    json(&out);
    // Top-level keys sit at two-space indent in the pretty output.
    let text = String::from_utf8(out.stdout).unwrap();
    let keys: Vec<&str> = text
        .lines()
        .filter_map(|l| l.strip_prefix("  \""))
        .filter_map(|l| l.split('"').next())
        .collect();
    assert_eq!(
        keys,
        [
            "name",
            "hash",
            "d",
            "k",
            "m",
            "weak_combinatorics",
            "census",
            "freeness",
            "bounds",
            "seed",
            "primes"
        ]
    );
}

#[test]
fn malformed_input_exits_with_two_and_no_output() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"field\": ").unwrap();
    let out = cll(&["analyze", bad.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());

    let missing = dir.path().join("missing.json");
    assert_eq!(cll(&["analyze", missing.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn failed_run_leaves_no_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "[]").unwrap();
    let target = dir.path().join("report.json");
    let out = cll(&[
        "analyze",
        bad.to_str().unwrap(),
        "--format",
        "json",
        "-o",
        target.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!target.exists());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn degenerate_arrangement_is_a_validation_error() {
    let dir = tempfile::tempdir().unwrap();
    let export = dir.path().join("cl3.json");
    assert!(cll(&["catalog", "export", "CL3", "-o", export.to_str().unwrap()])
        .status
        .success());
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&export).unwrap()).unwrap();
    // x^2 as the conic: a double line, not smooth.
    let conic = &mut v["conics"][0];
    let n = conic.as_array().unwrap().len();
    for (i, c) in conic.as_array_mut().unwrap().iter_mut().enumerate() {
        *c = Value::from(if i == 0 { "1/1" } else { "0/1" });
    }
    assert_eq!(n, 6);
    let path = dir.path().join("singular.json");
    std::fs::write(&path, v.to_string()).unwrap();
    let out = cll(&["analyze", path.to_str().unwrap()]);
    assert_eq!(
        out.status.code(),
        Some(2),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn export_then_analyze_matches_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cl5.json");
    assert!(cll(&["catalog", "export", "CL5'", "-o", path.to_str().unwrap()])
        .status
        .success());
    let from_file = json(&cll(&["analyze", path.to_str().unwrap(), "--format", "json"]));
    let from_catalog = json(&cll(&["analyze", "--catalog", "CL5'", "--format", "json"]));
    assert_eq!(from_file, from_catalog);
}

#[test]
fn catalog_list_names_every_entry() {
    let out = cll(&["catalog", "list"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for name in ["CL1", "CL2", "CL3", "CL4", "CL5", "CL5'", "CL7", "dual-hesse"] {
        assert!(
            text.lines().any(|l| l.split_whitespace().next() == Some(name)),
            "{name}"
        );
    }
    assert_eq!(cll(&["catalog", "show", "nope"]).status.code(), Some(2));
}

#[test]
fn enumerate_single_line_and_conic() {
    let v = json(&cll(&["enumerate", "--d", "1", "--k", "1", "--format", "json"]));
    let pairs = v.as_array().unwrap();
    assert_eq!(pairs.len(), 1);
    let surv: Vec<&Value> = pairs[0]["candidates"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pruned_by"].as_array().unwrap().is_empty())
        .collect();
    assert_eq!(surv.len(), 1);
    assert_eq!(
        (surv[0]["n2"].as_u64(), surv[0]["t"].as_u64(), surv[0]["n3"].as_u64()),
        (Some(0), Some(1), Some(0))
    );
}

#[test]
fn enumerate_up_to_nine() {
    let v = json(&cll(&["enumerate", "--max-m", "9", "--format", "json"]));
    let pairs = v.as_array().unwrap();
    assert!(pairs
        .iter()
        .all(|p| p["m"].as_u64().unwrap() <= 9 && p["k"].as_u64().unwrap() >= 1));
    assert_eq!(cll(&["enumerate", "--d", "1"]).status.code(), Some(2));
}

#[test]
fn spectrum_of_a_tacnode() {
    let v = json(&cll(&["spectrum", "A3", "--format", "json"]));
    assert_eq!(v["mu"], 3);
    assert_eq!(v["lct"], "3/4");
    let table = cll(&["spectrum", "4", "--interval", "1/3", "4/3"]);
    assert!(String::from_utf8(table.stdout)
        .unwrap()
        .contains("mass in (1/3, 4/3]: 8"));
    assert_eq!(cll(&["spectrum", "E8"]).status.code(), Some(2));
}

#[test]
fn output_is_byte_identical_across_runs() {
    let a = cll(&["analyze", "--catalog", "CL5", "--format", "json", "--seed", "7"]);
    let b = cll(&["analyze", "--catalog", "CL5", "--format", "json", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn environment_seed_overrides_flag() {
    let out = Command::new(env!("CARGO_BIN_EXE_cll"))
        .args(["analyze", "--catalog", "CL3", "--format", "json", "--seed", "1"])
        .env("CLL_SEED", "42")
        .output()
        .unwrap();
    assert_eq!(json(&out)["seed"], 42);
    let bad = Command::new(env!("CARGO_BIN_EXE_cll"))
        .args(["analyze", "--catalog", "CL3"])
        .env("CLL_SEED", "x")
        .output()
        .unwrap();
    assert!(!bad.status.success());
}

#[test]
fn timing_is_opt_in() {
    let plain = json(&cll(&["analyze", "--catalog", "CL4", "--format", "json"]));
    assert!(plain.get("timing").is_none());
    let timed = json(&cll(&["analyze", "--catalog", "CL4", "--format", "json", "--timing"]));
    assert!(timed["timing"]["total_ms"].is_u64());
}

#[test]
fn verify_filter_runs_one_group() {
    let out = cll(&["verify-paper", "--filter", "bounds"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text.lines()
            .filter(|l| l.starts_with("PASS") || l.starts_with("FAIL"))
            .count(),
        1
    );
    assert_eq!(
        cll(&["verify-paper", "--filter", "no such group"]).status.code(),
        Some(2)
    );
}

#[test]
fn enumerate_marks_catalog_realizations() {
    let out = cll(&["enumerate", "--d", "3", "--k", "2", "--realize"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.contains("(n2, t, n3) = (0, 5, 3), (d1, d2) = (3, 3): realized by CL7"),
        "{text}"
    );
}
