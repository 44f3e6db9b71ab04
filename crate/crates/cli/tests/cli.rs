//! End-to-end runs of the groupds binary: every subcommand, the documented
//! exit codes, and the bench-report schema.

use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_groupds"))
}

fn workdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("groupds-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

#[test]
fn gen_build_query_verify_round_trip() {
    let dir = workdir("round");
    let tbl = dir.join("s4.tbl");
    let gds = dir.join("s4.gds");

    let out = run(&["gen", "symmetric", "4", "-o", tbl.to_str().unwrap()]);
    assert!(out.status.success());

    let out = run(&["build", tbl.to_str().unwrap(), "-o", gds.to_str().unwrap()]);
    assert!(out.status.success());
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["n"], 24);
    assert_eq!(report["case"], "case1");

    // query agrees with the table for a few pairs
    let table_text = std::fs::read_to_string(&tbl).unwrap();
    let rows: Vec<Vec<u64>> = table_text
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().map(|t| t.parse().unwrap()).collect())
        .collect();
    for (a, b) in [(1u64, 1u64), (2, 3), (24, 24), (7, 13)] {
        let out = run(&["query", gds.to_str().unwrap(), &a.to_string(), &b.to_string()]);
        assert!(out.status.success());
        let got: u64 = String::from_utf8_lossy(&out.stdout).trim().parse().unwrap();
        assert_eq!(got, rows[(a - 1) as usize][(b - 1) as usize]);
    }

    let out = run(&["verify", tbl.to_str().unwrap(), "--gds", gds.to_str().unwrap()]);
    assert!(out.status.success());
}

#[test]
fn usage_errors_exit_1() {
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["query"]); // missing args
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_exits_0() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn data_errors_exit_2() {
    let dir = workdir("data");
    let bad = dir.join("bad.tbl");
    std::fs::write(&bad, "not a table\n").unwrap();
    let out = run(&["build", bad.to_str().unwrap(), "-o", dir.join("x.gds").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["series", dir.join("missing.tbl").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // oversized generation request
    let out = run(&["gen", "cyclic", "6001"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verification_failures_exit_3() {
    let dir = workdir("verify");
    // a Latin-square-shaped file that is not a group
    let bad = dir.join("notgroup.tbl");
    std::fs::write(&bad, "2\n1 2\n2 2\n").unwrap();
    let out = run(&["verify", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));

    // corrupt structure file against a valid table
    let tbl = dir.join("z12.tbl");
    let gds = dir.join("z12.gds");
    assert!(run(&["gen", "cyclic", "12", "-o", tbl.to_str().unwrap()]).status.success());
    assert!(run(&["build", tbl.to_str().unwrap(), "-o", gds.to_str().unwrap()])
        .status
        .success());
    let mut bytes = std::fs::read(&gds).unwrap();
    let mid = bytes.len() / 2;
    bytes.truncate(mid);
    std::fs::write(&gds, bytes).unwrap();
    let out = run(&["verify", tbl.to_str().unwrap(), "--gds", gds.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn series_reports_factors_as_json() {
    let dir = workdir("series");
    let tbl = dir.join("s4.tbl");
    assert!(run(&["gen", "symmetric", "4", "-o", tbl.to_str().unwrap()]).status.success());
    let out = run(&["series", tbl.to_str().unwrap()]);
    assert!(out.status.success());
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["orders"], serde_json::json!([24, 12, 4, 2, 1]));
    assert_eq!(doc["factor_orders"], serde_json::json!([2, 3, 2, 2]));
    assert_eq!(doc["solvable"], Value::Bool(true));
}

#[test]
fn audit_cfsg_passes_and_writes_report() {
    let dir = workdir("audit");
    let json = dir.join("audit.json");
    let out = run(&[
        "audit-cfsg",
        "--max-m",
        "6",
        "--max-q",
        "9",
        "--json",
        json.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let rows: Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    let rows = rows.as_array().unwrap();
    assert!(rows.iter().all(|r| r["pass"] == Value::Bool(true)));
    // the Tits row carries its exact orders
    let tits = rows.iter().find(|r| r["family"] == "2F_4(2)'").unwrap();
    assert_eq!(tits["h"], "17971200");
    assert_eq!(tits["h1"], "11232");
    assert_eq!(tits["h2"], "32");
}

// -- bench report schema ----------------------------------------------------

/// Minimal JSON-schema checker covering the subset the bench schema uses:
/// type, required, properties, items, enum, minimum, maximum.
fn validate(schema: &Value, value: &Value, path: &str) -> Result<(), String> {
    if let Some(ty) = schema.get("type").and_then(|t| t.as_str()) {
        let ok = match ty {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "string" => value.is_string(),
            "boolean" => value.is_boolean(),
            "integer" => value.is_i64() || value.is_u64(),
            "number" => value.is_number(),
            other => return Err(format!("{path}: unknown schema type {other}")),
        };
        if !ok {
            return Err(format!("{path}: expected {ty}, got {value}"));
        }
    }
    if let Some(allowed) = schema.get("enum").and_then(|e| e.as_array()) {
        if !allowed.contains(value) {
            return Err(format!("{path}: {value} not in {allowed:?}"));
        }
    }
    if let Some(min) = schema.get("minimum").and_then(|m| m.as_f64()) {
        let v = value.as_f64().ok_or(format!("{path}: not numeric"))?;
        if v < min {
            return Err(format!("{path}: {v} below minimum {min}"));
        }
    }
    if let Some(max) = schema.get("maximum").and_then(|m| m.as_f64()) {
        let v = value.as_f64().ok_or(format!("{path}: not numeric"))?;
        if v > max {
            return Err(format!("{path}: {v} above maximum {max}"));
        }
    }
    if let Some(required) = schema.get("required").and_then(|r| r.as_array()) {
        for key in required {
            let key = key.as_str().unwrap();
            if value.get(key).is_none() {
                return Err(format!("{path}: missing required field {key}"));
            }
        }
    }
    if let Some(props) = schema.get("properties").and_then(|p| p.as_object()) {
        for (key, sub) in props {
            if let Some(v) = value.get(key) {
                validate(sub, v, &format!("{path}.{key}"))?;
            }
        }
    }
    if let Some(items) = schema.get("items") {
        if let Some(arr) = value.as_array() {
            for (i, v) in arr.iter().enumerate() {
                validate(items, v, &format!("{path}[{i}]"))?;
            }
        }
    }
    Ok(())
}

#[test]
fn bench_report_matches_checked_in_schema() {
    let dir = workdir("bench");
    let tbl = dir.join("d12.tbl");
    let json = dir.join("report.json");
    assert!(run(&["gen", "dihedral", "12", "-o", tbl.to_str().unwrap()]).status.success());
    let out = run(&[
        "bench",
        tbl.to_str().unwrap(),
        "--json",
        json.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));

    let schema: Value = serde_json::from_str(include_str!("../schema/bench-report.schema.json"))
        .expect("schema file parses");
    let report: Value =
        serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).expect("report parses");
    validate(&schema, &report, "$").unwrap();
    assert_eq!(report["pass"], Value::Bool(true));
}

#[test]
fn gen_is_deterministic_across_runs() {
    let dir = workdir("deterministic");
    let a = dir.join("a.tbl");
    let b = dir.join("b.tbl");
    assert!(run(&["gen", "alternating", "5", "-o", a.to_str().unwrap()]).status.success());
    assert!(run(&["gen", "alternating", "5", "-o", b.to_str().unwrap()]).status.success());
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn perm_gens_subcommand_builds_psl27() {
    let dir = workdir("permgens");
    let gens = dir.join("psl27.gens");
    std::fs::write(&gens, "(1 2 3 4 5 6 7)\n(1 8)(2 7)(3 4)(5 6)\n").unwrap();
    let tbl = dir.join("psl27.tbl");
    assert!(run(&["gen", "perm-gens", gens.to_str().unwrap(), "-o", tbl.to_str().unwrap()])
        .status
        .success());
    let text = std::fs::read_to_string(&tbl).unwrap();
    assert_eq!(text.lines().next(), Some("168"));
}
