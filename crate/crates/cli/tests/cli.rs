use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

#[path = "../src/report.rs"]
#[allow(dead_code)]
mod report;

fn balgen(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_balgen"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(bytes) = stdin {
            pipe.write_all(bytes).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn generate(dim: &str) -> Vec<u8> {
    let out = balgen(&["generate", "octahedral", "--dim", dim], None);
    assert!(out.status.success());
    out.stdout
}

fn schema() -> jsonschema::JSONSchema {
    let text = include_str!("../schema/report.schema.json");
    let value: Value = serde_json::from_str(text).unwrap();
    jsonschema::JSONSchema::compile(&value).expect("schema compiles")
}

fn assert_valid(report: &Value) {
    let schema = schema();
    let msgs: Vec<String> = match schema.validate(report) {
        Ok(()) => Vec::new(),
        Err(errors) => errors.map(|e| format!("{} at {}", e, e.instance_path)).collect(),
    };
    assert!(msgs.is_empty(), "schema violations: {msgs:?}");
}

#[test]
fn piped_octahedral_four_sphere_genus() {
    let out = balgen(&["genus", "-"], Some(&generate("4")));
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().filter(|l| l.starts_with('(')).collect();
    assert_eq!(rows.len(), 12);
    for r in rows {
        let cols: Vec<&str> = r.split("  ").map(str::trim).filter(|c| !c.is_empty()).collect();
        assert_eq!(cols[1], "5", "row {r}");
    }
    assert!(text.contains("balanced genus G = 5"));
}

#[test]
fn repeated_color_exits_with_two() {
    let bad = br#"{"dimension": 1, "colors": {"x": 0, "y": 0}, "facets": [["x", "y"]]}"#;
    let out = balgen(&["validate", "-"], Some(bad));
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("RepeatedColorInFacet"));
}

#[test]
fn report_for_octahedral_three_sphere() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("o3.json");
    std::fs::write(&path, generate("3")).unwrap();
    let out = balgen(&["report", path.to_str().unwrap(), "--json"], None);
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_valid(&report);
    let entries = report["genus"]["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 3);
    for e in entries {
        assert_eq!(e["embedding_euler"], 0);
    }
    assert_eq!(report["genus"]["genus"], 1);
    assert_eq!(report["pi1"]["upper"], 0);
}

#[test]
fn report_round_trips_and_is_deterministic() {
    let input = generate("4");
    let first = balgen(&["report", "-", "--json"], Some(&input));
    let second = balgen(&["report", "-", "--json"], Some(&input));
    assert_eq!(first.stdout, second.stdout);
    let parsed: report::Report = serde_json::from_slice(&first.stdout).unwrap();
    let reserialized = serde_json::to_string_pretty(&parsed).unwrap() + "\n";
    assert_eq!(reserialized.as_bytes(), first.stdout.as_slice());
    let text_a = balgen(&["report", "-"], Some(&input));
    let text_b = balgen(&["report", "-"], Some(&input));
    assert_eq!(text_a.stdout, text_b.stdout);
}

#[test]
fn every_command_accepts_generated_output() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    std::fs::write(&a, generate("3")).unwrap();
    let sum = balgen(
        &["connsum", a.to_str().unwrap(), "--facet", "0", a.to_str().unwrap(), "--facet", "7"],
        None,
    );
    assert!(sum.status.success());
    let random = balgen(&["generate", "random-sum", "--dim", "3", "--count", "3"], None);
    assert!(random.status.success());
    for input in [&sum.stdout, &random.stdout] {
        for args in [
            vec!["validate", "-"],
            vec!["flags", "-", "--json"],
            vec!["flags", "-", "--set", "0,2"],
            vec!["structure", "-", "--set", "1,3"],
            vec!["dual", "-", "--dot", "-", "--pair", "0,1"],
            vec!["genus", "-", "--all", "--json"],
            vec!["verify", "-", "--m", "0"],
            vec!["pi1", "-", "--set", "0,1", "--seed", "4"],
            vec!["report", "-"],
        ] {
            let out = balgen(&args, Some(input));
            assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        }
    }
}

#[test]
fn dot_output_is_stable() {
    let input = generate("3");
    let a = balgen(&["dual", "-", "--dot", "-"], Some(&input));
    let b = balgen(&["dual", "-", "--dot", "-"], Some(&input));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.starts_with("graph dual {"));
    assert_eq!(text.matches(" -- ").count(), 32);
}

#[test]
fn failed_assertion_exits_with_one() {
    let out = balgen(&["verify", "-", "--m", "2"], Some(&generate("3")));
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn generated_sum_is_seeded() {
    let a = balgen(&["generate", "random-sum", "--dim", "4", "--count", "3", "--seed", "9"], None);
    let b = balgen(&["generate", "random-sum", "--dim", "4", "--count", "3", "--seed", "9"], None);
    assert_eq!(a.stdout, b.stdout);
    let c = balgen(&["generate", "random-sum", "--dim", "4", "--count", "3", "--seed", "10"], None);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn usage_errors_exit_with_two() {
    let out = balgen(&["structure", "-", "--set", "0,1,2"], Some(&generate("3")));
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("BadArity"));
    let out = balgen(&["genus", "/nonexistent/file.json"], None);
    assert_eq!(out.status.code(), Some(2));
}
