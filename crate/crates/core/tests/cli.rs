use std::process::Command;

use saxl_core::cli::main_with;

fn saxl(args: &[&str]) -> (i32, String, String) {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_saxl")).args(args).env("SAXL_CACHE_DIR", dir.path()).output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let (code, out, err) = saxl(&full);
    let v = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out} {err}"));
    (code, v)
}

#[test]
fn exit_codes() {
    assert_eq!(main_with(["saxl", "--no-cache", "check-a", "--k", "3"]), 0);
    assert_eq!(main_with(["saxl", "--no-cache", "check-a", "--k", "2", "--tensor-lambda", "3"]), 1);
    assert_eq!(main_with(["saxl", "--no-cache", "check-a", "--k", "9"]), 2);
    assert_eq!(main_with(["saxl", "no-such-command"]), 2);
    assert_eq!(main_with(["saxl", "orbit", "collapse", "--type", "C", "--partition", "3,x"]), 2);
    assert_eq!(main_with(["saxl", "pin", "--group", "E7"]), 2);
    assert_eq!(main_with(["saxl", "--help"]), 0);
}

#[test]
fn json_report_stream_shape() {
    let (code, v) = json(&["check-a", "--k", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["passed"], true);
    let r = &v["reports"][0];
    assert_eq!(r["check"], "check-a");
    assert_eq!(r["status"], "pass");
    assert_eq!(r["provenance"], "engine-computed");
    assert_eq!(r["tables"][0]["rows"].as_array().unwrap().len(), 11);

    let (code, v) = json(&["exceptional", "--group", "E8", "--verify-appendix"]);
    assert_eq!(code, 0);
    assert_eq!(v["reports"][0]["provenance"], "golden-data");
}

#[test]
fn markdown_grid_matches_label_multiplicity_layout() {
    let (code, out, _) = saxl(&["exceptional", "--group", "G2", "--verify-appendix"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("## "));
    assert!(out.contains("φ_{2,2} (6)"), "{out}");
    assert!(out.contains("φ_{1,3}'' (2)"), "{out}");
    assert!(out.trim_end().ends_with("all checks passed"));
}

#[test]
fn orbit_queries() {
    let (code, out, _) = saxl(&["orbit", "dmap", "--type", "B", "--partition", "4,1"]);
    assert_eq!(code, 0);
    assert!(out.contains("3,1,1"), "{out}");
    let (_, out, _) = saxl(&["orbit", "collapse", "--type", "C", "--partition", "3,3,1,1"]);
    assert!(out.contains("3,3,1,1"), "{out}");
    let (_, out, _) = saxl(&["orbit", "collapse", "--type", "C", "--partition", "3,1"]);
    assert!(out.contains("2,2"), "{out}");
    let (_, out, _) = saxl(&["orbit", "closure", "--a", "C:4,2", "--b", "C:3,3"]);
    assert!(out.contains("geq"), "{out}");
    let (_, out, _) = saxl(&["orbit", "dmap", "--type", "D", "--partition", "4,4", "--numeral", "I"]);
    assert!(out.contains("2,2,2,2:I"), "{out}");
    let (code, _, _) = saxl(&["orbit", "closure", "--a", "C:4,2", "--b", "C:2,2"]);
    assert_eq!(code, 2);
}

#[test]
fn cache_dir_is_populated_and_reused() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_saxl"))
            .args(["--format", "json", "check-a", "--k", "4"])
            .env("SAXL_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    assert!(first.status.success());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    let second = run();
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn selftest_subset_runs_in_order() {
    let (code, v) = json(&["selftest", "--only", "check-a"]);
    assert_eq!(code, 0);
    let subjects: Vec<&str> = v["reports"].as_array().unwrap().iter().map(|r| r["subject"].as_str().unwrap()).collect();
    assert_eq!(subjects.len(), 4);
    assert!(subjects[0].starts_with("S_3 "));
    assert!(subjects[3].starts_with("S_15 "));
}

#[test]
fn h4_pin_needs_stretch() {
    let (code, _, err) = saxl(&["pin", "--group", "H4"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
    let (code, v) = json(&["selftest", "--only", "pin-h4"]);
    assert_eq!(code, 0);
    assert_eq!(v["reports"][0]["status"], "skipped");
}
