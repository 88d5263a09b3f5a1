use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use hconv_core::geochk::sweep::CaseId;
use serde_json::Value;

fn hconv(args: &[&str], out: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hconv"))
        .args(args)
        .arg("--out")
        .arg(out)
        .output()
        .unwrap()
}

fn bare(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hconv")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn report(dir: &Path) -> Vec<Value> {
    let text = fs::read_to_string(dir.join("report.json")).unwrap();
    serde_json::from_str::<Value>(&text).unwrap().as_array().unwrap().clone()
}

#[test]
fn strip_case_reports_z_squared() {
    let dir = tempfile::tempdir().unwrap();
    let o = hconv(&["verify", "t2.5", "--a-range", "-0.9:0.9:0.1"], dir.path());
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let rows = report(dir.path());
    assert_eq!(rows.len(), 19);
    for (i, r) in rows.iter().enumerate() {
        assert_eq!(r["id"], i);
        assert_eq!(r["case"], "T2.5");
        assert_eq!(r["verdict"], "pass");
        assert!(r["note"].as_str().unwrap().contains("omega-tilde == z^2"));
        for key in ["max_omega", "min_hs", "roots"] {
            assert!(r["metrics"].get(key).is_some());
        }
    }
    assert_eq!(rows[1]["params"]["a"], -0.8);
    assert!(stdout(&o).contains("19 rows: 19 pass"));
}

#[test]
fn quartic_case_has_four_roots_inside() {
    let dir = tempfile::tempdir().unwrap();
    let o = hconv(&["verify", "t2.3", "--a-range", "0.05:0.95:0.05", "--format", "json"], dir.path());
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let rows = report(dir.path());
    assert_eq!(rows.len(), 19);
    for r in &rows {
        assert!(r["note"].as_str().unwrap().contains("4 roots inside"));
        assert_eq!(r["metrics"]["roots"].as_array().unwrap().len(), 4);
    }
    assert!(!dir.path().join("samples.csv").exists());
}

#[test]
fn open_question_is_exploratory() {
    let dir = tempfile::tempdir().unwrap();
    let o = hconv(&["explore", "oq1", "--n", "3", "--theta", "0", "--a", "0.5"], dir.path());
    assert_eq!(code(&o), 0);
    let rows = report(dir.path());
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["verdict"], "exploratory");
    assert_eq!(rows[0]["params"]["n"], 3);
    assert!(rows[0]["note"].as_str().unwrap().starts_with("exploratory: no assertion"));
    assert!(stdout(&o).contains("exploratory: no assertion"));
}

#[test]
fn reruns_are_byte_identical() {
    let (d1, d2) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let args = ["verify", "t2.2", "--n", "2,3", "--gamma", "pi/4", "--theta", "1", "--a", "0.4,0.9"];
    assert_eq!(code(&hconv(&args, d1.path())), 0);
    assert_eq!(code(&hconv(&args, d2.path())), 0);
    for name in ["report.json", "samples.csv", "t2.2.svg"] {
        let a = fs::read(d1.path().join(name)).unwrap();
        let b = fs::read(d2.path().join(name)).unwrap();
        assert!(a == b, "{name} differs between runs");
    }
}

#[test]
fn samples_and_plot() {
    let dir = tempfile::tempdir().unwrap();
    let o = hconv(&["plot", "t2.5", "--a", "-0.5,0.5", "--curve-points", "64"], dir.path());
    assert_eq!(code(&o), 0);
    assert!(!dir.path().join("report.json").exists());
    let csv = fs::read_to_string(dir.path().join("samples.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("param-id,t-index,re,im"));
    let body: Vec<&str> = lines.collect();
    assert_eq!(body.len(), 128);
    assert!(body[64].starts_with("1,0,"));
    let svg = fs::read_to_string(dir.path().join("t2.5.svg")).unwrap();
    assert!(svg.contains(r#"viewBox="0 0 1000 1000""#));
    assert_eq!(svg.matches("<polyline").count(), 2);
}

#[test]
fn config_file_with_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    fs::write(&cfg, r#"{"case": "t2.4", "a": [0.25, 0.5], "format": ["json"]}"#).unwrap();
    let out = dir.path().join("out");
    let o = hconv(&["verify", "--config", cfg.to_str().unwrap()], &out);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert_eq!(report(&out).len(), 2);
    let o = hconv(&["verify", "--config", cfg.to_str().unwrap(), "--a", "0.75"], &out);
    assert_eq!(code(&o), 0);
    let rows = report(&out);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["params"]["a"], 0.75);
}

#[test]
fn failed_assertion_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let o = hconv(
        &["verify", "t3.9", "--n", "1", "--alpha1", "0.5", "--alpha2", "-0.5", "--t", "0.5", "--format", "json"],
        dir.path(),
    );
    assert_eq!(code(&o), 2);
    assert_eq!(report(dir.path())[0]["verdict"], "fail");
}

#[test]
fn inconclusive_convexity_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let o = hconv(
        &["verify", "t2.4", "--a", "0.95", "--convexity", "--convexity-order", "1024", "--format", "json"],
        dir.path(),
    );
    assert_eq!(code(&o), 3, "{}", stdout(&o));
    let rows = report(dir.path());
    assert_eq!(rows[0]["verdict"], "indeterminate");
    assert!(rows[0]["note"].as_str().unwrap().contains("convexity inconclusive"));
}

#[test]
fn invalid_configs_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad: [&[&str]; 9] = [
        &["verify", "t9.9"],
        &["verify", "oq1"],
        &["explore", "t2.5"],
        &["verify", "t2.5", "--a", "2"],
        &["verify", "t2.5", "--a-range", "0.9:-0.9:0.1"],
        &["verify", "t2.5", "--gamma", "0"],
        &["verify", "t2.5", "--truncation", "1024"],
        &["verify", "t2.5", "--format", "png"],
        &["verify", "t2.5", "--no-such-flag"],
    ];
    for args in bad {
        let o = hconv(args, dir.path());
        assert_eq!(code(&o), 1, "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    assert_eq!(code(&bare(&[])), 1);
}

#[test]
fn unwritable_output_exits_four() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    fs::write(&blocker, "").unwrap();
    let o = hconv(&["verify", "t2.5", "--a", "0.5", "--format", "json"], &blocker.join("sub"));
    assert_eq!(code(&o), 4);
    let o = bare(&["verify", "--config", dir.path().join("absent.json").to_str().unwrap()]);
    assert_eq!(code(&o), 4);
}

#[test]
fn help_lists_every_case() {
    for args in [&["--help"][..], &["verify", "--help"], &["explore", "--help"], &["plot", "--help"]] {
        let o = bare(args);
        assert_eq!(code(&o), 0);
        let text = stdout(&o);
        for case in CaseId::ALL {
            assert!(text.contains(case.as_str()), "{args:?} misses {case}");
        }
    }
}

#[test]
fn every_case_is_reachable() {
    let dir = tempfile::tempdir().unwrap();
    for case in CaseId::ALL {
        let verb = if case.is_exploratory() { "explore" } else { "verify" };
        let mut args = vec![verb, case.as_str(), "--format", "json"];
        let narrow: &[&str] = match case {
            CaseId::T22 => &["--n", "2", "--gamma", "0", "--theta", "0", "--a", "0.5"],
            CaseId::T23 | CaseId::T24 | CaseId::T25 => &["--a", "0.5"],
            CaseId::T38 => &["--n", "1", "--alpha", "0", "--t", "0.5"],
            CaseId::T39 | CaseId::T310 | CaseId::T311 => &["--n", "2", "--alpha1", "0", "--alpha2", "0", "--t", "0.5"],
            _ => &["--n", "3", "--theta", "0", "--a", "0.5"],
        };
        args.extend_from_slice(narrow);
        let o = hconv(&args, dir.path());
        let rows = report(dir.path());
        assert!(!rows.is_empty(), "{case}");
        assert!(rows.iter().all(|r| r["case"] == case.as_str()));
        assert!(code(&o) == 0 || code(&o) == 2, "{case}: {}", stdout(&o));
    }
}

#[test]
fn fixtures_verb_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let o = bare(&["fixtures", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let count = fs::read_dir(dir.path()).unwrap().count();
    assert_eq!(count, 10);
    assert_eq!(stdout(&o).lines().count(), 10);
}
