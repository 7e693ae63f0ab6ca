use std::path::Path;
use std::process::{Command, Output};

use painleve_cli::args::{parse_groups, parse_suites, Suite};
use painleve_cli::exit_status;
use painleve_core::report::{CheckRecord, Status, VerificationReport};
use painleve_core::weyl::GroupId;
use proptest::prelude::*;
use serde_json::Value;

fn painleve(args: &[&str]) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_painleve"));
    for v in ["GROUP", "SUITE", "REPORT", "SEED", "MONOMIAL_CAP", "TIME_CAP_SECS", "TOL"] {
        c.env_remove(format!("PAINLEVE_{v}"));
    }
    c.args(args).output().unwrap()
}

fn read(p: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

fn strip_timing(v: &mut Value) {
    for r in v["records"].as_array_mut().unwrap() {
        r.as_object_mut().unwrap().remove("wall_time_secs");
    }
}

#[test]
fn d5_coxeter_run() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = painleve(&["verify", "--group", "d5", "--suite", "coxeter", "--report", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = read(&path);
    assert_eq!(v["schema"], 1);
    let recs = v["records"].as_array().unwrap();
    assert_eq!(recs.len(), 21);
    assert!(recs.iter().all(|r| r["status"] == "PASS" && r["witness"] == "0"));
    assert_eq!(v["summary"]["pass"], 21);
    assert_eq!(v["summary"]["exit_status"], 0);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout.lines().count(), 22);
    assert!(stdout.lines().next().unwrap().starts_with("PASS"));
}

#[test]
fn unknown_names_are_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let p = path.to_str().unwrap();
    for args in [
        vec!["verify", "--group", "d5", "--suite", "nosuch", "--report", p],
        vec!["verify", "--group", "e8", "--report", p],
        vec!["dump", "tables"],
        vec!["integrate", "--system", "P7"],
    ] {
        let out = painleve(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    assert!(!path.exists());
    let out = Command::new(env!("CARGO_BIN_EXE_painleve"))
        .args(["verify", "--report", p])
        .env("PAINLEVE_SUITE", "bogus")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(!path.exists());
    assert_eq!(painleve(&["--help"]).status.code(), Some(0));
}

#[test]
fn exhausted_budget_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = painleve(&[
        "verify", "--group", "d5", "--suite", "coxeter", "--monomial-cap", "3", "--quiet", "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
    let v = read(&path);
    assert_eq!(v["summary"]["fail"], 0);
    assert!(v["summary"]["indeterminate"].as_u64().unwrap() > 0);
    assert_eq!(v["metadata"]["monomial_cap"], 3);
}

#[test]
fn reports_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let mut seen = Vec::new();
    for k in 0..2 {
        let path = dir.path().join(format!("r{k}.json"));
        let out = painleve(&["verify", "--group", "d62,a1", "--seed", "7", "--quiet", "--report", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        let mut v = read(&path);
        strip_timing(&mut v);
        seen.push(serde_json::to_string(&v).unwrap());
    }
    assert_eq!(seen[0], seen[1]);
    let v: Value = serde_json::from_str(&seen[0]).unwrap();
    assert_eq!(v["metadata"]["seed"], 7);
    let ids: Vec<&str> = v["records"].as_array().unwrap().iter().map(|r| r["check_id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn dumps_are_stable() {
    for kind in ["systems", "maps", "charts", "diagrams"] {
        let a = painleve(&["dump", kind]);
        let b = painleve(&["dump", kind]);
        assert_eq!(a.status.code(), Some(0));
        assert!(!a.stdout.is_empty(), "{kind}");
        assert_eq!(a.stdout, b.stdout, "{kind}");
    }
    let d = String::from_utf8(painleve(&["dump", "diagrams", "--group", "d62"]).stdout).unwrap();
    assert!(d.contains("m(0,1) = 4") && d.contains("m(4,5) = 4"), "{d}");
    let empty = painleve(&["dump", "charts", "--group", "a1"]);
    assert_eq!(empty.status.code(), Some(0));
    assert!(empty.stdout.is_empty());
    let maps = String::from_utf8(painleve(&["dump", "maps", "--group", "d5"]).stdout).unwrap();
    assert!(maps.contains("  s4: (x, y, z, w, (q*p + a4)/(p), p; t; a0, a1, a2, a3 + a4, -a4, a5)"), "{maps}");
}

#[test]
fn trajectory_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let out = painleve(&["integrate", "--system", "D5", "--seed", "3", "--t1", "1.5", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(header.len(), 13);
    assert_eq!(header[0], "t");
    assert_eq!(&header[1..3], &["x_re", "x_im"]);
    assert_eq!(header[12], "p_im");
    let rows: Vec<Vec<f64>> = lines.map(|l| l.split(',').map(|c| c.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 101);
    assert!(rows.iter().all(|r| r.len() == 13));
    assert_eq!(rows[0][0], 1.0);
    assert_eq!(rows[100][0], 1.5);
    // Same run to standard output.
    let out = painleve(&["integrate", "--system", "D5", "--seed", "3", "--t1", "1.5"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), text);
    let bad = painleve(&["integrate", "--system", "D5", "--t0", "-1", "--t1", "1"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn selection_parsing() {
    assert_eq!(parse_suites("all").unwrap().0, Suite::ALL.to_vec());
    assert_eq!(parse_suites("numeric,coxeter,numeric").unwrap().0, vec![Suite::Coxeter, Suite::Numeric]);
    assert!(parse_suites("coxeter,nosuch").unwrap_err().contains("nosuch"));
    assert_eq!(parse_groups("A1,d5").unwrap().0, vec![GroupId::D5, GroupId::A1]);
    assert!(parse_groups("d7").is_err());
}

fn report_of(statuses: &[Status]) -> VerificationReport {
    let mut rep = VerificationReport::new();
    for (i, s) in statuses.iter().enumerate() {
        rep.push(CheckRecord::new(format!("c{i}"), "x", *s));
    }
    rep
}

fn status() -> impl Strategy<Value = Status> {
    prop_oneof![Just(Status::Pass), Just(Status::Fail), Just(Status::Indeterminate)]
}

proptest! {
    #[test]
    fn exit_status_depends_only_on_the_status_multiset(
        statuses in prop::collection::vec(status(), 0..12),
        rot in 0usize..12,
    ) {
        let mut shuffled = statuses.clone();
        if !shuffled.is_empty() {
            let k = rot % shuffled.len();
            shuffled.rotate_left(k);
            shuffled.reverse();
        }
        let code = exit_status(&report_of(&statuses));
        prop_assert_eq!(code, exit_status(&report_of(&shuffled)));
        let want = if statuses.contains(&Status::Fail) {
            2
        } else if statuses.contains(&Status::Indeterminate) {
            3
        } else {
            0
        };
        prop_assert_eq!(code, want);
    }
}
