use std::path::{Path, PathBuf};
use std::process::Command;

use knot_zeros::cli;
use serde_json::Value;

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("knot-zeros").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn json(args: &[&str]) -> Value {
    let o = run(args);
    assert_eq!(o.code, 0, "{args:?}: {}", o.stderr);
    serde_json::from_str(&o.stdout).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn csv_rows(text: &str) -> Vec<Vec<f64>> {
    text.lines()
        .skip(1)
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect()
}

#[test]
fn family_info() {
    let a9 = json(&["family-info", "--family", "A", "--n", "9"]);
    assert_eq!(a9["crossings"], 9);
    assert_eq!(a9["writhe"], -9);
    let b5 = json(&["family-info", "--family", "B", "--n", "5"]);
    assert_eq!(b5["crossings"], 8);
    assert_eq!(b5["writhe"], 0);

    let bad = run(&["family-info", "--family", "F", "--n", "4"]);
    assert_eq!(bad.code, 2);
    assert!(bad.stdout.is_empty());
    assert!(bad.stderr.contains("odd"), "{}", bad.stderr);
}

#[test]
fn tutte() {
    let dir = tempfile::tempdir().unwrap();
    let d1c = json(&["tutte", "--kind", "D1C", "--n", "2", "--method", "closed"]);
    assert_eq!(d1c["pretty"], "x + y + y^2");

    let c4 = write(
        dir.path(),
        "c4.json",
        r#"{"vertices":4,"edges":[[0,1],[1,2],[2,3],[3,0]]}"#,
    );
    let t = json(&["tutte", "--graph", c4.to_str().unwrap(), "--method", "brute"]);
    assert_eq!(t["pretty"], "x^3 + x^2 + x + y");

    assert_eq!(run(&["tutte", "--kind", "Wheel", "--n", "4", "--check-all"]).code, 0);
    assert_eq!(run(&["tutte", "--graph", c4.to_str().unwrap(), "--check-all"]).code, 0);
    // a graph file has no closed form
    assert_eq!(
        run(&["tutte", "--graph", c4.to_str().unwrap(), "--method", "closed"]).code,
        2
    );
    assert_eq!(run(&["tutte", "--kind", "Nope", "--n", "4"]).code, 2);
}

#[test]
fn jones() {
    let a3 = json(&["jones", "--family", "A", "--n", "3"]);
    assert_eq!(a3["pretty"], "t^{-4}*(-1 + t + t^3)");
    assert_eq!(a3["structural"]["degree_span"], 3);
    assert_eq!(a3["structural"]["special_value_ok"], true);

    let e2 = json(&["jones", "--family", "E", "--n", "2"]);
    assert_eq!(e2["pretty"], "t^{-9/2}*(-1 - t^2 + t^3 - t^4)");

    let b5 = json(&["jones", "--family", "B", "--n", "5"]);
    let coeffs: Vec<i64> = b5["jones"]["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["c"].as_str().unwrap().parse().unwrap())
        .collect();
    assert_eq!(coeffs, [1, -4, 6, -7, 9, -7, 6, -4, 1]);

    // signed graph: one negative edge, writhe +1, is an unknot diagram
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "s.json", r#"{"vertices":2,"edges":[[0,1]],"signs":[-1]}"#);
    let v = json(&["jones", "--graph", g.to_str().unwrap(), "--writhe", "1"]);
    assert_eq!(v["pretty"], "1");
}

#[test]
fn emitted_json_round_trips() {
    for args in [
        &["family-info", "--family", "E", "--n", "4"][..],
        &["jones", "--family", "F", "--n", "9"],
        &["tutte", "--kind", "H3", "--n", "5"],
    ] {
        let v = json(args);
        let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        assert_eq!(again, v);
    }
    let t = json(&["tutte", "--kind", "H3", "--n", "5"]);
    let p = knot_zeros::poly::BivarPoly::from_json_value(&t["tutte"]).unwrap();
    assert_eq!(p.to_string(), t["pretty"].as_str().unwrap());
}

#[test]
fn zeros_files() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("z.csv");
    let svg = dir.path().join("z.svg");
    let o = run(&[
        "zeros",
        "--family",
        "A",
        "--n",
        "50",
        "--out",
        csv.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
        "--overlay-unit-circle",
    ]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("re,im\n"));
    assert_eq!(csv_rows(&text).len(), 50);
    let picture = std::fs::read_to_string(&svg).unwrap();
    assert!(picture.starts_with("<svg") && picture.trim_end().ends_with("</svg>"));
    assert!(!picture.contains("<script"));

    let f63 = run(&["zeros", "--family", "F", "--n", "63"]);
    assert_eq!(f63.code, 0);
    assert_eq!(csv_rows(&f63.stdout).len(), 93);
    // deterministic
    assert_eq!(run(&["zeros", "--family", "F", "--n", "63"]).stdout, f63.stdout);
}

#[test]
fn locus_files() {
    let o = run(&["locus", "--family", "E", "--rmax", "50", "--resolution", "400"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert!(o.stdout.starts_with("re,im,j,k\n"));
    let rows = csv_rows(&o.stdout);
    assert!(rows.len() > 100);
    for row in &rows {
        let (r, th) = (row[0].hypot(row[1]), row[1].atan2(row[0]));
        let lhs = r * r * (1.0 - 2.0 * r * th.cos() + r * r);
        let rhs = 1.0 + 2.0 * r * r * (2.0 * th).cos() + r.powi(4);
        assert!((lhs - rhs).abs() <= 1e-8 * rhs.max(1.0) * r.max(1.0).powi(2), "{row:?}");
        assert_eq!((row[2], row[3]), (1.0, 2.0));
    }

    let f = run(&["locus", "--family", "F", "--window", "-2,2,-2,2", "--resolution", "200"]);
    assert_eq!(f.code, 0, "{}", f.stderr);
    assert_eq!(run(&["locus", "--family", "F", "--resolution", "10"]).code, 2);
    assert_eq!(run(&["locus", "--family", "F", "--window", "2,-2,0,1"]).code, 2);
}

#[test]
fn potts_and_chromatic() {
    let dir = tempfile::tempdir().unwrap();
    let c3 = write(dir.path(), "c3.json", r#"{"vertices":3,"edges":[[0,1],[1,2],[2,0]]}"#);
    let k2 = write(dir.path(), "k2.json", r#"{"vertices":2,"edges":[[0,1]]}"#);
    let bad = write(dir.path(), "bad.json", r#"{"vertices":2,"edges":[[0,5]]}"#);

    let p = json(&["chromatic", "--graph", c3.to_str().unwrap()]);
    assert_eq!(p["coefficients"], serde_json::json!(["0", "2", "-3", "1"]));

    let z = json(&["potts", "--graph", c3.to_str().unwrap(), "--q", "2", "--v", "-1"]);
    assert!(z["z"]["re"].as_f64().unwrap().abs() < 1e-12);
    let z = json(&["potts", "--graph", k2.to_str().unwrap(), "--q", "3", "--v", "1"]);
    assert_eq!(z["z"]["re"].as_f64().unwrap(), 12.0);
    let z = json(&["potts", "--graph", k2.to_str().unwrap(), "--q", "1,1", "--v", "0.5,-2"]);
    assert!(z["relative_disagreement"].as_f64().unwrap() < 1e-12);

    assert_eq!(run(&["chromatic", "--graph", bad.to_str().unwrap()]).code, 2);
    assert_eq!(
        run(&["potts", "--graph", k2.to_str().unwrap(), "--q", "x", "--v", "1"]).code,
        2
    );
    assert_eq!(run(&["chromatic", "--graph", "/nonexistent/graph.json"]).code, 2);
}

#[test]
fn verify_suites() {
    assert_eq!(run(&["verify", "--suite", "bogus"]).code, 2);
    let quick = run(&["verify", "--suite", "quick", "--seed", "7"]);
    let lines: Vec<&str> = quick
        .stdout
        .lines()
        .filter(|l| l.starts_with("PASS") || l.starts_with("FAIL"))
        .collect();
    assert_eq!(lines.len(), 10, "{}", quick.stdout);
    let all_pass = lines.iter().all(|l| l.starts_with("PASS"));
    assert_eq!(quick.code == 0, all_pass);
    if !all_pass {
        assert_eq!(quick.code, 3);
    }
}

#[test]
fn help_and_binary_exit_codes() {
    let help = run(&["--help"]);
    assert_eq!(help.code, 0);
    for sub in [
        "family-info",
        "tutte",
        "jones",
        "zeros",
        "locus",
        "potts",
        "chromatic",
        "verify",
    ] {
        assert!(help.stdout.contains(sub), "{sub} missing from help");
    }
    assert_eq!(run(&[]).code, 2);

    let bin = env!("CARGO_BIN_EXE_knot-zeros");
    let status = Command::new(bin)
        .args(["family-info", "--family", "F", "--n", "4"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(2));
    let ok = Command::new(bin)
        .args(["jones", "--family", "A", "--n", "3"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("t^{-4}*(-1 + t + t^3)"));
}
