use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_anticentrifugal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn csv_rows(out: &Output) -> (Vec<String>, Vec<Vec<String>>) {
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    assert!(!text.contains('\r'));
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    let rows = lines
        .map(|l| l.split(',').map(String::from).collect())
        .collect();
    (header, rows)
}

fn column(out: &Output, name: &str) -> Vec<f64> {
    let (header, rows) = csv_rows(out);
    let i = header.iter().position(|h| h == name).unwrap();
    rows.iter().map(|r| r[i].parse().unwrap()).collect()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn potential_signs() {
    let out = run(&["potential", "--family", "ndim", "--N", "2"]);
    assert!(out.status.success());
    assert!(column(&out, "v").iter().all(|&v| v < 0.0));

    let out = run(&["potential", "--family", "twodim", "--m", "1"]);
    assert!(column(&out, "v").iter().all(|&v| v > 0.0));

    let out = run(&["potential", "--family", "ndim", "--N", "3"]);
    assert!(column(&out, "v").iter().all(|&v| v == 0.0));
}

#[test]
fn potential_validation() {
    for args in [
        vec!["potential", "--family", "twodim"],
        vec!["potential", "--family", "ndim", "--N", "0"],
        vec!["potential", "--family", "twodim", "--m", "1", "--l", "2"],
        vec!["potential", "--family", "quantum", "--r-min", "0"],
        vec!["potential", "--family", "classical", "--L2", "-1"],
        vec!["potential", "--family", "nope"],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn floats_have_seventeen_digits() {
    let out = run(&["potential", "--family", "quantum", "--n-points", "3"]);
    let (header, rows) = csv_rows(&out);
    assert_eq!(header, ["r", "v"]);
    assert_eq!(rows[0][0], "1.0000000000000001e-1");
    let mantissa = rows[0][1].split('e').next().unwrap();
    assert_eq!(mantissa.chars().filter(char::is_ascii_digit).count(), 17);
}

#[test]
fn wavefunction_columns() {
    let out = run(&[
        "wavefunction",
        "--k",
        "1",
        "--r-min",
        "0.001",
        "--r-max",
        "5",
        "--n-points",
        "1000",
    ]);
    assert!(out.status.success());
    let (header, rows) = csv_rows(&out);
    assert_eq!(header, ["r", "phi2", "w2"]);
    assert_eq!(rows.len(), 1000);
    let phi = column(&out, "phi2");
    let w = column(&out, "w2");
    // phi2 grows towards the origin while w2 drops towards zero
    assert!(phi[0] > phi[1] && phi[1] > phi[2]);
    assert!(w[0] < w[1] && w[0] < 0.1);
    let turns = w
        .windows(2)
        .map(|p| p[1] > p[0])
        .collect::<Vec<_>>()
        .windows(2)
        .filter(|s| s[0] != s[1])
        .count();
    assert_eq!(turns, 1);
}

#[test]
fn nodes_verdict() {
    let out = run(&["nodes", "--format", "json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["summary"]["verdict"]["J"]["all_pass"], true);
    assert_eq!(v["summary"]["verdict"]["Y"]["all_pass"], true);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 19);
    for row in rows {
        assert!(row["g_j0"].as_f64().unwrap() > 1.0 && row["g_y0"].as_f64().unwrap() > 1.0);
        assert!(row["g_j1"].as_f64().unwrap() < 1.0 && row["g_y1"].as_f64().unwrap() < 1.0);
    }

    let out = run(&["nodes", "--n-max", "2"]);
    assert!(out.status.success());
    assert_eq!(csv_rows(&out).1.len(), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("verdict J"));
    assert_eq!(run(&["nodes", "--n-max", "1"]).status.code(), Some(2));
}

#[test]
fn boundstate_records() {
    let v = json(&run(&[
        "boundstate",
        "--N",
        "2",
        "--u0",
        "12.566370614359172",
        "--format",
        "json",
    ]));
    let k = v["result"]["k"].as_f64().unwrap();
    assert!((k - 0.762_873_978_366_890_2).abs() < 1e-12);
    assert_eq!(v["result"]["energy"].as_f64().unwrap(), -k * k / 2.0);
    assert!(v["result"]["coupling_residual"].as_f64().unwrap().abs() <= 1e-10);

    let v = json(&run(&[
        "boundstate",
        "--N",
        "3",
        "--k",
        "1",
        "--format",
        "json",
    ]));
    assert_eq!(v["result"]["max_location"], 0.0);
    assert!((v["result"]["normalization"].as_f64().unwrap() - 1.0).abs() < 1e-8);

    let v = json(&run(&[
        "boundstate",
        "--N",
        "2",
        "--k",
        "1",
        "--format",
        "json",
    ]));
    assert!(v["result"]["max_location"].as_f64().unwrap() > 0.0);

    let v = json(&run(&[
        "boundstate",
        "--N",
        "1",
        "--u0",
        "-2",
        "--format",
        "json",
    ]));
    assert_eq!(v["result"]["k"], 1.0);
    assert_eq!(v["result"]["energy"], -0.5);

    let keys: Vec<&String> = v["result"].as_object().unwrap().keys().collect();
    assert_eq!(keys[..3], ["dimension", "k", "energy"]);
}

#[test]
fn boundstate_validation() {
    for args in [
        vec!["boundstate", "--N", "1", "--u0", "1"],
        vec!["boundstate", "--N", "2", "--u0", "0"],
        vec!["boundstate", "--N", "4"],
        vec!["boundstate", "--N", "3", "--u0", "1"],
        vec!["boundstate", "--N", "3", "--k", "-1"],
        vec!["boundstate", "--N", "2", "--k", "1", "--u0", "1"],
        vec!["boundstate", "--N", "1", "--lambda", "2"],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_report() {
    let out = run(&["verify", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["summary"]["all_pass"], true);
    let suites = v["rows"].as_array().unwrap();
    assert!(suites.len() >= 10);
    for s in suites {
        assert!(s["max_error"].is_number());
        assert_eq!(s["pass"], true);
    }

    let out = run(&["verify", "--tolerance-scale", "0"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(
        run(&["verify", "--tolerance-scale", "-1"]).status.code(),
        Some(2)
    );
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nodes.csv");
    let out = run(&["nodes", "--n-max", "5", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, run(&["nodes", "--n-max", "5"]).stdout);
}
