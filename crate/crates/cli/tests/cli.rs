use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mottgate"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn csv_rows(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    (
        header,
        lines
            .map(|l| l.split(',').map(String::from).collect())
            .collect(),
    )
}

fn column(text: &str, name: &str) -> Vec<String> {
    let (h, rows) = csv_rows(text);
    let i = h.iter().position(|c| c == name).unwrap();
    rows.into_iter().map(|r| r[i].clone()).collect()
}

fn floats(v: &[String]) -> Vec<f64> {
    v.iter().map(|s| s.parse().unwrap()).collect()
}

fn argmin(xs: &[f64]) -> usize {
    (0..xs.len())
        .min_by(|&a, &b| xs[a].total_cmp(&xs[b]))
        .unwrap()
}

#[test]
fn dot_dip_follows_the_state() {
    for (state, alpha) in [("ground", 1.0), ("excited", 0.5)] {
        let out = ok(&["dot-spectrum", "--state", state]);
        let lambda = floats(&column(&out, "lambda"));
        let t2 = floats(&column(&out, "abs_t2"));
        let i = argmin(&t2);
        assert!(
            (lambda[i] - alpha).abs() < 0.01,
            "{state}: dip at {}",
            lambda[i]
        );
        assert!(t2[i] < 1e-3);
    }
}

#[test]
fn csv_has_fixed_layout() {
    let out = ok(&["dot-spectrum"]);
    assert!(!out.contains('\r'));
    let (h, rows) = csv_rows(&out);
    assert_eq!(
        h,
        ["state", "lambda", "re_t", "im_t", "abs_t2", "sigma", "pole"]
    );
    assert_eq!(rows.len(), 1000);
    let mantissa = rows[1][1]
        .split('e')
        .next()
        .unwrap()
        .trim_start_matches('-');
    assert_eq!(mantissa.len(), 18);
}

#[test]
fn json_matches_csv() {
    for cmd in ["dot-spectrum", "bands", "thermal"] {
        let csv = ok(&[cmd]);
        let json: Value = serde_json::from_str(&ok(&[cmd, "--format", "json"])).unwrap();
        let (h, rows) = csv_rows(&csv);
        let arr = json.as_array().unwrap();
        assert_eq!(arr.len(), rows.len());
        for (obj, row) in arr.iter().zip(&rows) {
            for (name, cell) in h.iter().zip(row) {
                let v = &obj[name.as_str()];
                match v {
                    Value::Number(n) => assert_eq!(
                        n.as_f64().unwrap(),
                        cell.parse::<f64>().unwrap(),
                        "{cmd} {name}"
                    ),
                    Value::Bool(b) => assert_eq!(b.to_string(), *cell),
                    Value::String(s) => assert_eq!(s, cell),
                    Value::Null => {
                        assert!(cell.is_empty() || cell.contains("inf") || cell == "nan")
                    }
                    _ => panic!("unexpected value {v}"),
                }
            }
        }
    }
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let a = ok(&["chain", "--threads", "1"]);
    let b = ok(&["chain", "--threads", "4"]);
    let c = ok(&["chain"]);
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bands.csv");
    let p = path.to_str().unwrap();
    assert!(ok(&["bands", "--output", p]).is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), ok(&["bands"]));
}

#[test]
fn demo_bands_show_the_transition() {
    let out = ok(&["bands"]);
    let (h, rows) = csv_rows(&out);
    let fermi = rows.iter().find(|r| r[1] == "fermi_gap").unwrap();
    let get = |n: &str| fermi[h.iter().position(|c| c == n).unwrap()].clone();
    assert_eq!(get("mott_transition"), "true");
    let width: f64 = get("width").parse().unwrap();
    assert!((width - 0.5).abs() <= 0.125);

    let out = ok(&["--config", &fixture("fermi_in_band.json"), "bands"]);
    assert!(out.lines().last().unwrap().ends_with(",false"));
}

#[test]
fn empty_window_lists_no_bands() {
    let out = ok(&["--config", &fixture("empty_window.json"), "bands"]);
    let kinds = column(&out, "kind");
    assert_eq!(kinds, ["fermi_gap"]);
}

#[test]
fn chain_outputs() {
    let out = ok(&["chain", "--sweep", "10"]);
    let n = floats(&column(&out, "cells"));
    let ln_t = floats(&column(&out, "ln_abs_t"));
    let slopes: Vec<f64> = ln_t.windows(2).map(|w| w[1] - w[0]).collect();
    assert!(slopes.iter().all(|s| *s < 0.0));
    let spread = slopes[1..]
        .iter()
        .fold(0.0f64, |m, s| m.max((s - slopes[9 - 1]).abs()));
    assert!(spread < 0.05 * slopes[8].abs(), "{slopes:?}");
    assert_eq!(n.len(), 10);

    let out = ok(&["chain", "--pattern", "ground", "--cells", "2"]);
    let res = column(&out, "unitarity_residual");
    assert!(res
        .iter()
        .filter(|s| !s.is_empty())
        .all(|s| s.parse::<f64>().unwrap() < 1e-8));
}

#[test]
fn materials_commands() {
    let out = ok(&["materials", "--validate"]);
    assert_eq!(csv_rows(&out).1.len(), 13);
    let out = ok(&["materials", "--material", "GaAs", "--temp", "150"]);
    let (_, rows) = csv_rows(&out);
    assert_eq!(rows.len(), 1);
    let wl: f64 = rows[0][2].parse().unwrap();
    assert!((wl - 288.3 * 2f64.sqrt()).abs() < 1.0);
    let bad = run(&["materials", "--material", "Kryptonite", "--temp", "150"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("Kryptonite"));
}

#[test]
fn thermal_contrast_degrades_with_temperature() {
    let out = ok(&["thermal"]);
    let ratio = floats(&column(&out, "ratio"));
    assert!(ratio.windows(2).all(|w| w[1] <= w[0]), "{ratio:?}");
    let out = ok(&["thermal", "--temps", "20,300"]);
    assert_eq!(csv_rows(&out).1.len(), 2);
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["--config", &fixture("misordered_levels.json"), "bands"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["--config", "/nonexistent/scenario.json", "bands"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["--config", &fixture("quadrature_budget.json"), "thermal"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(&["thermal", "--temps", "300,100"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["chain", "--threads", "0"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn validate_passes() {
    let out = run(&["validate"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    assert_eq!(
        csv_rows(&String::from_utf8(out.stdout).unwrap()).1.len(),
        10
    );
}

#[test]
fn ground_chain_scan_lists_its_resonances() {
    let cfg = fixture("complete_band.json");
    let bands = ok(&["--config", &cfg, "bands"]);
    let (_, rows) = csv_rows(&bands);
    let band = rows
        .iter()
        .find(|r| r[0] == "ground" && r[1] == "band")
        .unwrap();
    assert_eq!((band[5].as_str(), band[6].as_str()), ("false", "false"));
    let (lo, hi): (f64, f64) = (band[2].parse().unwrap(), band[3].parse().unwrap());

    let out = ok(&[
        "--config",
        &cfg,
        "chain",
        "--pattern",
        "ground",
        "--cells",
        "2",
    ]);
    let lambda = floats(&column(&out, "lambda"));
    assert!(lambda.windows(2).all(|w| w[0] <= w[1]));
    let t2 = column(&out, "abs_t2");
    let hits: Vec<(f64, f64)> = column(&out, "resonance")
        .iter()
        .zip(lambda.iter().zip(&t2))
        .filter(|(r, _)| *r == "true")
        .map(|(_, (l, t))| (*l, t.parse().unwrap()))
        .collect();
    assert_eq!(hits.len(), 4, "{hits:?}");
    for (l, t) in hits {
        assert!(lo < l && l < hi);
        assert!((t - 1.0).abs() < 1e-6);
    }
}
