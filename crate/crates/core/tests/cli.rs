use std::path::Path;
use std::process::{Command, Output};

use isokit::cli::{ContainersReport, ExtremalBody, ExtremalReport, MinReport, VerifySummary};
use serde::de::DeserializeOwned;
use serde::Serialize;

fn isokit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isokit"))
        .args(args)
        .env_remove("ISOKIT_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Parses, re-emits and re-parses a JSON report.
fn round_trip<T: DeserializeOwned + Serialize + PartialEq + std::fmt::Debug>(text: &str) -> T {
    let first: T = serde_json::from_str(text).unwrap();
    let again: T = serde_json::from_str(&serde_json::to_string(&first).unwrap()).unwrap();
    assert_eq!(first, again);
    first
}

#[test]
fn containers_right_triangle() {
    let o = isokit(&["containers", "--sides", "3,4,5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("7 special containers"));
    assert!(stdout(&o).contains("ABC̄"));
}

#[test]
fn containers_acute() {
    let o = isokit(&["containers", "--angles", "50,60", "--scale", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("9 special containers"));
}

#[test]
fn containers_equilateral() {
    let o = isokit(&["containers", "--sides", "1,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("isosceles: self-container"));
}

#[test]
fn min_reports() {
    let o = isokit(&["min", "--sides", "3,4,5"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("minimizer: ABC'\n"), "{s}");
    assert!(s.contains("ratio 1.250000000, count 1"));

    let o = isokit(&["min", "--preset", "t-star"]);
    assert!(stdout(&o).contains("count 3"));

    let o = isokit(&["min", "--sides", "1,1,1.4142135623730951"]);
    let s = stdout(&o);
    assert!(s.contains("minimizer: self") && s.contains("ratio 1.000000000"));
}

#[test]
fn negative_vertices_parse() {
    let o = isokit(&["min", "--vertices", "-1,0,3,0,0,2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn invalid_input_exits_2() {
    let o = isokit(&["containers", "--sides", "1,2,5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("triangle inequality"));

    let o = isokit(&["min", "--vertices", "0,0,1,1,2,2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("degenerate"), "{}", stderr(&o));

    let o = isokit(&["min", "--sides", "3,4"]);
    assert_eq!(o.status.code(), Some(2));

    let o = isokit(&["min"]);
    assert_eq!(o.status.code(), Some(2));

    let o = isokit(&["min", "--sides", "3,4,5", "--preset", "t-star"]);
    assert_eq!(o.status.code(), Some(2));

    let o = isokit(&["min", "--angles", "100,90"]);
    assert_eq!(o.status.code(), Some(2));

    let o = isokit(&["verify", "--samples", "0"]);
    assert_eq!(o.status.code(), Some(2));

    let o = isokit(&["verify", "--samples", "1", "--min-angle", "50", "--scalene-margin", "20"]);
    assert_eq!(o.status.code(), Some(2));

    let o = isokit(&["bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn help_exits_0() {
    let o = isokit(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("containers"));
}

#[test]
fn json_input_document() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("in.json");
    std::fs::write(&path, r#"{"triangle": {"sides": [3, 4, 5]}}"#).unwrap();
    let o = isokit(&["min", "--input", path.to_str().unwrap(), "--json", "-"]);
    assert_eq!(o.status.code(), Some(0));
    let r: MinReport = round_trip(&stdout(&o));
    assert!((r.result.min_ratio - 1.25).abs() < 1e-12);
    assert_eq!(r.schema_version, 1);
    assert_eq!(r.units, "radians");

    std::fs::write(&path, r#"{"triangle": {"angles_and_scale": {"alpha": 0.8, "beta": 1.0, "scale": 2.0}}}"#)
        .unwrap();
    let o = isokit(&["containers", "--input", path.to_str().unwrap(), "--json", "-"]);
    let r: ContainersReport = round_trip(&stdout(&o));
    assert_eq!(r.containers.len(), 9);

    std::fs::write(&path, r#"{"triangle": {"sides": [3, 4]}}"#).unwrap();
    let o = isokit(&["min", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));

    let o = isokit(&["min", "--input", "/nonexistent/in.json"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("/nonexistent/in.json"));
}

#[test]
fn json_reports_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let p = path.to_str().unwrap();

    let o = isokit(&["containers", "--sides", "3,4,5", "--json", p]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("7 special containers"));
    let r: ContainersReport = round_trip(&std::fs::read_to_string(&path).unwrap());
    assert_eq!(r.containers.len(), 7);
    assert!(r.near_right_angle);

    let o = isokit(&["min", "--preset", "t-star", "--json", "-"]);
    let r: MinReport = round_trip(&stdout(&o));
    assert_eq!(r.result.count, 3);

    for mode in ["alpha-star", "sqrt2", "golden"] {
        let o = isokit(&["extremal", mode, "--json", "-"]);
        assert_eq!(o.status.code(), Some(0));
        let r: ExtremalReport = round_trip(&stdout(&o));
        assert!(r.ok());
    }

    let o = isokit(&["verify", "--samples", "3", "--seed", "5", "--json", "-"]);
    assert_eq!(o.status.code(), Some(0));
    let r: VerifySummary = round_trip(&stdout(&o));
    assert_eq!(r.cases.len(), 3);
    assert!(r.passed);
}

#[test]
fn extremal_text() {
    let o = isokit(&["extremal", "alpha-star"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("alpha* = 41.8316186927°"), "{}", stdout(&o));
    assert!(stdout(&o).contains("T* minimizers: 3"));

    let o = isokit(&["extremal", "sqrt2", "--json", "-"]);
    let r: ExtremalReport = serde_json::from_str(&stdout(&o)).unwrap();
    let ExtremalBody::Sqrt2 { rows, .. } = r.body else { panic!("wrong mode") };
    let half = rows.iter().find(|r| (r.beta.to_degrees() - 0.5).abs() < 1e-9).unwrap();
    assert!(half.crossing_ratio > 1.41);

    let o = isokit(&["extremal", "golden", "--json", "-"]);
    let r: ExtremalReport = serde_json::from_str(&stdout(&o)).unwrap();
    let ExtremalBody::Golden { rows, supremum, .. } = r.body else { panic!("wrong mode") };
    let row = rows.iter().find(|r| r.b == 1.617).unwrap();
    assert!(row.first_kind_ratio < supremum && supremum - row.first_kind_ratio < 0.01);
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--samples", "4", "--seed", "11"];
    let a = isokit(&args);
    let b = isokit(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("PASS"));

    let a = isokit(&["verify", "--samples", "4", "--seed", "11", "--json", "-"]);
    let b = isokit(&["verify", "--samples", "4", "--seed", "11", "--json", "-"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn seed_env_fallback() {
    let bin = env!("CARGO_BIN_EXE_isokit");
    let run = |env: Option<&str>, args: &[&str]| {
        let mut c = Command::new(bin);
        c.args(["verify", "--samples", "2", "--json", "-"]).args(args);
        match env {
            Some(v) => c.env("ISOKIT_SEED", v),
            None => c.env_remove("ISOKIT_SEED"),
        };
        let out = c.output().unwrap();
        let s: VerifySummary = serde_json::from_slice(&out.stdout).unwrap();
        s.config.seed
    };
    assert_eq!(run(Some("9"), &[]), 9);
    assert_eq!(run(Some("9"), &["--seed", "3"]), 3);
    assert_eq!(run(None, &[]), 0);
}

fn svg(args: &[&str], out: &Path) -> Output {
    let mut all = vec!["svg"];
    all.extend_from_slice(args);
    all.extend(["--out", out.to_str().unwrap()]);
    isokit(&all)
}

#[test]
fn svg_output() {
    let dir = tempfile::tempdir().unwrap();
    let (p1, p2) = (dir.path().join("a.svg"), dir.path().join("b.svg"));
    assert_eq!(svg(&["--sides", "3,4,5", "--which", "first"], &p1).status.code(), Some(0));
    assert_eq!(svg(&["--sides", "3,4,5", "--which", "first"], &p2).status.code(), Some(0));
    let a = std::fs::read(&p1).unwrap();
    assert_eq!(a, std::fs::read(&p2).unwrap());

    let text = String::from_utf8(a).unwrap();
    assert!(text.starts_with("<?xml"));
    assert_eq!(text.matches("<polygon").count(), 4);
    for label in ["AB&#39;C", "ABC&#39;", "ABC&#39;&#39;", ">B&#39;<", ">C&#39;&#39;<"] {
        assert!(text.contains(label), "missing {label}");
    }

    svg(&["--angles", "50,60", "--which", "all"], &p1);
    let text = std::fs::read_to_string(&p1).unwrap();
    assert_eq!(text.matches("<polygon").count(), 10);
    assert_eq!(text.matches(r#"text-decoration="overline""#).count(), 3);

    svg(&["--preset", "t-star", "--which", "min"], &p1);
    assert_eq!(std::fs::read_to_string(&p1).unwrap().matches("<polygon").count(), 4);

    svg(&["--sides", "2,2,3", "--which", "all"], &p1);
    assert_eq!(std::fs::read_to_string(&p1).unwrap().matches("<polygon").count(), 1);
}

#[test]
fn svg_bad_path_exits_3() {
    let o = isokit(&["svg", "--sides", "3,4,5", "--out", "/nonexistent/dir/x.svg"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("/nonexistent/dir/x.svg"));
}

#[test]
fn json_to_bad_path_exits_3() {
    let o = isokit(&["min", "--sides", "3,4,5", "--json", "/nonexistent/dir/x.json"]);
    assert_eq!(o.status.code(), Some(3));
}
