//! End-to-end tests of the binary: exit codes, report shapes, and the
//! rendering contract.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_octant-cover"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(path: &Path, text: &str) {
    fs::write(path, text).unwrap();
}

#[test]
fn color_three_point_csv() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("pts.csv");
    write(&input, "x,y,z\n0,0,0\n1,2,3\n2,1,5\n");
    let out = run(&["color", input.to_str().unwrap()]);
    assert!(out.status.success(), "{out:?}");
    let rep = stdout_json(&out);
    assert_eq!(rep["status"], "ok");
    assert_eq!(rep["colors"].as_array().unwrap().len(), 3);
    assert_eq!(rep["stats"]["n"], 3);
}

#[test]
fn color_rejects_malformed_row_with_line_number() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("pts.csv");
    write(&input, "x,y,z\n0,0,0\n1,oops,1\n");
    let out = run(&["color", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3"), "stderr: {err}");
}

#[test]
fn color_150_points_stays_under_trace_bound() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("pts.csv");
    let mut text = String::new();
    for i in 0..150u64 {
        let (x, y, z) = (i * 37 % 151, i * 61 % 151, i * 89 % 151);
        text.push_str(&format!("{x},{y},{z}\n"));
    }
    write(&input, &text);
    let out = run(&["color", input.to_str().unwrap()]);
    assert!(out.status.success(), "{out:?}");
    let rep = stdout_json(&out);
    assert_eq!(rep["status"], "ok");
    assert!(rep["stats"]["max_monochromatic"].as_u64().unwrap() <= 11);
}

#[test]
fn color_roundtrips_through_verify_only_path() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("pts.csv");
    let mut text = String::new();
    for i in 0..40u64 {
        let (x, y, z) = (i * 7 % 41, i * 13 % 41, i * 19 % 41);
        text.push_str(&format!("{x},{y},{z}\n"));
    }
    write(&input, &text);
    let first = stdout_json(&run(&["color", input.to_str().unwrap()]));

    let colors = dir.path().join("colors.json");
    write(
        &colors,
        &format!("{{\"colors\": {}}}", first["colors"]),
    );
    let out = run(&["color", input.to_str().unwrap(), "--colors", colors.to_str().unwrap()]);
    assert!(out.status.success(), "{out:?}");
    let second = stdout_json(&out);
    assert_eq!(second["status"], first["status"]);
    assert_eq!(
        second["stats"]["max_monochromatic"],
        first["stats"]["max_monochromatic"]
    );
    assert_eq!(second["colors"], first["colors"]);
}

#[test]
fn out_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("pts.csv");
    write(&input, "0,0,0\n4,4,4\n");
    let report = dir.path().join("report.json");
    let out = run(&["color", input.to_str().unwrap(), "--out", report.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(fs::read(&report).unwrap(), out.stdout);
}

#[test]
fn decompose_nested_octants() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("octants.json");
    let apexes: Vec<String> = (1..=12).map(|k| format!("[{k},{k},{k}]")).collect();
    write(&input, &format!("{{\"octants\": [{}]}}", apexes.join(",")));
    let out = run(&["decompose", input.to_str().unwrap()]);
    assert!(out.status.success(), "{out:?}");
    let rep = stdout_json(&out);
    assert_eq!(rep["status"], "ok");
    assert!(!rep["partition"]["red"].as_array().unwrap().is_empty());
    assert!(!rep["partition"]["blue"].as_array().unwrap().is_empty());
}

#[test]
fn decompose_triangle_family() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("tris.json");
    let homothets: Vec<String> = (0..30)
        .map(|i| {
            format!(
                "{{\"scale\": {}, \"t\": [{}, {}]}}",
                1.0 + 0.01 * i as f64,
                0.1 * i as f64,
                0.05 * i as f64
            )
        })
        .collect();
    write(
        &input,
        &format!(
            "{{\"frame\": [[0,0],[4,0],[2,3]], \"homothets\": [{}]}}",
            homothets.join(",")
        ),
    );
    let out = run(&["decompose", input.to_str().unwrap()]);
    assert!(out.status.success(), "{out:?}");
    assert_eq!(stdout_json(&out)["status"], "ok");
}

#[test]
fn decompose_rejects_nonpositive_scale() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("tris.json");
    write(
        &input,
        "{\"frame\": [[0,0],[4,0],[2,3]], \"homothets\": [{\"scale\": -1, \"t\": [0, 0]}]}",
    );
    let out = run(&["decompose", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("scale"), "stderr: {err}");
}

#[test]
fn lowerbound_default_exhausts_all_colorings() {
    let out = run(&["lowerbound"]);
    assert!(out.status.success(), "{out:?}");
    let rep = stdout_json(&out);
    assert_eq!(rep["status"], "uncolorable");
    assert_eq!(rep["stats"]["colorings_checked"], 1024);
}

fn fixture_path() -> String {
    concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../core/fixtures/lower_bound_realization.json"
    )
    .to_string()
}

#[test]
fn lowerbound_validates_builtin_realization() {
    let out = run(&["lowerbound", "--realization", &fixture_path()]);
    assert!(out.status.success(), "{out:?}");
    assert_eq!(stdout_json(&out)["status"], "uncolorable");
}

#[test]
fn lowerbound_flags_tampered_realization() {
    let mut fixture: Value =
        serde_json::from_str(&fs::read_to_string(fixture_path()).unwrap()).unwrap();
    // Swap the planar positions of two points; z ranks stay valid but a
    // listed triple stops being an exact trace.
    let points = fixture["points"].as_array_mut().unwrap();
    let (x6, y6) = (points[6][0].clone(), points[6][1].clone());
    let (x8, y8) = (points[8][0].clone(), points[8][1].clone());
    points[6][0] = x8;
    points[6][1] = y8;
    points[8][0] = x6;
    points[8][1] = y6;
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tampered.json");
    write(&path, &fixture.to_string());

    let out = run(&["lowerbound", "--realization", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let rep = stdout_json(&out);
    assert_eq!(rep["status"], "verification_failed");
    assert!(
        rep["detail"].as_str().unwrap().contains("triple"),
        "detail: {}",
        rep["detail"]
    );
}

#[test]
fn lowerbound_missing_realization_is_input_error() {
    let out = run(&["lowerbound", "--realization", "/nonexistent/fixture.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bottomless_four_point_antichain() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("anti.csv");
    write(&input, "0,3\n1,2\n2,1\n3,0\n");
    let out = run(&["bottomless", input.to_str().unwrap()]);
    assert!(out.status.success(), "{out:?}");
    let rep = stdout_json(&out);
    assert_eq!(rep["status"], "ok");
    assert_eq!(rep["colors"].as_array().unwrap().len(), 4);
    assert_eq!(rep["colored_at"].as_array().unwrap().len(), 4);
}

#[test]
fn bottomless_rejects_comparable_pair() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("comp.csv");
    write(&input, "0,0\n5,5\n");
    let out = run(&["bottomless", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("points 0 and 1"), "stderr: {err}");
}

#[test]
fn render_step_c_example_trace() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("pts.csv");
    write(&input, "0,3,0\n1,2,1\n2,1,2\n3,0,3\n");
    let trace = dir.path().join("trace.json");
    let out = run(&[
        "color",
        input.to_str().unwrap(),
        "--trace-out",
        trace.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{out:?}");

    let svg1 = dir.path().join("svg1");
    let out = run(&["render", trace.to_str().unwrap(), "--out-dir", svg1.to_str().unwrap()]);
    assert!(out.status.success(), "{out:?}");
    for name in ["step_0000.svg", "step_0001.svg", "step_0002.svg", "step_0003.svg", "final.svg"] {
        assert!(svg1.join(name).exists(), "missing {name}");
    }
    // The last arrival fires the quadruple rule: two new edges and two
    // promoted staircase points.
    let frame = fs::read_to_string(svg1.join("step_0003.svg")).unwrap();
    assert_eq!(frame.matches("class=\"edge new\"").count(), 2, "{frame}");
    assert_eq!(frame.matches("class=\"point staircase\"").count(), 2, "{frame}");

    let svg2 = dir.path().join("svg2");
    assert!(run(&["render", trace.to_str().unwrap(), "--out-dir", svg2.to_str().unwrap()])
        .status
        .success());
    for entry in fs::read_dir(&svg1).unwrap() {
        let name = entry.unwrap().file_name();
        assert_eq!(
            fs::read(svg1.join(&name)).unwrap(),
            fs::read(svg2.join(&name)).unwrap(),
            "render not deterministic for {name:?}"
        );
    }
}

#[test]
fn render_empty_trace_writes_scaffold() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("empty.json");
    write(&trace, "{\"points\": [], \"z_order\": [], \"snapshots\": []}");
    let out_dir = dir.path().join("svg");
    let out = run(&["render", trace.to_str().unwrap(), "--out-dir", out_dir.to_str().unwrap()]);
    assert!(out.status.success(), "{out:?}");
    let names: Vec<_> = fs::read_dir(&out_dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    assert_eq!(names, ["final.svg"]);
    assert!(fs::read_to_string(out_dir.join("final.svg")).unwrap().contains("<svg"));
}

#[test]
fn render_missing_trace_is_input_error() {
    let out = run(&["render", "/nonexistent/trace.json"]);
    assert_eq!(out.status.code(), Some(2));
}
