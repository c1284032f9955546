//! End-to-end tests against the compiled binary: output shapes, frozen
//! values, exit codes, and file side effects.

use std::path::Path;
use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_polychain"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        output.status.code().expect("exit code"),
        String::from_utf8(output.stdout).expect("utf-8 stdout"),
        String::from_utf8(output.stderr).expect("utf-8 stderr"),
    )
}

fn run_ok(args: &[&str]) -> String {
    let (code, stdout, stderr) = run(args);
    assert_eq!(code, 0, "args {args:?} failed: {stderr}");
    stdout
}

fn line_value<'a>(stdout: &'a str, key: &str) -> &'a str {
    stdout
        .lines()
        .find_map(|line| line.strip_prefix(key).and_then(|rest| rest.strip_prefix(' ')))
        .unwrap_or_else(|| panic!("no '{key}' line in:\n{stdout}"))
}

#[test]
fn compute_prints_the_pentagon_cycle_indices() {
    let stdout = run_ok(&["compute", "--spec", "5:1"]);
    assert_eq!(line_value(&stdout, "kf"), "10");
    assert_eq!(line_value(&stdout, "wiener"), "15");
    assert_eq!(line_value(&stdout, "vertices"), "5");
    assert_eq!(line_value(&stdout, "edges"), "5");
}

#[test]
fn compute_index_selection_limits_the_output() {
    let stdout = run_ok(&["compute", "--spec", "5:1", "--index", "kf"]);
    assert!(stdout.contains("kf 10\n"));
    assert!(!stdout.contains("wiener"));
}

#[test]
fn compute_json_is_parseable_and_canonicalizes() {
    let stdout = run_ok(&["compute", "--spec", "6:4:1,2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout).expect("valid JSON");
    assert_eq!(v["spec"], "6:4:1,2");
    assert_eq!(v["canonical"], "6:4:0,1");
    assert_eq!(v["vertices"], 18);
    assert_eq!(v["edges"], 21);
    assert!(v["kf"].as_f64().expect("kf number") > 0.0);
    assert!(v["wiener"].as_u64().expect("wiener number") > 0);
}

#[test]
fn compute_emits_the_graph_file() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("graph.json");
    run_ok(&[
        "compute",
        "--spec",
        "6:4:1,2",
        "--emit-graph",
        path.to_str().expect("utf-8 path"),
    ]);
    let text = std::fs::read_to_string(&path).expect("graph file written");
    let v: serde_json::Value = serde_json::from_str(&text).expect("valid JSON");
    assert_eq!(v["vertices"], 18);
    assert_eq!(v["edges"].as_array().expect("edge list").len(), 21);
}

#[test]
fn compute_emits_a_plain_edge_list_for_other_extensions() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("graph.edges");
    run_ok(&[
        "compute",
        "--spec",
        "6:4:1,2",
        "--emit-graph",
        path.to_str().expect("utf-8 path"),
    ]);
    let text = std::fs::read_to_string(&path).expect("graph file written");
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 21);
    for line in lines {
        let parts: Vec<&str> = line.split(' ').collect();
        assert_eq!(parts.len(), 2, "{line}");
        for part in parts {
            let v: usize = part.parse().expect("vertex index");
            assert!(v < 18);
        }
    }
}

#[test]
fn resistance_defaults_to_the_index() {
    let stdout = run_ok(&["resistance", "--spec", "5:1"]);
    assert_eq!(line_value(&stdout, "kf"), "10");
}

fn write_square(dir: &Path) -> String {
    let path = dir.join("square.json");
    std::fs::write(
        &path,
        r#"{"vertices": 4, "edges": [[0,1,1.0],[1,2,1.0],[2,3,1.0],[3,0,1.0]]}"#,
    )
    .expect("network file written");
    path.to_str().expect("utf-8 path").to_string()
}

#[test]
fn resistance_reads_network_files() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = write_square(dir.path());
    let stdout = run_ok(&[
        "resistance",
        "--input",
        &path,
        "--pair",
        "0,1",
        "--pair",
        "0,2",
        "--vertex",
        "0",
    ]);
    assert!(stdout.contains("pair 0 1 0.75\n"), "{stdout}");
    assert!(stdout.contains("pair 0 2 1\n"), "{stdout}");
    assert!(stdout.contains("vertex 0 2.5\n"), "{stdout}");
}

#[test]
fn resistance_matrix_json_is_square() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = write_square(dir.path());
    let stdout = run_ok(&["resistance", "--input", &path, "--matrix", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout).expect("valid JSON");
    let matrix = v["matrix"].as_array().expect("matrix");
    assert_eq!(matrix.len(), 4);
    for row in matrix {
        assert_eq!(row.as_array().expect("row").len(), 4);
    }
    assert_eq!(matrix[0][2], 1.0);
}

#[test]
fn resistance_requires_exactly_one_network() {
    let (code, _, _) = run(&["resistance"]);
    assert_eq!(code, 64);
    let dir = tempfile::tempdir().expect("tempdir");
    let path = write_square(dir.path());
    let (code, _, _) = run(&["resistance", "--spec", "5:1", "--input", &path]);
    assert_eq!(code, 64);
}

#[test]
fn resistance_operational_failures_exit_one() {
    let (code, _, stderr) = run(&["resistance", "--input", "/nonexistent/net.json"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("error:"));
    // A vertex outside the network is also operational, not usage.
    let (code, _, _) = run(&["resistance", "--spec", "5:1", "--pair", "0,99"]);
    assert_eq!(code, 1);
}

#[test]
fn enumerate_counts_and_lists_agree() {
    assert_eq!(run_ok(&["enumerate", "6:5", "--count"]).trim(), "27");
    assert_eq!(
        run_ok(&["enumerate", "6:5", "--canonical", "--count"]).trim(),
        "10"
    );
    let raw = run_ok(&["enumerate", "5:4"]);
    assert_eq!(raw.lines().count(), 4);
    let canonical = run_ok(&["enumerate", "5:4", "--canonical"]);
    let lines: Vec<&str> = canonical.lines().collect();
    assert_eq!(lines, ["5:4:0,0", "5:4:0,1"]);
}

#[test]
fn enumerate_respects_the_cap() {
    let (code, _, stderr) = run(&["enumerate", "8:6", "--cap", "100"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("error:"), "{stderr}");
}

#[test]
fn extremal_finds_the_known_families() {
    let stdout = run_ok(&["extremal", "--k", "6", "--h", "5"]);
    assert!(stdout.contains("min 6:5:0,0,0 kf "), "{stdout}");
    assert!(stdout.contains("max 6:5:1,1,1 kf "), "{stdout}");
    assert!(stdout.contains("classes 10\n"), "{stdout}");
}

#[test]
fn extremal_workers_do_not_change_the_answer() {
    let one = run_ok(&["extremal", "--k", "7", "--h", "5"]);
    let many = run_ok(&["extremal", "--k", "7", "--h", "5", "--workers", "3"]);
    assert_eq!(one, many);
}

#[test]
fn extremal_json_and_exact_ties() {
    let stdout = run_ok(&[
        "extremal", "--k", "6", "--h", "5", "--json", "--exact-ties",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout).expect("valid JSON");
    assert_eq!(v["min"]["spec"], "6:5:0,0,0");
    assert_eq!(v["max"]["spec"], "6:5:1,1,1");
    assert_eq!(v["classes"], 10);
    assert_eq!(v["raw"], "27");
}

#[test]
fn extremal_writes_the_table() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("table.csv");
    run_ok(&[
        "extremal",
        "--k",
        "6",
        "--h",
        "5",
        "--table",
        path.to_str().expect("utf-8 path"),
    ]);
    let text = std::fs::read_to_string(&path).expect("table written");
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "spec,kf,wiener");
    assert_eq!(lines.len(), 11, "header + one row per class");
    assert!(lines[1].starts_with("\"6:5:0,0,0\","), "{}", lines[1]);
}

#[test]
fn verify_passes_on_a_small_grid() {
    let (code, stdout, _) = run(&["verify", "--k", "5..=6", "--h", "3..=4"]);
    assert_eq!(code, 0);
    let cells: Vec<&str> = stdout.lines().filter(|l| l.starts_with("cell ")).collect();
    assert_eq!(cells.len(), 4);
    assert!(cells.iter().all(|l| l.contains(" PASS ")), "{stdout}");
    assert!(stdout.contains("verdict PASS\n"));
    // Alternate range forms and workers give the same verdict.
    let (code, alt, _) = run(&["verify", "--k", "5-6", "--h", "3..5", "--workers", "2"]);
    assert_eq!(code, 0);
    assert_eq!(alt, stdout);
}

#[test]
fn verify_failure_exits_two() {
    // An absurd separation requirement cannot be met by any multi-class
    // cell, so the check must report FAIL and exit 2.
    let (code, stdout, _) = run(&["verify", "--k", "6", "--h", "4", "--tol", "1e9"]);
    assert_eq!(code, 2);
    assert!(stdout.contains("cell 6:4 FAIL"), "{stdout}");
    assert!(stdout.contains("verdict FAIL\n"));
}

#[test]
fn verify_json_reports_every_cell() {
    let stdout = run_ok(&["verify", "--k", "5", "--h", "3..=4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout).expect("valid JSON");
    assert_eq!(v["all_pass"], true);
    assert_eq!(v["cells"].as_array().expect("cells").len(), 2);
}

#[test]
fn reduce_prints_the_frozen_pentagon_fan() {
    let stdout = run_ok(&["reduce", "--spec", "5:2"]);
    assert_eq!(line_value(&stdout, "source"), "1");
    assert_eq!(line_value(&stdout, "theta1"), "0.2");
    assert_eq!(line_value(&stdout, "theta2"), "0.6");
    assert_eq!(line_value(&stdout, "prefix"), "0.6");
    assert!(stdout.contains("omega 5 1.5\n"), "{stdout}");
}

#[test]
fn reduce_trace_lines_are_json() {
    let stdout = run_ok(&["reduce", "--spec", "6:3:1", "--trace"]);
    let steps: Vec<&str> = stdout
        .lines()
        .filter(|line| line.starts_with('{'))
        .collect();
    assert!(!steps.is_empty());
    for line in steps {
        let v: serde_json::Value = serde_json::from_str(line).expect("valid JSON line");
        assert!(v["step"].is_string(), "{line}");
    }
}

#[test]
fn reduce_rejects_a_bad_source_as_usage() {
    // Vertex 2 is a shared corner of the first polygon (degree 3).
    let (code, _, stderr) = run(&["reduce", "--spec", "5:2", "--source", "2"]);
    assert_eq!(code, 64);
    assert!(stderr.contains("usage error:"), "{stderr}");
}

#[test]
fn flip_reports_the_encoded_image() {
    let stdout = run_ok(&["flip", "--spec", "6:4:2,0", "--polygon", "2", "--t", "1"]);
    assert_eq!(line_value(&stdout, "image"), "6:4:1,2");
    assert_eq!(line_value(&stdout, "canonical-image"), "6:4:0,1");
    assert_eq!(line_value(&stdout, "cut-top"), "6 7");
    assert_eq!(line_value(&stdout, "cut-bottom"), "5 9");
    // The reported difference must match the two indices it connects.
    let kf: f64 = line_value(&stdout, "kf").parse().expect("kf");
    let image_kf: f64 = line_value(&stdout, "image-kf").parse().expect("image-kf");
    let difference: f64 = line_value(&stdout, "difference").parse().expect("difference");
    assert!((difference - (kf - image_kf)).abs() <= 1e-9);
    let direct = run_ok(&["compute", "--spec", "6:4:1,2", "--index", "kf"]);
    let direct_kf: f64 = line_value(&direct, "kf").parse().expect("kf");
    assert!((image_kf - direct_kf).abs() <= 1e-6, "{image_kf} vs {direct_kf}");
}

#[test]
fn flip_defaults_to_the_balancing_target() {
    let stdout = run_ok(&["flip", "--spec", "7:4:3,0", "--polygon", "2"]);
    // w = 3 with k = 7 rebalances to the upper middle value 2.
    assert_eq!(line_value(&stdout, "target-top"), "2");
}

#[test]
fn flip_rejects_non_interior_polygons_as_usage() {
    let (code, _, stderr) = run(&["flip", "--spec", "6:4:2,0", "--polygon", "1"]);
    assert_eq!(code, 64);
    assert!(stderr.contains("usage error:"), "{stderr}");
    let (code, _, _) = run(&["flip", "--spec", "6:4:2,0", "--polygon", "4"]);
    assert_eq!(code, 64);
}

#[test]
fn usage_and_help_exit_codes() {
    let (code, _, _) = run(&[]);
    assert_eq!(code, 64);
    let (code, stdout, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("polychain"));
    let (code, _, _) = run(&["--version"]);
    assert_eq!(code, 0);
    // Malformed and out-of-domain specs are caught during parsing.
    let (code, _, _) = run(&["compute", "--spec", "abc"]);
    assert_eq!(code, 64);
    let (code, _, _) = run(&["compute", "--spec", "4:2"]);
    assert_eq!(code, 64);
    let (code, _, _) = run(&["compute"]);
    assert_eq!(code, 64);
}
