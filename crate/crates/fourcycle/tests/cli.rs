use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use fourcycle::cli::{run, EXIT_IO, EXIT_LIMIT, EXIT_OK, EXIT_USAGE, EXIT_VERIFY};

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn fourcycle(args: &[&str]) -> Output {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("fourcycle").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn edge_file(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

const K4: &str = "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
const C4: &str = "0 1\n1 2\n2 3\n3 0\n";
const K3: &str = "0 1\n1 2\n2 0\n";

fn tsv_field<'a>(stdout: &'a str, key: &str) -> &'a str {
    stdout
        .lines()
        .find_map(|l| l.strip_prefix(key)?.strip_prefix('\t'))
        .unwrap_or_else(|| panic!("no {key} in {stdout}"))
}

#[test]
fn count_small_grid() {
    let out = fourcycle(&["count", "--grid", "3x3"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert_eq!(tsv_field(&out.stdout, "graph"), "grid-3x3");
    assert_eq!(tsv_field(&out.stdout, "n"), "9");
    assert_eq!(tsv_field(&out.stdout, "m"), "12");
    assert_eq!(tsv_field(&out.stdout, "half_edges"), "24");
    assert_eq!(tsv_field(&out.stdout, "max_degree"), "4");
    assert_eq!(tsv_field(&out.stdout, "c4"), "4");
    let avg: f64 = tsv_field(&out.stdout, "avg_degeneracy").parse().unwrap();
    assert!((avg - 28.0 / 12.0).abs() < 1e-12);
}

#[test]
fn count_json() {
    let out = fourcycle(&["count", "--grid", "10x10", "--format", "json"]);
    assert_eq!(out.code, EXIT_OK);
    let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc["c4"], 81);
    assert_eq!(doc["n"], 100);
}

#[test]
fn count_empty_input_has_null_degeneracy() {
    let path = edge_file("empty.txt", "# no edges\n");
    let out = fourcycle(&["count", path.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(tsv_field(&out.stdout, "avg_degeneracy"), "null");
    assert_eq!(tsv_field(&out.stdout, "c4"), "0");
    assert!(out.stderr.contains("undefined"));

    let out = fourcycle(&["count", path.to_str().unwrap(), "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert!(doc["avg_degeneracy"].is_null());
}

#[test]
fn vertex_lines_on_grid() {
    let out = fourcycle(&["vertex", "--grid", "3x3"]);
    assert_eq!(out.code, EXIT_OK);
    let lines: Vec<_> = out.stdout.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(lines.len(), 9);
    assert_eq!(lines[4], "4\t4");
    assert_eq!(
        out.stdout.lines().last().unwrap(),
        "# identity\tsum/4\t4\tglobal\t4\tok"
    );
}

#[test]
fn edge_lines() {
    let c4 = edge_file("c4.txt", C4);
    let out = fourcycle(&["edge", c4.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_OK);
    let rows: Vec<_> = out.stdout.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|l| l.ends_with("\t1")));

    let k4 = edge_file("k4.txt", K4);
    let out = fourcycle(&["edge", k4.to_str().unwrap()]);
    let rows: Vec<_> = out.stdout.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows.len(), 6);
    for row in rows {
        let f: Vec<u32> = row.split('\t').map(|t| t.parse().unwrap()).collect();
        assert!(f[0] < f[1]);
        assert_eq!(f[2], 2);
    }
}

#[test]
fn enumerate_footer() {
    for (name, text, total) in [("k4.txt", K4, 3), ("c4.txt", C4, 1), ("k3.txt", K3, 0)] {
        let path = edge_file(name, text);
        let out = fourcycle(&["enumerate", path.to_str().unwrap()]);
        assert_eq!(out.code, EXIT_OK);
        let lines: Vec<_> = out.stdout.lines().collect();
        assert_eq!(lines.len(), total + 1);
        assert_eq!(*lines.last().unwrap(), format!("total\t{total}"));
    }
    let path = edge_file("c4.txt", C4);
    let out = fourcycle(&["enumerate", path.to_str().unwrap()]);
    assert_eq!(out.stdout, "3\t2\t1\t0\ntotal\t1\n");
}

#[test]
fn enumerate_json_lines() {
    let out = fourcycle(&["enumerate", "--grid", "2x3", "--format", "json"]);
    let lines: Vec<serde_json::Value> = out
        .stdout
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[2]["total"], 2);
}

#[test]
fn verify_matrix() {
    let k4 = edge_file("k4.txt", K4);
    let out = fourcycle(&["verify", k4.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    assert!(out.stdout.ends_with("result\tpass\n"));

    let out = fourcycle(&["verify", "--grid", "6x7"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(tsv_field(&out.stdout, "global"), "30");

    let out = fourcycle(&["verify", "--grid", "7x10"]);
    assert_eq!(out.code, EXIT_LIMIT);
    assert!(out.stderr.contains("70"), "{}", out.stderr);
}

#[test]
fn bench_records() {
    let out = fourcycle(&[
        "bench",
        "--grid",
        "100x100",
        "--reps",
        "1",
        "--warmups",
        "0",
    ]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let rows: Vec<_> = out
        .stdout
        .lines()
        .skip(1)
        .filter(|l| !l.starts_with('#'))
        .collect();
    assert_eq!(rows.len(), 6);
    for row in rows {
        assert!(row.ends_with("\t9801"), "{row}");
    }
    assert_eq!(
        out.stdout
            .lines()
            .filter(|l| l.starts_with("# ratio"))
            .count(),
        3
    );

    let out = fourcycle(&[
        "bench",
        "--grid",
        "50x50",
        "--quantity",
        "global",
        "--format",
        "json",
        "--reps",
        "1",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let records = doc["records"].as_array().unwrap();
    assert_eq!(records.len(), 2);
    assert_eq!(records[0]["variant"], "array");
    assert_eq!(records[1]["variant"], "map-default");
    assert!(records.iter().all(|r| r["result"] == 2401));
    assert!(records.iter().all(|r| r["seconds"].as_f64().unwrap() > 0.0));
    assert_eq!(doc["ratios"].as_array().unwrap().len(), 1);
}

#[test]
fn bench_empty_graph() {
    let path = edge_file("empty-bench.txt", "");
    let out = fourcycle(&["bench", path.to_str().unwrap(), "--variant", "map"]);
    assert_eq!(out.code, EXIT_OK);
    let rows: Vec<_> = out.stdout.lines().skip(1).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r.ends_with("\t0")));
}

#[test]
fn generate_round_trips() {
    let out = fourcycle(&["generate", "--grid", "4x5"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout.lines().count(), 3 * 5 + 4 * 4);
    let path = edge_file("grid45.txt", &out.stdout);
    let out = fourcycle(&["count", path.to_str().unwrap()]);
    assert_eq!(tsv_field(&out.stdout, "c4"), "12");
}

#[test]
fn loader_flags() {
    let messy = edge_file("messy.txt", "10 20\n20 10\n30 30\n20 30\n");
    let out = fourcycle(&["count", messy.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(tsv_field(&out.stdout, "n"), "31");
    assert!(out.stderr.contains("1 duplicate edges and 1 self-loops"));

    let out = fourcycle(&["count", messy.to_str().unwrap(), "--remap"]);
    assert_eq!(tsv_field(&out.stdout, "n"), "3");
    assert_eq!(tsv_field(&out.stdout, "m"), "2");

    let out = fourcycle(&["count", messy.to_str().unwrap(), "--strict"]);
    assert_eq!(out.code, EXIT_IO);
    assert!(out.stderr.contains("line 3: self-loop on vertex 30"));

    let dup = edge_file("dup.txt", "10 20\n20 10\n");
    let out = fourcycle(&["count", dup.to_str().unwrap(), "--strict"]);
    assert_eq!(out.code, EXIT_IO);
    assert!(
        out.stderr.contains("duplicate edge {10, 20}"),
        "{}",
        out.stderr
    );
}

#[test]
fn exit_codes() {
    assert_eq!(fourcycle(&[]).code, EXIT_USAGE);
    assert_eq!(fourcycle(&["count"]).code, EXIT_USAGE);
    assert_eq!(fourcycle(&["count", "--grid", "3"]).code, EXIT_USAGE);
    assert_eq!(
        fourcycle(&["count", "x.txt", "--grid", "3x3"]).code,
        EXIT_USAGE
    );
    assert_eq!(
        fourcycle(&["bench", "--grid", "3x3", "--reps", "0"]).code,
        EXIT_USAGE
    );
    assert_eq!(fourcycle(&["--help"]).code, EXIT_OK);
    assert_eq!(fourcycle(&["--version"]).code, EXIT_OK);

    let missing = fourcycle(&["count", "/nonexistent/graph.txt"]);
    assert_eq!(missing.code, EXIT_IO);
    assert!(missing.stderr.contains("/nonexistent/graph.txt"));

    let bad = edge_file("bad.txt", "0 1\n1 two\n");
    let out = fourcycle(&["count", bad.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_IO);
    assert!(out.stderr.contains("line 2"));

    assert_eq!(
        fourcycle(&["count", "--grid", "131072x65536"]).code,
        EXIT_LIMIT
    );
    assert_ne!(EXIT_VERIFY, EXIT_OK);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["enumerate", "--grid", "8x9"][..],
        &["edge", "--grid", "8x9"],
        &["vertex", "--grid", "8x9", "--format", "json"],
    ] {
        assert_eq!(fourcycle(args).stdout, fourcycle(args).stdout);
    }
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fourcycle"))
}

#[test]
fn binary_reads_stdin() {
    let mut child = binary()
        .args(["count", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(K4.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(tsv_field(&stdout, "c4"), "3");
}

#[test]
fn binary_exit_codes() {
    let status = |args: &[&str]| binary().args(args).output().unwrap().status.code();
    assert_eq!(status(&["count", "--grid", "5x5"]), Some(EXIT_OK));
    assert_eq!(status(&["frobnicate"]), Some(EXIT_USAGE));
    assert_eq!(status(&["count", "/nonexistent"]), Some(EXIT_IO));
}

#[test]
fn binary_broken_pipe_is_an_error() {
    let mut child = binary()
        .args(["enumerate", "--grid", "1000x1000"])
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .unwrap();
    drop(child.stdout.take());
    let status = child.wait().unwrap();
    assert_eq!(status.code(), Some(EXIT_IO));
}
