use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_splitlike");

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

/// Compares with `tests/golden/<name>`; set `SPLITLIKE_UPDATE_GOLDEN=1` to
/// rewrite the expectation.
fn golden(name: &str, actual: &str) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    if std::env::var_os("SPLITLIKE_UPDATE_GOLDEN").is_some() {
        fs::write(&path, actual).unwrap();
    }
    let expected =
        fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
    assert_eq!(actual, expected, "golden mismatch for {name}");
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn solve_path_with_exact_solver() {
    let out = run(&["solve", path_str(&fixture("p3.stp")), "--algo", "exact"]);
    assert_eq!(out.status.code(), Some(0));
    golden("solve_p3_exact.txt", &stdout(&out));
}

#[test]
fn solve_auto_and_specialized() {
    let auto = run(&["solve", path_str(&fixture("p3.stp"))]);
    assert_eq!(auto.status.code(), Some(0));
    assert!(stdout(&auto).contains("S = {2}"));
    let claw = run(&[
        "solve",
        path_str(&fixture("p3.stp")),
        "--algo",
        "claw",
        "--seed",
        "7",
    ]);
    assert_eq!(claw.status.code(), Some(0));
    assert!(stdout(&claw).starts_with("algorithm: claw-free-bipartite\nS = {2}"));
    let json = run(&[
        "solve",
        path_str(&fixture("p3.stp")),
        "--algo",
        "hub",
        "--json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(value["solution"]["steiner"], serde_json::json!([1]));
}

#[test]
fn exceeded_budget_exits_one() {
    let out = run(&["solve", path_str(&fixture("p3_budget0.stp"))]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).ends_with("budget 0: no\n"));
}

#[test]
fn usage_and_parse_errors_exit_two() {
    assert_eq!(run(&["solve", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["solve", "/nonexistent.stp"]).status.code(), Some(2));
    let bad = run(&["solve", path_str(&fixture("bad_count.stp"))]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(stderr(&bad).contains("line 6"), "{}", stderr(&bad));
    let wrong_algo = run(&["solve", path_str(&fixture("p3.stp")), "--algo", "nope"]);
    assert_eq!(wrong_algo.status.code(), Some(2));
}

#[test]
fn recognize_prints_class_report() {
    let out = run(&["recognize", path_str(&fixture("p3.stp"))]);
    assert_eq!(out.status.code(), Some(0));
    golden("recognize_p3.json", &stdout(&out));
}

#[test]
fn reduce_then_solve_matches_cover_oracle() {
    let dir = tempfile::tempdir().unwrap();
    for (source, yes) in [("x3c_yes.json", true), ("x3c_no.json", false)] {
        for target in [
            "bisplit-d3",
            "trisplit",
            "star-bip",
            "star-bisplit-i",
            "k15-bip",
        ] {
            let stp = dir.path().join(format!("{target}.stp"));
            let from = if target == "k15-bip" { "x3c3" } else { "x3c" };
            let out = run(&[
                "reduce",
                "--from",
                from,
                "--target",
                target,
                path_str(&fixture(source)),
                path_str(&stp),
            ]);
            assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
            assert!(stp.with_extension("json").exists());
            let solved = run(&["solve", path_str(&stp), "--algo", "exact"]);
            let expected = if yes { 0 } else { 1 };
            assert_eq!(solved.status.code(), Some(expected), "{source} -> {target}");
        }
    }
}

#[test]
fn reduction_output_is_stable() {
    let dir = tempfile::tempdir().unwrap();
    let stp = dir.path().join("g.stp");
    let out = run(&[
        "reduce",
        "--from",
        "x3c",
        "--target",
        "bisplit-d3",
        path_str(&fixture("x3c_yes.json")),
        path_str(&stp),
    ]);
    assert_eq!(out.status.code(), Some(0));
    golden("bisplit_d3.stp", &fs::read_to_string(&stp).unwrap());
    golden(
        "bisplit_d3.json",
        &fs::read_to_string(stp.with_extension("json")).unwrap(),
    );
}

#[test]
fn gadget_without_specialized_solver_needs_exact_flag() {
    let dir = tempfile::tempdir().unwrap();
    let stp = dir.path().join("g.stp");
    run(&[
        "reduce",
        "--from",
        "x3c",
        "--target",
        "bisplit-d3",
        path_str(&fixture("x3c_yes.json")),
        path_str(&stp),
    ]);
    let plain = run(&["solve", path_str(&stp)]);
    assert_eq!(plain.status.code(), Some(2));
    assert!(stderr(&plain).contains("--exact"));
    let fallback = run(&["solve", path_str(&stp), "--exact"]);
    assert_eq!(fallback.status.code(), Some(0));
    assert!(stdout(&fallback).contains("algorithm: exact"));
}

#[test]
fn reduce_rejects_mismatched_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.stp");
    let cases: [(&str, &str, &str); 4] = [
        ("3dm", "bisplit", "tdm.json"),
        ("x3c", "path-chordal", "x3c_yes.json"),
        ("x3c", "k15-bip", "x3c_yes.json"),
        ("x3c", "no-such-target", "x3c_yes.json"),
    ];
    for (from, target, input) in cases {
        let res = run(&[
            "reduce",
            "--from",
            from,
            "--target",
            target,
            path_str(&fixture(input)),
            path_str(&out),
        ]);
        assert_eq!(res.status.code(), Some(2), "{from} {target}");
    }
    let json_out = dir.path().join("g.json");
    let res = run(&[
        "reduce",
        "--from",
        "x3c",
        "--target",
        "trisplit",
        path_str(&fixture("x3c_yes.json")),
        path_str(&json_out),
    ]);
    assert_eq!(res.status.code(), Some(2));
}

#[test]
fn path_graph_gadget_from_triples() {
    let dir = tempfile::tempdir().unwrap();
    let stp = dir.path().join("p.stp");
    let out = run(&[
        "reduce",
        "--from",
        "3dm",
        "--target",
        "path-chordal",
        path_str(&fixture("tdm.json")),
        path_str(&stp),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let report = run(&["recognize", path_str(&stp)]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&report)).unwrap();
    assert_eq!(value["chordal"], serde_json::json!(true));
    assert!(value["max_induced_star"].as_u64().unwrap() <= 3);
}

#[test]
fn verify_is_deterministic_and_passes() {
    let args = ["verify", "--suite", "fuzz", "--seed", "5", "--count", "20"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0), "{}", stderr(&first));
    assert_eq!(stdout(&first), stdout(&second));
    golden("verify_fuzz_seed5.json", &stdout(&first));
}

#[test]
fn stored_failures_replay() {
    let dir = tempfile::tempdir().unwrap();
    let cx_dir = dir.path().join("cx");
    let out = run(&[
        "verify",
        "--suite",
        "equivalence",
        "--seed",
        "3",
        "--count",
        "10",
        "--save-counterexamples",
        path_str(&cx_dir),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let files: Vec<_> = fs::read_dir(&cx_dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    assert!(!files.is_empty(), "observed checks leave counterexamples");
    for file in &files {
        let replayed = run(&["replay", path_str(file)]);
        assert_eq!(replayed.status.code(), Some(3), "{}", file.display());
    }

    let corrupt = dir.path().join("corrupt.json");
    fs::write(&corrupt, "{\"format\": 1, \"check\": ").unwrap();
    assert_eq!(run(&["replay", path_str(&corrupt)]).status.code(), Some(2));
}
