use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn quivdim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quivdim"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn path(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

fn temp_file(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("quivdim-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn gldim_of_square_with_zeros() {
    let o = quivdim(&["gldim", &path("square-with-zeros.alg")]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("status: certified\n"));
    assert!(text.contains("gl.dim = 3\n"));
    assert!(text.contains("  S1: pd = 3, id = 0\n"));
    assert!(text.contains("criterion: skipped\n"));
}

#[test]
fn critical_lists_the_a1_subsets() {
    let o = quivdim(&["critical", &path("square-with-zeros.alg")]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("critical subcategory"))
        .collect();
    assert_eq!(
        lines,
        [
            "critical subcategory: {1,2,4,6} ≅ A_1",
            "critical subcategory: {1,2,5,6} ≅ A_1",
            "critical subcategory: {1,3,5,6} ≅ A_1",
        ]
    );
}

#[test]
fn guided_strategy_agrees_on_fixture() {
    let all = stdout(&quivdim(&["critical", &path("square-with-zeros.alg")]));
    let guided = stdout(&quivdim(&[
        "critical",
        "--strategy",
        "guided",
        &path("square-with-zeros.alg"),
    ]));
    for line in guided.lines().filter(|l| l.starts_with("critical")) {
        assert!(all.contains(line), "{line}");
    }
    assert!(guided.contains("≅ A_1\n"));
}

#[test]
fn split_zero_chain_has_a_critical_subset_but_dimension_two() {
    let o = quivdim(&["criterion", &path("split-zero-chain.alg")]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("gl.dim = 2\n"));
    assert!(text.contains("critical subcategory: {1,2,5,6} ≅ A_1\n"));
    assert!(text.contains("  0 → P3 → P2 → P1 → S1 → 0\n"));
}

#[test]
fn json_report_parses() {
    let o = quivdim(&["--json", "criterion", &path("square-with-zeros.alg")]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["version"], 1);
    assert_eq!(v["gldim"], 3);
    assert_eq!(v["certified"], true);
    assert_eq!(v["criterion"]["verdict"], "critical_found");
    let subsets: Vec<_> = v["criterion"]["critical"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["subset"].clone())
        .collect();
    assert!(subsets.contains(&serde_json::json!(["1", "2", "5", "6"])));
}

#[test]
fn reports_are_byte_identical() {
    for args in [
        vec!["criterion", "square-with-zeros.alg"],
        vec!["--json", "criterion", "split-zero-chain.alg"],
        vec!["critical", "crown.alg"],
    ] {
        let mut full: Vec<String> = args[..args.len() - 1]
            .iter()
            .map(|s| s.to_string())
            .collect();
        full.push(path(args[args.len() - 1]));
        let refs: Vec<&str> = full.iter().map(String::as_str).collect();
        let first = quivdim(&refs).stdout;
        let second = quivdim(&refs).stdout;
        assert_eq!(first, second);
    }
}

#[test]
fn resolve_and_coresolve() {
    let o = quivdim(&["resolve", &path("square-with-zeros.alg"), "--simple", "1"]);
    assert_eq!(
        stdout(&o),
        "status: certified\n0 → P6 → P4 → P2 → P1 → S1 → 0\n"
    );
    let o = quivdim(&[
        "resolve",
        &path("square-with-zeros.alg"),
        "--simple",
        "6",
        "--coresolution",
    ]);
    assert_eq!(
        stdout(&o),
        "status: certified\n0 → S6 → I6 → I5 → I3 → I1 → 0\n"
    );
    let o = quivdim(&[
        "--json",
        "resolve",
        &path("square-with-zeros.alg"),
        "--simple",
        "2",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["terms"], serde_json::json!([["2"], ["3", "4"], ["5"]]));
    assert_eq!(v["length"], 2);
}

#[test]
fn unknown_simple_is_a_usage_error() {
    let o = quivdim(&["resolve", &path("square-with-zeros.alg"), "--simple", "9"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("unknown vertex 9"));
}

#[test]
fn crown_test_on_crown() {
    let o = quivdim(&["iz", &path("crown.alg")]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("crown test: fail (gl.dim >= 3)\ngl.dim = 3\n"));
    let o = quivdim(&["critical", &path("crown.alg")]);
    assert!(stdout(&o).contains("≅ Q_3\n"));
}

#[test]
fn crown_test_rejects_zero_relations() {
    let o = quivdim(&["iz", &path("square-with-zeros.alg")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn syntax_errors_are_located() {
    let p = temp_file("bad.alg", "algebra bad\nvertices 1 2\narrows 1->3\n");
    let o = quivdim(&["gldim", &p]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("bad.alg:3:"), "{err}");
    assert!(err.contains("E003"), "{err}");
}

#[test]
fn invalid_algebra_exits_with_validation_code() {
    let p = temp_file(
        "bypass.alg",
        "algebra bypass\nvertices 1 2 3\narrows 1->2 2->3 1->3\n",
    );
    let o = quivdim(&["gldim", &p]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("E006"));
}

#[test]
fn missing_file_is_a_usage_error() {
    let o = quivdim(&["gldim", "/nonexistent/algebra.alg"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn validate_reports_counts() {
    let o = quivdim(&["validate", &path("square-with-zeros.alg")]);
    assert_eq!(
        stdout(&o),
        "status: certified\nalgebra: square-with-zeros\nvertices: 6, arrows: 6, zero pairs: 2\n"
    );
}

#[test]
fn template_emission_round_trips() {
    let o = quivdim(&["templates", "--emit", "B", "3"]);
    assert!(o.status.success());
    let p = temp_file("b3.alg", &stdout(&o));
    let report = stdout(&quivdim(&["critical", &p]));
    assert!(report.contains("≅ B_3\n"), "{report}");
    let o = quivdim(&["templates", "--emit", "A", "2", "--opposite"]);
    let p = temp_file("a2op.alg", &stdout(&o));
    let gl = stdout(&quivdim(&["gldim", &p]));
    assert!(gl.contains("gl.dim = 3\n"));
}

#[test]
fn template_list_includes_small_entries() {
    let text = stdout(&quivdim(&["templates", "--list"]));
    assert!(text.lines().any(|l| l == "A_1: 4 vertices"));
    assert!(text.lines().any(|l| l.starts_with("Q_2")));
}

#[test]
fn random_is_seeded() {
    let a = stdout(&quivdim(&["random", "--seed", "7", "--n", "6"]));
    let b = stdout(&quivdim(&["random", "--seed", "7", "--n", "6"]));
    assert_eq!(a, b);
    assert!(a.contains("algebra random-7-6"));
    let p = temp_file("r.alg", &a);
    assert!(quivdim(&["gldim", &p]).status.success());
}

#[test]
fn random_rejects_bad_density() {
    let o = quivdim(&["random", "--seed", "1", "--n", "3", "--density", "0"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn compare_agrees_on_fixtures() {
    for f in ["square-with-zeros.alg", "split-zero-chain.alg"] {
        let o = quivdim(&["compare", &path(f)]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(!stdout(&o).contains("DISAGREE"));
    }
}

#[test]
fn crown_is_uncertified() {
    let o = quivdim(&["validate", &path("crown.alg")]);
    let text = stdout(&o);
    assert!(text.starts_with("status: uncertified\n"), "{text}");
    assert!(
        text.contains("  convex crown {b1,a1,b2,a2,b3,a3}\n"),
        "{text}"
    );
    // disagreements on uncertified input do not fail the comparison
    let o = quivdim(&["compare", &path("crown.alg")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("status: uncertified"));
}

#[test]
fn size_guard_needs_force() {
    let o = quivdim(&[
        "--max-subset-size",
        "4",
        "critical",
        &path("square-with-zeros.alg"),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("--force"));
    let o = quivdim(&[
        "--max-subset-size",
        "4",
        "--force",
        "critical",
        &path("square-with-zeros.alg"),
    ]);
    assert!(o.status.success());
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    assert_eq!(quivdim(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(quivdim(&["--help"]).status.code(), Some(0));
}
