use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pertinent"))
        .args(args)
        .env_remove("PERTINENT_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count_all_routes_json() {
    let o = run(&["count", "--family", "C", "--n", "4", "--route", "all", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 3);
    for (t, route) in arr.iter().zip(["enumeration", "dag", "gf"]) {
        assert_eq!(t["route"], route);
        assert_eq!(t["coeffs"].to_string(), "[1,12,60,152,186,108,24]");
        assert_eq!(t["total"].to_string(), "543");
    }
}

#[test]
fn count_json_schema() {
    let o = run(&["count", "--family", "C", "--n", "4", "--route", "gf", "--format", "json"]);
    assert_eq!(
        stdout(&o).trim(),
        r#"{"family":"C","n":4,"m":12,"i_max":6,"route":"gf","coeffs":[1,12,60,152,186,108,24],"total":543}"#
    );
}

#[test]
fn count_text_rows() {
    let o = run(&["count", "--family", "A", "--n", "1"]);
    assert_eq!(stdout(&o).trim(), "A_1 enumeration: [1] total 1");
    let o = run(&["count", "--family", "B", "--n", "5"]);
    assert!(stdout(&o).contains(
        "[1, 20, 186, 1056, 4035, 10836, 21032, 30212, 32829, 27520, 18062, 9324, 3741, 1128, 240, 32, 2]"
    ));
}

#[test]
fn output_is_independent_of_workers() {
    let args = ["count", "--family", "B", "--n", "4", "--format", "csv"];
    let base = stdout(&run(&args));
    for w in ["1", "3"] {
        let mut a = vec!["--workers", w];
        a.extend(args);
        assert_eq!(stdout(&run(&a)), base);
    }
    let mut a = vec!["--sequential"];
    a.extend(args);
    assert_eq!(stdout(&run(&a)), base);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["count", "--family", "A", "--n", "3", "--route", "dag"]).status.code(), Some(2));
    assert_eq!(run(&["count", "--family", "D", "--n", "3"]).status.code(), Some(2));
    assert_eq!(run(&["count", "--family", "A", "--n", "9"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nothing"]).status.code(), Some(2));
    assert_eq!(run(&["omega", "--family", "C", "--n", "2", "--values", "1,2"]).status.code(), Some(2));
    assert_eq!(run(&["--workers", "0", "verify", "worked"]).status.code(), Some(2));
}

#[test]
fn curve_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.csv");
    let o = run(&["curve", "--n", "2", "--step", "0.25", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 4);
    assert!(text.starts_with("r,P_A,P_B,P_C\n"));
    assert!(!text.contains('\r'));
    assert!(stdout(&o).contains("3 rows written"));
}

#[test]
fn curve_n5_reports_boundary() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.csv");
    let o = run(&["curve", "--n", "5", "--step", "0.01", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 100);
    assert!(stdout(&o).contains("chain boundary ≈ [0.16, 0.17]"), "{}", stdout(&o));
}

#[test]
fn verify_suites_exit_codes() {
    for suite in ["bifurcation", "worked", "omega", "prop6", "prop7"] {
        let o = run(&["verify", suite]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stdout(&o));
    }
    let o = run(&["verify", "prop3", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["verify", "bifurcation", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(v.as_array().unwrap().iter().all(|r| r["pass"] == true));
}

#[test]
fn verify_sloane_reports_the_f5_discrepancy() {
    let o = run(&["verify", "sloane"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("FAIL f_5: claimed 10363661, computed 10363361"));
    assert!(out.contains("PASS h_5: claimed 29281, computed 29281"));
}

#[test]
fn omega_command() {
    let o = run(&["omega", "--family", "C", "--n", "2", "--values", "0,1/2@1/2,2@1/2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("u = 0"));
    assert!(out.contains("  1 2; 1/2 1"));
    assert!(out.contains("  1 1/2; 2 1"));
    assert!(out.contains("probability: 1/2*r^2"));
    let o = run(&["omega", "--family", "C", "--n", "2", "--values", "[0,2]"]);
    assert!(stdout(&o).contains("  1 *; 0 1"));
    let o = run(&["omega", "--family", "A", "--n", "2", "--values", "[0,2]", "--tilde"]);
    assert!(stdout(&o).contains("members: 9"));
}

#[test]
fn inclusion_command() {
    let o = run(&["inclusion", "--family", "A", "--n", "2", "--dis", "0,1/2,2", "--cnt", "[0,2]"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("only discrete: 1 1; 1 1"));
    let o = run(&["inclusion", "--family", "C", "--n", "2", "--dis", "0,1", "--cnt", "[0,1]"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("disjoint: true"));
}
