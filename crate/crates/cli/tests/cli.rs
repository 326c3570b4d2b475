//! End-to-end tests of the `qk` binary: golden invocations, JSON round
//! trips, determinism and exit codes.

use std::process::Command;

fn qk(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_qk")).args(args).output().expect("run qk")
}

fn stdout(args: &[&str]) -> String {
    let out = qk(args);
    assert!(out.status.success(), "qk {args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).expect("utf8")
}

#[test]
fn pieri_lg714_json_contains_the_example_term() {
    let text = stdout(&[
        "pieri", "--family", "lg", "--n", "7", "--p", "6", "--shape", "7,5,4,2", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["family"], "LG");
    assert_eq!(v["n"], 7);
    let terms = v["terms"].as_array().unwrap();
    let hit = terms
        .iter()
        .find(|t| t["q"] == 1 && t["partition"] == serde_json::json!([7, 5, 3, 2]))
        .expect("example term present");
    assert_eq!(hit["coeff"], -4);
}

#[test]
fn json_round_trips_to_an_equal_class() {
    let text = stdout(&[
        "pieri", "--family", "og", "--n", "5", "--p", "2", "--shape", "4,2", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let class = qk_core::QKClass::from_json(&v).unwrap();
    let fam = qk_core::Family::og(5).unwrap();
    let lam = qk_core::QuantumShape::classical(fam, vec![4, 2]).unwrap();
    assert_eq!(class, qk_core::ring::pieri(2, &lam).unwrap());
}

#[test]
fn gw_example_value() {
    let text = stdout(&[
        "gw", "--n", "12", "--d", "2", "--lambda", "11,8,6,3,1", "--mu", "12,11,9,6,5", "--p", "10",
    ]);
    assert_eq!(text.trim(), "2");
}

#[test]
fn gr37_text_output() {
    let text = stdout(&[
        "pieri", "--family", "gra", "--m", "3", "--n", "7", "--p", "3", "--shape", "3,3,1",
    ]);
    assert_eq!(text.trim(), "O[4,3,3] - q·O[2,2] + q·O[2,1]");
}

#[test]
fn seidel_gr24_example() {
    let text = stdout(&[
        "seidel", "--family", "gra", "--m", "2", "--n", "4", "--word", "sigma", "--shape", "2,1",
    ]);
    assert!(text.contains("q·O[1]"));
    assert!(text.contains("degree: q^1"));
}

#[test]
fn tableaux_enumeration_counts() {
    let text = stdout(&[
        "tableaux", "--family", "lg", "--n", "7", "--kind", "qklg", "--p", "6", "--nu", "7,5,3,2@d1",
        "--lambda", "7,5,4,2",
    ]);
    assert!(text.starts_with("4 tableaux"));
    let text = stdout(&[
        "tableaux", "--family", "lg", "--n", "7", "--kind", "klg", "--p", "6", "--nu", "7,5,3,2@d1",
        "--lambda", "7,5,4,2",
    ]);
    assert!(text.starts_with("9 tableaux"));
}

#[test]
fn diagram_descriptor_sg820() {
    let text = stdout(&[
        "diagram", "--n", "10", "--p-symbol", "2,3,7,8,11,12,16,20", "--q-symbol",
        "1,2,4,6,9,11,16,18", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["components"], serde_json::json!([[0, 3], [3, 8], [8, 10]]));
    assert_eq!(v["linear_equations"], serde_json::json!([5]));
    assert_eq!(v["quadratic_components"], serde_json::json!([[0, 3]]));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = [
        "pieri", "--family", "lg", "--n", "6", "--p", "4", "--shape", "5,3,1", "--format", "json",
    ];
    let a = qk(&args);
    let b = qk(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(a.status.success());
}

#[test]
fn verify_suite_passes_and_reports_cases() {
    let text = stdout(&["verify", "--suite", "pieri-examples", "--max-size", "6"]);
    assert!(text.contains("PASS"));
    assert!(text.lines().filter(|l| l.starts_with("[pass]")).count() >= 3);
}

#[test]
fn domain_errors_exit_one() {
    let out = qk(&["pieri", "--family", "lg", "--n", "4", "--p", "9", "--shape", "2,1"]);
    assert_eq!(out.status.code(), Some(1));
    let out = qk(&["pieri", "--family", "lg", "--n", "4", "--p", "2", "--shape", "2,2"]);
    assert_eq!(out.status.code(), Some(1));
    let out = qk(&["verify", "--suite", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(1));
    // tableaux kinds are tied to their families
    let out = qk(&[
        "tableaux", "--family", "gra", "--m", "2", "--n", "5", "--kind", "klg", "--p", "1", "--nu",
        "1", "--lambda", "0",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn og_half_shift_literal() {
    // 0@h2 is the identity half-shifted twice, i.e. q * 1
    let a = stdout(&["pieri", "--family", "og", "--n", "5", "--p", "2", "--shape", "0@h2", "--format", "json"]);
    let b = stdout(&["pieri", "--family", "og", "--n", "5", "--p", "2", "--shape", "0@d1", "--format", "json"]);
    assert_eq!(a, b);
    // odd half-shifts reach the row-class translates
    let text = stdout(&["poset", "--family", "og", "--n", "5", "--shape", "0@h1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["q"], 0);
    assert_eq!(v["partition"], serde_json::json!([4]));
}

#[test]
fn odot_reconstruction_output() {
    let text = stdout(&["odot", "--n", "2", "--p", "1", "--shape", "1", "--reconstruct"]);
    // O^1 (.) O^1 on the interval, then (1 - q psi) of it
    assert!(text.lines().count() >= 2);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("qk-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.json");
    let out = qk(&[
        "pieri", "--family", "lg", "--n", "5", "--p", "2", "--shape", "3,1", "--format", "json",
        "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(serde_json::from_str::<serde_json::Value>(&text).is_ok());
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn qk_threads_parallel_verify_matches_sequential() {
    let args = ["verify", "--suite", "all", "--max-size", "2"];
    let seq = Command::new(env!("CARGO_BIN_EXE_qk"))
        .args(args)
        .env("QK_THREADS", "1")
        .output()
        .expect("run");
    let par = Command::new(env!("CARGO_BIN_EXE_qk"))
        .args(args)
        .env("QK_THREADS", "4")
        .output()
        .expect("run");
    assert_eq!(seq.stdout, par.stdout);
}
