use std::process::{Command, Output};

fn graphfix(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graphfix")).args(args).output().expect("binary runs")
}

#[test]
fn verify_exits_zero_and_emits_json() {
    let out = graphfix(&["--json", "verify-paper"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["name"] == "C6: aut=12, group=D6, fix=2" && c["pass"] == true));
    assert!(checks.iter().any(|c| c["name"] == "petersen: fix=3" && c["pass"] == true));
    assert!(checks.iter().any(|c| c["name"] == "inf_k5_k1: fix=2" && c["pass"] == true));
    assert!(checks.iter().all(|c| c["claim"].as_str().is_some_and(|s| !s.is_empty())));
}

#[test]
fn usage_and_cap_errors_exit_two() {
    assert_eq!(graphfix(&["experiment", "group-fixset", "Q8"]).status.code(), Some(2));
    assert_eq!(graphfix(&["experiment", "greedy", "--max-n", "9"]).status.code(), Some(2));
    assert_eq!(graphfix(&["fix", "not graph6!"]).status.code(), Some(2));
    assert_eq!(graphfix(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let args = ["--json", "experiment", "greedy", "--max-n", "6"];
    let a = graphfix(&args);
    let b = graphfix(&["--jobs", "1", "--json", "experiment", "greedy", "--max-n", "6"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn fix_reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_graphfix"))
        .args(["--json", "fix", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    use std::io::Write;
    child.stdin.take().unwrap().write_all(b"Dhc\nC~\n").unwrap();
    let out = child.wait_with_output().unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let fixes: Vec<u64> = v["records"].as_array().unwrap().iter().map(|r| r["fix"].as_u64().unwrap()).collect();
    assert_eq!(fixes, vec![2, 3]);
}

#[test]
fn construct_prints_graph6() {
    let out = graphfix(&["construct", "gk", "3", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "EpOW");
    let out = graphfix(&["--json", "construct", "abelian", "Z2xZ2", "2"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["summary"]["factors"], serde_json::json!([2, 2]));
}
