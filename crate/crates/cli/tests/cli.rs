use std::process::{Command, Output};

fn powmon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_powmon"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim_end().to_string()
}

#[test]
fn frobenius_of_three_five() {
    let o = powmon(&["nsgp", "frobenius", "--gens", "3,5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "7");
}

#[test]
fn halo_line() {
    let o = powmon(&["lemma", "halo", "--gens", "1", "--set", "{0,1}", "--y", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "member=false equality=false consistent=true");
}

#[test]
fn window_two_search() {
    let o = powmon(&["aut", "search", "--gens", "1", "--window", "2", "--variant", "p0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "automorphisms=1 (identity)");
}

#[test]
fn json_carries_schema() {
    let o = powmon(&["--format", "json", "sum", "add", "--gens", "3,5", "--x", "{0,3}", "--y", "{0,5}"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], "1");
    assert_eq!(v["literal"], "{0,3,5,8}");
}

#[test]
fn search_json_lists_permutations() {
    let o = powmon(&["--format", "json", "aut", "search", "--gens", "2,3", "--window", "3", "--strategy", "brute"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["strategy"], "brute");
    assert_eq!(v["complete"], true);
    assert_eq!(v["automorphisms"][0], serde_json::json!([0, 1, 2, 3]));
}

#[test]
fn enumerate_example() {
    let o = powmon(&["lemma", "enumerate", "--a", "{0,1}", "--b", "{0,1,2,3}"]);
    assert_eq!(stdout(&o), "{0,1,2}\n{0,2}\nsolutions=2");
}

#[test]
fn failing_pipeline_exits_one() {
    let o = powmon(&["aut", "pipeline", "--gens", "1", "--window", "2", "--perm", "0,1,3,2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("homomorphism FAIL"));
    let o = powmon(&["aut", "pipeline", "--gens", "1", "--window", "2", "--perm", "0,1,2,3"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(powmon(&["nsgp", "frobenius", "--gens", "4,6"]).status.code(), Some(2));
    assert_eq!(powmon(&["set", "canon", "--gens", "3,5", "--set", "{1}"]).status.code(), Some(2));
    assert_eq!(powmon(&["nsgp", "frobenius", "--bogus"]).status.code(), Some(2));
    assert_eq!(
        powmon(&["aut", "search", "--window", "2", "--strategy", "nope"]).status.code(),
        Some(2)
    );
}

#[test]
fn caps_exit_three() {
    assert_eq!(powmon(&["aut", "build", "--window", "40"]).status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_powmon"))
        .args(["lemma", "enumerate", "--a", "{0}", "--b", "{0,1,2,3,4,5,6,7,8,9}"])
        .env("POWMON_SUBSET_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "json", "aut", "search", "--gens", "1", "--window", "4", "--strategy", "refine-par"];
    assert_eq!(powmon(&args).stdout, powmon(&args).stdout);
}

#[test]
fn verify_subset() {
    let o = powmon(&["verify", "--only", "1,2,9"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.contains(" PASS ")).count(), 3);
    assert!(text.ends_with("3 of 3 criteria passed"));
}
