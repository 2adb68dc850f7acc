//! CLI contract tests: exit codes, JSON determinism, and the corpus
//! file interface.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tameconf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

/// JSON output with the timing field removed.
fn stable_json(out: &Output) -> serde_json::Value {
    let mut v: serde_json::Value = serde_json::from_str(&stdout(out)).expect("valid json");
    v.as_object_mut().unwrap().remove("timing_ms");
    v
}

#[test]
fn exit_codes_cover_the_contract() {
    // 0: mathematical check passed
    assert_eq!(run(&["qr", "check", "--matrix", "0,1;1,0"]).status.code(), Some(0));
    // 1: definite negative
    assert_eq!(
        run(&["qr", "check", "--matrix", "0,-1,-1;-1,0,-1;1,1,0"]).status.code(),
        Some(1)
    );
    // 2: exhausted search
    assert_eq!(
        run(&["qr", "find", "--matrix", "0,-1,-1;-1,0,-1;1,1,0", "--bound", "200"])
            .status
            .code(),
        Some(2)
    );
    // 3: usage errors (unknown subcommand, bad matrix, unknown group)
    assert_eq!(run(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(run(&["qr", "check", "--matrix", "0,2;1,0"]).status.code(), Some(3));
    assert_eq!(run(&["group", "rank", "--group", "Banana"]).status.code(), Some(3));
}

#[test]
fn json_output_is_deterministic() {
    let args = [
        "abelian",
        "realize-matrix",
        "--n",
        "3",
        "--matrix",
        "0,1;2,0",
        "--bound",
        "1000000",
        "--json",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stable_json(&a), stable_json(&b));
    // the JSON report carries the verified certificate
    let doc = stable_json(&a);
    assert_eq!(doc["outcome"], "pass");
    assert!(doc["detail"]["certificate"]["primes"].is_array());
}

#[test]
fn qr_check_reports_reason_in_json() {
    let out = run(&["qr", "check", "--matrix", "0,-1,-1;-1,0,-1;1,1,0", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let doc = stable_json(&out);
    assert_eq!(doc["outcome"], "negative");
    assert_eq!(doc["detail"]["is_qr"], false);
    assert_eq!(doc["detail"]["reason"], "diagonal of S^2 = (0,0,-2)");
    assert_eq!(doc["detail"]["diagonal"], serde_json::json!([0, 0, -2]));
}

#[test]
fn verify_corpus_passes_and_threads_do_not_change_output() {
    let one = run(&["verify", "corpus", "--threads", "1", "--json"]);
    assert_eq!(one.status.code(), Some(0), "bundled corpus must verify");
    let four = run(&["verify", "corpus", "--threads", "4", "--json"]);
    assert_eq!(four.status.code(), Some(0));
    assert_eq!(stable_json(&one), stable_json(&four));
    let doc = stable_json(&one);
    assert_eq!(doc["detail"]["total"], 45);
    assert_eq!(doc["detail"]["passed"], 41);
    assert_eq!(doc["detail"]["unknown"], 4);
}

#[test]
fn verify_entry_exit_codes() {
    assert_eq!(run(&["verify", "entry", "--id", "s4-1"]).status.code(), Some(0));
    // unknown rows exit 2
    assert_eq!(
        run(&["verify", "entry", "--id", "psl27-8"]).status.code(),
        Some(2)
    );
    // missing id is a usage error
    assert_eq!(
        run(&["verify", "entry", "--id", "nope-1"]).status.code(),
        Some(3)
    );
}

#[test]
fn external_corpus_files_load_and_fail_loudly() {
    let dir = std::env::temp_dir().join(format!("tameconf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    // corrupted copy: a realizable row pointing at the wrong prime
    let mut corpus = tameconf::corpus::bundled_corpus();
    let entry = corpus
        .entries
        .iter_mut()
        .find(|e| e.id == "s4-1")
        .unwrap();
    entry.realization.as_mut().unwrap().primes[0].p = 281;
    let path = dir.join("corrupt.json");
    std::fs::write(&path, serde_json::to_string_pretty(&corpus).unwrap()).unwrap();
    let out = run(&["verify", "entry", "--id", "s4-1", "--corpus", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1), "corrupted row must fail");

    // schema violations are usage errors with a locator
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\"schema\": \"other/1\", \"entries\": []}").unwrap();
    let out = run(&["verify", "corpus", "--corpus", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn group_and_census_commands() {
    let out = run(&["group", "enumerate", "--group", "Q8", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stable_json(&out)["detail"]["count"], 3);

    let out = run(&["qr", "census", "--s", "2", "--json"]);
    let doc = stable_json(&out);
    assert_eq!(doc["detail"]["sign_classes"], 3);
    assert_eq!(doc["detail"]["qr_classes"], 3);

    // obstruction screen: quaternion non-split is a definite negative
    let out = run(&[
        "group",
        "obstruction",
        "--group",
        "Q8",
        "--t",
        "i",
        "--z",
        "i,j",
        "--t",
        "j",
        "--z",
        "j",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn reciprocity_command() {
    let out = run(&["abelian", "reciprocity", "--n", "3", "--p", "7", "--l", "2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stable_json(&out)["detail"]["holds"], true);
    // invalid instance: l = p
    let out = run(&["abelian", "reciprocity", "--n", "3", "--p", "7", "--l", "7"]);
    assert_eq!(out.status.code(), Some(3));
}
