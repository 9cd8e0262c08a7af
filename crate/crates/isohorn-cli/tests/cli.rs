use std::process::{Command, Output};

fn isohorn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isohorn"))
        .args(args)
        .env_remove("ISOHORN_SEED")
        .env_remove("ISOHORN_PRIME")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_tail(o: &Output) -> serde_json::Value {
    let s = stdout(o);
    let start = s.find("\n{").map(|k| k + 1).unwrap_or(0);
    serde_json::from_str(&s[start..]).expect("terminal JSON document")
}

#[test]
fn grain_passes() {
    let o = isohorn(&["grain", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict: PASS"));
}

#[test]
fn lagrangian_square() {
    let o = isohorn(&["ig-product", "--n", "2", "--r", "2", "--indices", "[2,4] [2,4]"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json_tail(&o);
    assert_eq!(doc["result"]["product"], serde_json::json!({ "[1,3]": "2" }));
}

#[test]
fn deformed_product_vanishes() {
    let o = isohorn(&["deformed", "--n", "2", "--r", "1", "--indices", "[3] [3] [3]"]);
    assert_eq!(o.status.code(), Some(1));
    let doc = json_tail(&o);
    assert_eq!(doc["result"]["deformed_nonvanishing"], false);
    assert_eq!(doc["result"]["ordinary_point_coefficient"], "1");
    let o = isohorn(&["horn-c", "--n", "2", "--r", "1", "--indices", "[3] [3] [3]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_tail(&o)["result"]["beta1"], false);
}

#[test]
fn bad_input_exits_two() {
    for args in [
        vec!["no-such-command"],
        vec!["ig-product", "--n", "2", "--r", "2", "--indices", "[2,3]"],
        vec!["ig-product", "--n", "2", "--r", "2", "--indices", "[2,4"],
        vec!["lrcoef", "--lambda", "1,2", "--mu", "1", "--nu", "2"],
        vec!["invariant-dim", "--group", "Sp5", "--weights", "(1,0)"],
        vec!["eigencone-gen", "--group", "Sp10", "--s", "3"],
        vec!["grain", "--n", "9"],
        vec!["grain"],
    ] {
        let o = isohorn(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["properness", "--form", "symplectic", "--ambient", "4", "--indices", "[2,4] [2,4] [3,4]", "--seed", "7"];
    let a = isohorn(&args);
    let b = isohorn(&args);
    assert_eq!(a.stdout, b.stdout);
    let args = ["compare-cones", "--type", "b", "--n", "2", "--samples", "40"];
    assert_eq!(isohorn(&args).stdout, isohorn(&args).stdout);
}

#[test]
fn environment_overrides_seed_and_prime() {
    let o = Command::new(env!("CARGO_BIN_EXE_isohorn"))
        .args(["key-check", "--n", "2", "--mu", "1,0 1,0 1,1"])
        .env("ISOHORN_SEED", "42")
        .env("ISOHORN_PRIME", "1000003")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let doc = json_tail(&o);
    assert_eq!(doc["provenance"]["seed"], 42);
    assert_eq!(doc["provenance"]["prime"], 1000003);
    let o = Command::new(env!("CARGO_BIN_EXE_isohorn"))
        .args(["grain", "--n", "1"])
        .env("ISOHORN_PRIME", "12")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn out_file_matches_stdout() {
    let path = std::env::temp_dir().join(format!("isohorn-cli-{}.txt", std::process::id()));
    let o = isohorn(&["invariant-dim", "--group", "Sp4", "--weights", "(1,0) (1,0) (1,1)", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(written, stdout(&o));
    assert_eq!(json_tail(&o)["result"]["dimension"], "1");
}

#[test]
fn membership_and_generation() {
    let o = isohorn(&["eigencone-gen", "--group", "SU2", "--s", "3"]);
    assert_eq!(json_tail(&o)["result"]["count"], 3);
    let inside = isohorn(&["eigencone-member", "--group", "Sp4", "--h", "(2,1) (1,1) (1,0)"]);
    assert_eq!(inside.status.code(), Some(0));
    let outside = isohorn(&["eigencone-member", "--group", "Sp4", "--h", "(5,1) (1,1) (1,0)"]);
    assert_eq!(outside.status.code(), Some(1));
    assert!(json_tail(&outside)["result"]["violated"].is_object());
    let o = isohorn(&["eigencone-member", "--group", "Sp4", "--h", "(1,2) (1,1) (1,0)"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn representation_commands() {
    let o = isohorn(&["clef-check", "--group", "SL4", "--weights", "(1,1,0,0) (1,1,0,0) (0,0,0,0)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_tail(&o)["result"]["applicable"], true);
    let o = isohorn(&["walk-check", "--n", "1", "--mu", "1 1 0"]);
    assert_eq!(o.status.code(), Some(0));
    let o = isohorn(&["saturation-scan", "--group", "Sp4", "--bound", "1", "--n-max", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!json_tail(&o)["result"]["witnesses"].as_array().unwrap().is_empty());
}

#[test]
fn negative_control_fails() {
    let o = isohorn(&["properness", "--form", "even-orthogonal", "--ambient", "6", "--indices", "[3] [3]"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn single_criterion() {
    let o = isohorn(&["verify-all", "--only", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let o = isohorn(&["verify-all", "--only", "11"]);
    assert_eq!(o.status.code(), Some(2));
}
