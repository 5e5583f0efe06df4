use std::process::{Command, Output};

use serde_json::Value;

fn affcodes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_affcodes")).args(args).env_remove("AFFCODES_WORKERS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let o = affcodes(&all);
    (o.status.code().unwrap(), serde_json::from_str(&stdout(&o)).unwrap())
}

fn schema() -> jsonschema::JSONSchema {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/schema/run_report.schema.json")).unwrap();
    jsonschema::JSONSchema::compile(&serde_json::from_str(&text).unwrap()).unwrap()
}

#[test]
fn construct_reports_parameters() {
    let (code, v) = json(&["construct", "--family", "ext", "-p", "2", "-m", "4", "--h", "2"]);
    assert_eq!(code, 0);
    assert_eq!([&v["code"]["n"], &v["code"]["k"], &v["code"]["d"]], [16, 4, 12]);
    assert_eq!(v["generator"]["rows"].as_array().unwrap().len(), 4);

    let (_, v) = json(&["construct", "--family", "circle", "-p", "3", "-m", "2", "--s", "1"]);
    assert_eq!([&v["code"]["n"], &v["code"]["k"], &v["code"]["d"]], [10, 4, 6]);
}

#[test]
fn invalid_parameters_exit_2() {
    let o = affcodes(&["construct", "--family", "ext", "-p", "2", "-m", "2", "--h", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = affcodes(&["construct", "--family", "ext", "-p", "4", "-m", "2", "--h", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = affcodes(&["weights", "--family", "ext", "-p", "2", "-m", "4"]);
    assert_eq!(o.status.code(), Some(2));
    let o = affcodes(&["no-such-command"]);
    assert_eq!(o.status.code(), Some(2));
    // no closed form for h = 1
    let o = affcodes(&["weights", "--family", "ext", "-p", "2", "-m", "4", "--h", "1", "--method", "closed"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn resource_bound_exit_4() {
    let o = affcodes(&["weights", "--family", "circle", "-p", "5", "-m", "2", "--s", "1"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--exhaustive"));
    let o = affcodes(&["weights", "--family", "ext", "-p", "3", "-m", "5", "--h", "4"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn weights_all_methods_agree() {
    let (code, v) = json(&["weights", "--family", "circle", "-p", "3", "-m", "2", "--s", "1", "--method", "all"]);
    assert_eq!(code, 0);
    let w = v["weights"].as_array().unwrap();
    assert_eq!(w.len(), 3);
    for d in w {
        assert_eq!(d["counts"]["6"], 2400);
        assert_eq!(d["counts"]["10"], 38020320u64);
    }

    let (code, v) = json(&["weights", "--family", "ext", "-p", "2", "-m", "4", "--h", "3", "--method", "all"]);
    assert_eq!(code, 0);
    assert_eq!(v["weights"][1]["source"]["form"], "binary-h3");
    assert_eq!(v["weights"][0]["counts"]["8"], 450);

    let (code, v) = json(&["weights", "--family", "ext", "-p", "5", "-m", "2", "--h", "1", "--method", "brute"]);
    assert_eq!(code, 0);
    assert_eq!(v["code"]["d"], 20);
}

#[test]
fn designs_and_lrc_text() {
    let o = affcodes(&["designs", "--family", "circle", "-p", "3", "-m", "2", "--s", "1", "--dual", "--t", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("3-(10,4,1) verified"));

    let o = affcodes(&["designs", "--family", "circle", "-p", "3", "-m", "2", "--s", "1", "--weight", "6", "--t", "3"]);
    assert!(stdout(&o).contains("3-(10,6,5) verified"));

    // the minimum-weight supports of this code are not a 4-design: a failed claim
    let o = affcodes(&["designs", "--family", "circle", "-p", "3", "-m", "2", "--s", "1", "--t", "4"]);
    assert_eq!(o.status.code(), Some(3));

    let o = affcodes(&["lrc", "--family", "ext", "-p", "2", "-m", "4", "--h", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("code (16, 4, 12, 16; 3): d-optimal: yes, k-optimal: yes"));
    assert!(text.contains("dual (16, 12, 4, 16; 11): d-optimal: yes, k-optimal: yes"));
}

#[test]
fn reproduce_table_rows() {
    let o = affcodes(&["reproduce", "--suite", "table1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("14/14 parameter rows match"));
}

#[test]
fn probe_and_rootcount() {
    let (code, v) = json(&["probe-conjecture", "-m", "4", "--h", "2"]);
    assert_eq!(code, 0);
    assert!(v["checks"][0]["computed"].as_str().unwrap().starts_with("3-(16,12,55) holds"));

    let o = affcodes(&["rootcount", "--replay"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("[PASS]").count(), 5);

    // x^4 + x over GF(16) vanishes on GF(4)
    let o = affcodes(&["rootcount", "-p", "2", "-m", "4", "--coeffs", "0,-,0"]);
    assert!(stdout(&o).contains("4 roots in GF(2^4)"));
}

#[test]
fn json_output_matches_schema() {
    let s = schema();
    let runs: &[&[&str]] = &[
        &["construct", "--family", "punctured", "-p", "2", "-m", "4", "--h", "2"],
        &["weights", "--family", "ext", "-p", "3", "-m", "3", "--h", "2", "--method", "all", "--timing"],
        &["designs", "--family", "ext", "-p", "2", "-m", "4", "--h", "2", "--dual", "--t", "3", "--blocks"],
        &["lrc", "--family", "ext", "-p", "3", "-m", "3", "--h", "2"],
        &["reproduce", "--suite", "conjecture"],
        &["rootcount", "--replay"],
    ];
    for args in runs {
        let (_, v) = json(args);
        let msgs: Vec<String> = match s.validate(&v) {
            Ok(()) => Vec::new(),
            Err(errors) => errors.map(|e| e.to_string()).collect(),
        };
        assert!(msgs.is_empty(), "{args:?}: {msgs:?}");
    }
}

#[test]
fn csv_and_determinism() {
    let args = ["--format", "csv", "weights", "--family", "ext", "-p", "2", "-m", "4", "--h", "2"];
    let a = stdout(&affcodes(&args));
    assert!(a.starts_with("record,key,value,status\n"));
    assert!(a.contains("weight/brute,12,2100,"));
    assert_eq!(a, stdout(&affcodes(&args)));

    // worker count changes nothing but the command echo
    let base = ["weights", "--family", "circle", "-p", "3", "-m", "2", "--s", "1"];
    let (_, one) = json(&base);
    let mut four = vec!["--workers", "4"];
    four.extend_from_slice(&base);
    let (_, four) = json(&four);
    assert_eq!(one["weights"], four["weights"]);

    let env = Command::new(env!("CARGO_BIN_EXE_affcodes"))
        .args(["--format", "json"])
        .args(base)
        .env("AFFCODES_WORKERS", "3")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&env.stdout).unwrap();
    assert_eq!(one["weights"], v["weights"]);
}

#[test]
fn seed_changes_sampling_not_verdicts() {
    for seed in ["0", "17"] {
        let o = affcodes(&["--seed", seed, "reproduce", "--suite", "properties"]);
        assert_eq!(o.status.code(), Some(0));
    }
}
