use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn involute(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_involute"))
        .current_dir(fixtures())
        .env_remove("INVOLUTE_SEED")
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn manifest_exit_codes() {
    let text = std::fs::read_to_string(fixtures().join("commands.json")).unwrap();
    let cases: Vec<Value> = serde_json::from_str(&text).unwrap();
    let mut seen = [0usize; 3];
    for case in &cases {
        let set = case["set"].as_str().unwrap();
        let mut args: Vec<&str> = vec!["--budget", "200"];
        args.extend(case["args"].as_array().unwrap().iter().map(|a| a.as_str().unwrap()));
        let expected = match set {
            "pass" => 0,
            "violation" => 1,
            "malformed" => 2,
            other => panic!("unknown set {other}"),
        };
        seen[expected as usize] += 1;
        let o = involute(&args);
        assert_eq!(
            o.status.code(),
            Some(expected),
            "{args:?}\nstdout: {}\nstderr: {}",
            stdout(&o),
            String::from_utf8_lossy(&o.stderr)
        );
        if expected != 0 {
            assert!(!o.stderr.is_empty() || !o.stdout.is_empty(), "{args:?} gave no diagnostic");
        }
    }
    assert!(seen.iter().all(|&n| n >= 3), "{seen:?}");
}

#[test]
fn every_fixture_file_is_used() {
    let text = std::fs::read_to_string(fixtures().join("commands.json")).unwrap();
    for set in ["pass", "violation", "malformed"] {
        for entry in std::fs::read_dir(fixtures().join(set)).unwrap() {
            let name = format!("{set}/{}", entry.unwrap().file_name().to_string_lossy());
            assert!(text.contains(&format!("\"{name}\"")), "{name} is not in commands.json");
        }
    }
}

#[test]
fn word_examples() {
    assert_eq!(stdout(&involute(&["word", "involve", "a * ~b"])), "b * ~a\n");
    assert_eq!(stdout(&involute(&["word", "involve", "--mode", "non-reversing", "a * ~b"])), "~a * b\n");
    assert_eq!(stdout(&involute(&["word", "normalize", "~(a * b)"])), "~b * ~a\n");
    assert_eq!(stdout(&involute(&["word", "normalize", "1"])), "1\n");
    let eval = ["word", "eval", "a * ~b", "--target", "int-add", "--map", "a=2,b=5"];
    assert_eq!(stdout(&involute(&eval)), "-3\n");
    let mut json = vec!["--format", "json"];
    json.extend(eval);
    assert_eq!(stdout(&involute(&json)), "-3\n");
    let pairs: Value = serde_json::from_str(&stdout(&involute(&["--format", "json", "word", "involve", "a * ~b"]))).unwrap();
    assert_eq!(pairs, serde_json::json!([["+", "b"], ["-", "a"]]));
}

#[test]
fn word_parse_error_reports_position() {
    let o = involute(&["word", "normalize", "a * ~"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("at byte 5"));
}

#[test]
fn algebra_examples() {
    assert_eq!(stdout(&involute(&["alg", "mul", "pass/mat2.json", "--x", "E12", "--y", "E21"])), "E11\n");
    assert_eq!(stdout(&involute(&["alg", "involve", "pass/mat2.json", "--x", "E12"])), "E21\n");
    let x = r#"{"E11": {"re": "0", "im": "1"}, "E12": {"re": "2", "im": "0"}}"#;
    assert_eq!(stdout(&involute(&["alg", "involve", "pass/mat2.json", "--x", x])), "-i*E11 + 2*E21\n");
    let coords = r#"[{"re":"1","im":"0"},{"re":"0","im":"0"},{"re":"0","im":"0"},{"re":"1","im":"0"}]"#;
    assert_eq!(stdout(&involute(&["alg", "mul", "pass/mat2.json", "--x", coords, "--y", "E12"])), "E12\n");
    assert_eq!(stdout(&involute(&["alg", "mul", "pass/mat2.json", "--x", "E12", "--y", "E12"])), "0\n");
}

#[test]
fn gram_of_half_trace_is_half_identity() {
    let o = involute(&["gns", "gram", "pass/mat2.json", "pass/trace-half.json"]);
    assert_eq!(o.status.code(), Some(0));
    let got: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let expected: Value =
        serde_json::from_str(&std::fs::read_to_string(fixtures().join("pass/half-identity.json")).unwrap()).unwrap();
    assert_eq!(got, expected);

    let o = involute(&["gns", "state", "pass/mat2.json", "pass/half-identity.json"]);
    let back: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let trace: Value =
        serde_json::from_str(&std::fs::read_to_string(fixtures().join("pass/trace-half.json")).unwrap()).unwrap();
    assert_eq!(back, trace);
}

#[test]
fn tampered_gram_gives_a_witness() {
    let o = involute(&["gns", "state", "pass/mat2.json", "violation/tampered-gram.json"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("condition (b)") && err.contains("E12"), "{err}");

    let o = involute(&["--format", "json", "gns", "checkb", "pass/mat2.json", "violation/tampered-gram.json"]);
    assert_eq!(o.status.code(), Some(1));
    let line: Value = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    assert_eq!(line["verdict"], "fail");
    assert!(line["witness"].is_string());
}

#[test]
fn multiset_examples() {
    assert_eq!(stdout(&involute(&["mset", "nu", r#"{"scalars": "gauss", "entries": [["x", {"re": "0", "im": "1"}]]}"#])), "-i*x\n");
    let o = involute(&["--format", "json", "mset", "nu", "pass/mset-gauss.json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["entries"][0], serde_json::json!(["x", {"re": "0", "im": "-1"}]));
    assert_eq!(stdout(&involute(&["mset", "map", "pass/mset-rat.json", "--map", "x=z,y=z"])), "(7/2)*z\n");
    assert_eq!(stdout(&involute(&["mset", "mu", "pass/mset-nested.json"])), "4*x + 6*y\n");
    let o = involute(&["--format", "json", "mset", "dst", "pass/mset-rat.json", r#"{"scalars": "rat", "entries": [["u", "2"]]}"#]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["entries"], serde_json::json!([[["x", "u"], "1"], [["y", "u"], "6"]]));
}

#[test]
fn reports_are_deterministic() {
    let args = ["--format", "json", "laws", "--suite", "semiring,multiset,fmod,gns", "--budget", "300"];
    let a = involute(&args);
    let b = involute(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    let seeded = |seed: &str| {
        Command::new(env!("CARGO_BIN_EXE_involute"))
            .env("INVOLUTE_SEED", seed)
            .args(args)
            .output()
            .unwrap()
    };
    let with_flag = involute(&[&["--seed", "7"][..], &args[..]].concat());
    assert_eq!(seeded("7").stdout, with_flag.stdout);
}

#[test]
fn json_report_lines_have_the_fixed_fields() {
    let o = involute(&["--format", "json", "laws", "--suite", "words", "--instance", "z2-reversing"]);
    assert_eq!(o.status.code(), Some(0));
    for line in stdout(&o).lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["suite", "law", "instance", "verdict", "witness"]);
        assert_eq!(v["suite"], "words");
        assert_eq!(v["verdict"], "pass");
    }
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(involute(&["--help"]).status.code(), Some(0));
    assert_eq!(involute(&["--version"]).status.code(), Some(0));
    assert_eq!(involute(&[]).status.code(), Some(2));
}

#[test]
fn laws_list_names_every_suite() {
    let out = stdout(&involute(&["laws", "--list"]));
    for suite in involute_core::lawlab::SUITES {
        assert!(out.lines().any(|l| l.starts_with(&format!("{suite} "))), "{suite}");
    }
}
