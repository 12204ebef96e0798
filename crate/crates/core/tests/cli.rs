//! The command-line front end: outputs, JSON shapes and exit codes.

use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_fatstair"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out.trim_end().to_string()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.push("--json");
    serde_json::from_str(&ok(&full)).unwrap()
}

#[test]
fn expand_examples() {
    assert_eq!(
        ok(&["expand", "3,3,2,2,1,1/2"]),
        "1*[3,3,2,1,1] + 1*[3,2,2,2,1] + 1*[3,2,2,1,1,1]"
    );
    assert_eq!(ok(&["expand", "-/-"]), "1*[]");
    assert_eq!(ok(&["expand", "-"]), "1*[]");
    assert_eq!(ok(&["expand", "^^2,2"]), "1*[2,2,1,1]");
    assert_eq!(ok(&["expand", "^2,2"]), "1*[2,2,1,1]");
}

#[test]
fn lr_and_product() {
    assert_eq!(ok(&["lr", "2", "1", "1"]), "1");
    assert_eq!(ok(&["lr", "2", "-", "2"]), "1");
    assert_eq!(ok(&["lr", "3", "1", "1"]), "0");
    assert_eq!(ok(&["product", "1", "1"]), "1*[2] + 1*[1,1]");
    assert_eq!(json(&["lr", "2", "1", "1"]), Value::from(1));
}

#[test]
fn text_and_json_agree() {
    for shape in ["4,3,3,3,3,3,3/2,2,2,1,1", "3,2,1/1", "-"] {
        let text: fatstair::SchurExpansion = ok(&["expand", shape]).parse().unwrap();
        let value = json(&["expand", shape]);
        let terms = value.as_array().unwrap();
        assert_eq!(terms.len(), text.len());
        for (term, (p, c)) in terms.iter().zip(text.terms()) {
            let parts: Vec<usize> = serde_json::from_value(term["partition"].clone()).unwrap();
            assert_eq!(parts, p.parts());
            assert_eq!(term["coeff"], Value::from(c));
            assert_eq!(term.as_object().unwrap().len(), 2);
        }
    }
}

#[test]
fn classify_outputs() {
    let out = ok(&["classify", "3,3,2,2,1,1/2"]);
    assert!(out.starts_with("is_sum\ndecomposition: "));
    let v = json(&["classify", "4,3,3,3,3,3,3/2,2,2,1,1"]);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys.len(), 5);
    for key in ["instance", "verdict", "decomposition", "witness", "difference"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["verdict"], "is_sum");
    assert_eq!(v["decomposition"][1]["alpha"], serde_json::json!([3, 1, 3]));
    assert!(v["witness"].is_null());

    let v = json(&["classify", "2,2"]);
    assert_eq!(v["verdict"], "not_sum");
    assert_eq!(v["witness"], "1,1;2,2");
}

#[test]
fn build_s_round_trips() {
    let out = ok(&["build-s", "2,2", "--foundation", "2,1", "--k", "1"]);
    assert_eq!(out, "3,3,2,1/1,1");
    assert_eq!(ok(&["build-s", &out]), out);
    let out = ok(&["build-s", "^^2,2", "--foundation", "2,1", "--k", "1"]);
    assert_eq!(out, "3,3,3,3,2,1/2,2,1,1");
    let out = ok(&["build-s", "2,2,2/1", "--foundation", "3,2", "--inner", "1", "--k", "0"]);
    assert_eq!(out, "3,3,3,3,2/2,1,1,1");
}

#[test]
fn cut_verification() {
    let out = ok(&["verify-rowcut", "2,2,2", "2"]);
    assert!(out.ends_with("agree"));
    let out = ok(&["verify-colcut", "3,3,3", "2"]);
    assert!(out.contains("predicate: true") && out.ends_with("agree"));
    let out = ok(&["verify-colcut", "--max-size", "4"]);
    assert!(out.lines().last().unwrap().contains(" 0 failures"));
    let v = json(&["verify-rowcut", "1,2", "1"]);
    assert_eq!(v["predicate"], false);
    assert_eq!(v["classified"], false);
}

#[test]
fn positivity_commands() {
    let out = ok(&["verify-theorem5", "--theorem", "transpose", "^^2,2", "--foundation", "2", "--k", "1"]);
    assert!(out.ends_with("positive"));
    let out = ok(&["verify-theorem5", "--theorem", "rectcor", "2,2,2,2,1/1,1", "--foundation", "2,2", "--k", "1"]);
    assert!(out.contains("difference: 1*[3,3,2,2,1] + 1*[3,3,2,1,1,1] + 1*[3,2,2,2,1,1]"));
    let v = json(&["verify-theorem5", "--theorem", "sumoffat", "2,2,2,2,1/1,1", "--foundation", "2,2", "--k", "1"]);
    assert_eq!(v["verdict"], "positive");
    assert_eq!(v["difference"].as_array().unwrap().len(), 3);
}

#[test]
fn sweep_output() {
    let (code, out, _) = run(&["sweep", "--theorem", "transpose", "--max-size", "3"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines[..lines.len() - 1].iter().all(|l| l.starts_with("ok ")));
    assert!(lines.last().unwrap().starts_with("transpose: "));
    let seq = ok(&["sweep", "--theorem", "tttttt", "--max-size", "5", "--sequential"]);
    let par = ok(&["sweep", "--theorem", "tttttt", "--max-size", "5"]);
    assert_eq!(seq, par);
    let v = json(&["sweep", "--theorem", "sumofdiff", "--max-size", "4"]);
    assert_eq!(v["name"], "sumofdiff");
    assert!(v["outcomes"].as_array().unwrap().iter().all(|o| o["ok"] == true));
}

#[test]
fn exit_codes() {
    // malformed encodings
    assert_eq!(run(&["expand", "1,3"]).0, 2);
    assert_eq!(run(&["expand", "2,1/3"]).0, 2);
    assert_eq!(run(&["expand", "a,b"]).0, 2);
    assert_eq!(run(&["nope"]).0, 2);
    assert_eq!(run(&["sweep", "--theorem", "nope"]).0, 2);
    // domain errors
    let (code, _, err) = run(&["verify-rowcut", "2,2", "5"]);
    assert_eq!(code, 1);
    assert!(err.contains("out of range"));
    assert_eq!(run(&["build-s", "2,2", "--foundation", "5", "--k", "1"]).0, 1);
    assert_eq!(run(&["verify-theorem5", "--theorem", "sumoffat", "2,2", "--foundation", "1"]).0, 1);
    assert_eq!(run(&["verify-theorem5", "--theorem", "transpose", "2", "--foundation", "2,1"]).0, 1);
}
