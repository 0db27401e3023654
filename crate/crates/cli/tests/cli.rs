use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn lukstar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lukstar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.push("--json");
    let o = lukstar(&all);
    let v = serde_json::from_str(&stdout(&o)).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)));
    (v, o.status.code().unwrap())
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

#[test]
fn classify_exact_json() {
    let o = lukstar(&["classify", "--n", "17", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        r#"{"n":17,"prime":true,"in_pi":false,"term_equivalent":false,"fermat":true}"#
    );
}

#[test]
fn classify_below() {
    let o = lukstar(&["classify", "--below", "30"]);
    assert_eq!(stdout(&o).trim(), "3, 5, 7, 11, 13, 19, 23, 29");
    let (v, _) = json(&["classify", "--below", "200"]);
    assert_eq!(v["pi"].as_array().unwrap().len(), 31);
}

#[test]
fn synth_delta_prints_term_and_row() {
    let o = lukstar(&["synth-delta", "--n", "11", "--a", "8"]);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("+*^2+*"));
    assert!(out.contains("0/11 0/11 0/11 0/11 0/11 0/11 0/11 0/11 11/11 11/11 11/11 11/11"));
    let (v, code) = json(&["synth-delta", "--n", "11", "--a", "9"]);
    assert_eq!(code, 0);
    assert_eq!(v["term"], "+^2*^2");
    assert_eq!(v["values"][9], "11/11");
    assert_eq!(v["values"][8], "0/11");
}

#[test]
fn text_and_json_agree() {
    let text = stdout(&lukstar(&["table", "--n", "11", "--term", "*^2"]));
    let (v, _) = json(&["table", "--n", "11", "--term", "*^2"]);
    let row: Vec<&str> = text
        .lines()
        .nth(1)
        .unwrap()
        .split_whitespace()
        .skip(1)
        .collect();
    let from_json: Vec<&str> = v["rows"][0]["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap())
        .collect();
    assert_eq!(row, from_json);
    assert_eq!(from_json[10], "7/11");
}

#[test]
fn skfix() {
    assert_eq!(stdout(&lukstar(&["skfix", "**~"])).trim(), "4/5");
    assert_eq!(stdout(&lukstar(&["skfix", "[★, ★, ★, ∼]"])).trim(), "8/9");
    let (v, _) = json(&["skfix", "**~**~"]);
    assert_eq!(v["fixed_point"], "4/5");
    assert_eq!(lukstar(&["skfix", "~~"]).status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(lukstar(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(lukstar(&["table"]).status.code(), Some(2));
    assert_eq!(
        lukstar(&["table", "--n", "3", "--bogus"]).status.code(),
        Some(2)
    );
    assert_eq!(
        lukstar(&["valid", "--n", "3", "--i", "3", "p0 | ~p0"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        lukstar(&["valid", "--n", "3", "--i", "2", "p0 | ~p0"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        lukstar(&["valid", "--n", "3", "--i", "2", "p0 |"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(lukstar(&["synth-imp", "--n", "9"]).status.code(), Some(1));
    assert_eq!(lukstar(&["synth-imp", "--n", "5"]).status.code(), Some(0));
}

#[test]
fn logic_commands() {
    let (v, code) = json(&["valid", "--n", "3", "--i", "3", "p0 | ~p0"]);
    assert_eq!(code, 1);
    assert_eq!(v["countermodel"]["values"][0], "1/3");
    let (v, code) = json(&[
        "conseq",
        "--n",
        "3",
        "--i",
        "2",
        "--premise",
        "p0",
        "p0 | p1",
    ]);
    assert_eq!((v["follows"].as_bool(), code), (Some(true), 0));
    let (v, code) = json(&["check-axioms", "--n", "3", "--i", "1"]);
    assert_eq!(code, 1);
    assert_eq!(v[0]["failures"][0]["item"], "Ax1");
    let (v, code) = json(&["check-equations", "--n", "7"]);
    assert_eq!((v["ok"].as_bool(), code), (Some(true), 0));
}

#[test]
fn subalgebra_commands() {
    let (v, _) = json(&["subalgebras", "--n", "9"]);
    let subs = v.as_array().unwrap();
    assert_eq!(subs.len(), 4);
    assert_eq!(
        subs[2]["elems"],
        serde_json::json!([0, 1, 2, 4, 5, 7, 8, 9])
    );
    let (v, _) = json(&["strictly-simple", "--n", "7"]);
    assert_eq!(v["strictly_simple"], true);
    let (v, _) = json(&["strictly-simple", "--n", "9"]);
    assert_eq!(v["strictly_simple"], false);
}

#[test]
fn igstar_commands() {
    let periodic = fixture("periodic.json");
    let shared = fixture("shared.json");
    let (v, code) = json(&["igstar", "validate", &periodic]);
    assert_eq!((v["ok"].as_bool(), code), (Some(true), 0));
    let (v, code) = json(&["igstar", "representable", &periodic]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "not_representable");
    assert_eq!(v["witness"]["condition"], "periodic_skeleton");
    let (v, _) = json(&["igstar", "representable", &shared]);
    assert_eq!(v["witness"]["condition"], "shared_skeleton");
    assert_eq!(
        v["witness"]["skeleton"],
        serde_json::json!(["STAR", "STAR", "INV", "STAR", "INV"])
    );
    let (v, code) = json(&["igstar", "r-equations", &shared]);
    assert_eq!(code, 1);
    assert!(v["failures"]
        .as_array()
        .unwrap()
        .iter()
        .any(|f| f["item"] == "R2n"));
    let (v, _) = json(&["igstar", "representable", &fixture("eight_ninths.json")]);
    assert_eq!(v["embedding"]["k"], 9);
    assert_eq!(
        v["embedding"]["image"],
        serde_json::json!([0, 1, 2, 4, 5, 7, 8, 9])
    );
    assert_eq!(
        stdout(&lukstar(&["igstar", "skeleton", &periodic, "--elem", "4"])).trim(),
        "[*, ~, *, ~]"
    );
    let (v, _) = json(&["igstar", "partition", &shared]);
    assert_eq!(v["blocks"].as_array().unwrap().len(), 2);
    let invalid = fixture("invalid.json");
    assert_eq!(
        lukstar(&["igstar", "validate", &invalid]).status.code(),
        Some(1)
    );
    assert_eq!(
        lukstar(&["igstar", "representable", &invalid])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        lukstar(&["igstar", "validate", "/no/such/file.json"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn reproduce_single_criterion() {
    let (v, code) = json(&["reproduce", "--id", "9"]);
    assert_eq!(code, 0);
    assert_eq!(v[0]["passed"], true);
    let o = lukstar(&["reproduce", "--all"]);
    let out = stdout(&o);
    assert_eq!(
        out.lines()
            .filter(|l| l.starts_with("PASS") || l.starts_with("FAIL"))
            .count(),
        12
    );
    assert!(out.contains("9/12 criteria passed"));
    assert_eq!(o.status.code(), Some(1));
}
