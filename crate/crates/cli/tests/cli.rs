use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .display()
        .to_string()
}

fn z2fixed(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_z2fixed"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = z2fixed(&full);
    let v = serde_json::from_slice(&o.stdout)
        .unwrap_or_else(|e| panic!("{args:?}: {e}: {}", stdout(&o)));
    (o.status.code().unwrap(), v)
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn bound_prints_the_value() {
    let o = z2fixed(&["bound", "--n", "4", "--k", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "3\n");
}

#[test]
fn seven_classes_are_printed() {
    let o = z2fixed(&["classes", "three", "--k", "3", "--ell", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.ends_with("7 classes\n"), "{text}");
    assert_eq!(text.lines().count(), 8);
}

#[test]
fn skeletons_write_dot_files() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("dot");
    let o = z2fixed(&[
        "skeletons",
        &fixture("rp3_sigma_n4.json"),
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("3 skeletons"));
    for i in 1..=3 {
        let text = std::fs::read_to_string(dot.join(format!("skeleton-{i}.dot"))).unwrap();
        assert!(text.starts_with(&format!("graph \"skeleton-{i}\" {{")));
        assert_eq!(text.matches(" -- ").count(), 8, "4 vertices of degree 4");
    }
    assert!(!dot.join("skeleton-4.dot").exists());
}

#[test]
fn colored_dedupe_is_finer() {
    let (_, under) = json(&["skeletons", &fixture("rp3_sigma_n5.json"), "--dedupe"]);
    let (_, colored) = json(&[
        "skeletons",
        &fixture("rp3_sigma_n5.json"),
        "--dedupe",
        "--iso",
        "colored",
    ]);
    let n = |v: &Value| v["details"]["classes"].as_array().unwrap().len();
    assert_eq!(n(&under), 2);
    assert!(n(&colored) >= n(&under));
}

#[test]
fn tdks_witness_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let two = write(
        dir.path(),
        "two.json",
        r#"{"k":2,"n":2,"vertices":[{"label":"a","chars":["10","01"]},{"label":"b","chars":["10","11"]}]}"#,
    );
    let (code, v) = json(&["tdks", two.to_str().unwrap(), "--f", "1"]);
    assert_eq!(code, 1);
    assert_eq!(v["verdict"], "fail");
    let w = &v["details"]["witness"];
    assert!(
        w["form"].is_string() && w["stage"].as_u64().unwrap() >= 1,
        "{v}"
    );

    let (code, v) = json(&["tdks", &fixture("rp2.json"), "--batch", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["details"]["failure"], Value::Null);
}

#[test]
fn malformed_input_exits_two_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let zero = write(
        dir.path(),
        "zero.json",
        r#"{"k":2,"n":2,"vertices":[{"label":"a","chars":["00","10"]}]}"#,
    );
    let o = z2fixed(&["validate", zero.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("vertices[0].chars[0]"));
    assert!(o.stdout.is_empty());

    let broken = write(dir.path(), "broken.json", "{\"k\": 2,\n \"n\": }");
    let (code, v) = json(&["prime", broken.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(v["verdict"], "error");
    assert!(v["error"].as_str().unwrap().contains("line 2"), "{v}");
}

#[test]
fn unknown_flag_prints_usage() {
    let o = z2fixed(&["bound", "--n", "4", "--k", "3", "--frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage:"));
    assert!(z2fixed(&["--help"]).status.success());
}

#[test]
fn invalid_skeleton_fails_validation() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(fixture("rp2_skeleton.json")).unwrap();
    let mut doc: Value = serde_json::from_str(&text).unwrap();
    doc["edges"].as_array_mut().unwrap().pop();
    let path = write(dir.path(), "g.json", &doc.to_string());
    let (code, v) = json(&["validate", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(v["details"]["kind"], "skeleton");
    assert!(!v["details"]["issues"].as_array().unwrap().is_empty());
    assert_eq!(json(&["validate", &fixture("rp2_skeleton.json")]).0, 0);
}

#[test]
fn generated_files_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("four.json");
    let o = z2fixed(&[
        "gen",
        "four",
        "--k",
        "3",
        "--ell",
        "1",
        "--v",
        "3",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), std::fs::read_to_string(&out).unwrap());
    let (code, v) = json(&["recognize", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["details"]["kind"], "four");
    assert_eq!(v["details"]["v"], serde_json::json!([3]));

    let again = dir.path().join("again.json");
    z2fixed(&[
        "prime",
        out.to_str().unwrap(),
        "--out",
        again.to_str().unwrap(),
    ]);
    let sets = |p: &Path| {
        let doc: Value = serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap();
        let mut v: Vec<String> = doc["vertices"]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x["chars"].to_string())
            .collect();
        v.sort();
        v
    };
    assert_eq!(
        sets(&out),
        sets(&again),
        "distinct multisets survive cancellation"
    );
}

#[test]
fn operations_chain() {
    let dir = tempfile::tempdir().unwrap();
    let o = dir.path().join("omega.json");
    z2fixed(&[
        "op",
        "omega",
        &fixture("rp2.json"),
        "--out",
        o.to_str().unwrap(),
    ]);
    let (_, rec) = json(&["recognize", o.to_str().unwrap()]);
    assert_eq!(rec["details"]["kind"], "three");

    let (code, sq) = json(&["op", "delta", "--i", "2", &fixture("rp2.json")]);
    assert_eq!(code, 0);
    assert_eq!(sq["details"]["vertices"].as_array().unwrap().len(), 9);
    let (_, diag) = json(&[
        "op",
        "delta",
        "--i",
        "3",
        "--diagonal",
        &fixture("rp2.json"),
    ]);
    assert_eq!(diag["verdict"], "error");

    let (_, swapped) = json(&["op", "sigma", "--matrix", "01,10", &fixture("rp2.json")]);
    assert_eq!(swapped["details"]["k"], 2);
    let (code, b) = json(&["bounding", &fixture("rp2.json")]);
    assert_eq!((code, &b["details"]["bounding"]), (0, &Value::Bool(false)));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["skeletons", "X", "--dedupe"],
        vec!["tdks", "X", "--batch", "3"],
        vec!["--json", "prime", "X"],
    ] {
        let args: Vec<String> = args
            .iter()
            .map(|a| {
                if *a == "X" {
                    fixture("rp3_sigma_n5.json")
                } else {
                    a.to_string()
                }
            })
            .collect();
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(z2fixed(&args).stdout, z2fixed(&args).stdout);
    }
}

#[test]
fn minfix_and_lattice() {
    let (_, v) = json(&["minfix", "--n", "6", "--k", "2"]);
    assert_eq!(v["details"]["value"], 9);
    let (_, v) = json(&["minfix", "--n", "9", "--k", "5"]);
    assert_eq!(v["details"]["value"], Value::Null);
    assert!(v["details"]["lower_bound"].as_u64().unwrap() >= 3);
    let o = z2fixed(&["lattice", "--k", "4", "--ell", "1", "--t", "1"]);
    assert_eq!(stdout(&o), "(0,1)\n(1,0)\n2 vectors\n");
    let (_, v) = json(&["count-cf", "--m", "7"]);
    assert_eq!(v["details"]["count"], 27);
}

#[test]
fn in_process_run_matches_binary() {
    let f = fixture("rp3.json");
    let out = z2fixed_cli::run(["z2fixed", "recognize", f.as_str()]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, stdout(&z2fixed(&["recognize", &f])));
}
