use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use reslat_core::{find_isomorphism, fixture, load_algebra, AlgebraFile};
use serde_json::Value;
use std::sync::Arc;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn reslat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_reslat")).args(args).env_remove("RESLAT_SIZE_CAP").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn verify_passes_on_good_files() {
    for f in ["g6.json", "chain2.json", "godel3xgodel3.json"] {
        let o = reslat(&["verify", path_str(&data(f))]);
        assert_eq!(o.status.code(), Some(0), "{f}: {}", stdout(&o));
        assert!(stdout(&o).starts_with("pass:"));
    }
}

#[test]
fn verify_lists_residuation_witnesses() {
    let o = reslat(&["verify", path_str(&data("g6_broken.json"))]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("residuation"));
    assert!(out.contains("(b, a, b)"), "{out}");

    let o = reslat(&["verify", "--json", path_str(&data("g6_broken.json"))]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], false);
    assert_eq!(v["violations"].as_array().unwrap().len(), 3);
}

#[test]
fn other_verbs_refuse_unverified_input() {
    let o = reslat(&["report", path_str(&data("g6_broken.json"))]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("not a residuated lattice"));
}

#[test]
fn report_on_g6() {
    let o = reslat(&["report", path_str(&data("g6.json"))]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("Max (2): {a,b,1}, {a,c,d,1}"), "{out}");
    assert!(out.contains("Rad: {a,1}"));
    assert!(out.contains("B: {0,1}"));
    assert!(out.contains("lifting: no (witness b/Rad)"));
    assert!(out.contains("note [radical-dense-without-lifting]"));
}

#[test]
fn report_json_is_deterministic() {
    let file = data("godel3xgodel3.json");
    let args = ["report", "--json", path_str(&file)];
    let (a, b) = (reslat(&args), reslat(&args));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["max"].as_array().unwrap().len(), 2);
    assert_eq!(v["lifting"]["holds"], true);
}

#[test]
fn report_on_chain2_is_local_with_lifting() {
    let o = reslat(&["report", "--json", path_str(&data("chain2.json"))]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["classification"]["local"], true);
    assert_eq!(v["lifting"]["holds"], true);
    let notes = v["classification"]["notes"].as_array().unwrap();
    assert!(notes.iter().any(|n| n["code"] == "perfectness-forms-differ"));
}

#[test]
fn quotient_by_radical_has_four_classes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("q.json");
    let o = reslat(&["quotient", path_str(&data("g6.json")), "--filter", "a,1", "--out", path_str(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let q = load_algebra(&out).unwrap();
    assert_eq!(q.labels(), ["0", "1", "b", "c"]);
    let o = reslat(&["verify", path_str(&out)]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn quotient_by_maximal_filter_is_simple() {
    let o = reslat(&["quotient", path_str(&data("g6.json")), "--filter", "a,b,1"]);
    assert_eq!(o.status.code(), Some(0));
    let file = AlgebraFile::parse(&stdout(&o)).unwrap();
    assert_eq!(file.elements.len(), 2);
}

#[test]
fn quotient_by_one_keeps_the_algebra() {
    let o = reslat(&["quotient", path_str(&data("g6.json")), "--filter", "1"]);
    let q = Arc::new(AlgebraFile::parse(&stdout(&o)).unwrap().to_algebra().unwrap());
    let g = Arc::new(fixture("g6").unwrap());
    assert_eq!(q.labels(), g.labels());
    assert!(find_isomorphism(&q, &g).unwrap().is_some());
}

#[test]
fn quotient_rejects_non_filter() {
    let o = reslat(&["quotient", path_str(&data("g6.json")), "--filter", "b,1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("not a filter"), "{}", stderr(&o));
    let o = reslat(&["quotient", path_str(&data("g6.json")), "--filter", "z"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn emitted_files_reemit_byte_identically() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("a.json");
    let o = reslat(&["quotient", path_str(&data("g6.json")), "--filter", "a,1", "--out", path_str(&first)]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&first).unwrap();
    assert_eq!(AlgebraFile::parse(&text).unwrap().to_json_string(), text);

    let o = reslat(&["product", path_str(&data("chain2.json")), path_str(&data("chain2.json"))]);
    let text = stdout(&o);
    assert_eq!(AlgebraFile::parse(&text).unwrap().to_json_string(), text);
}

#[test]
fn product_respects_size_cap() {
    let g6 = data("g6.json");
    let o = reslat(&["product", path_str(&g6), path_str(&g6)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(AlgebraFile::parse(&stdout(&o)).unwrap().elements.len(), 36);

    let o = Command::new(env!("CARGO_BIN_EXE_reslat"))
        .args(["product", path_str(&g6), path_str(&g6)])
        .env("RESLAT_SIZE_CAP", "20")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("size cap"));
}

#[test]
fn decompose_godel_square() {
    let dir = tempfile::tempdir().unwrap();
    let o = reslat(&["decompose", "--json", path_str(&data("godel3xgodel3.json")), "--out", path_str(dir.path())]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let factors = v["factors"].as_array().unwrap();
    assert_eq!(factors.len(), 2);
    assert_eq!(v["iso"].as_array().unwrap().len(), 9);
    let godel3 = Arc::new(fixture("godel3").unwrap());
    for f in factors {
        assert_eq!(f["local"], true);
        let alg = Arc::new(load_algebra(f["file"].as_str().unwrap()).unwrap());
        assert!(find_isomorphism(&alg, &godel3).unwrap().is_some());
    }
}

#[test]
fn decompose_refuses_g6() {
    let o = reslat(&["decompose", path_str(&data("g6.json"))]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("no lifting; unliftable idempotent b/Rad"), "{}", stderr(&o));
}

#[test]
fn check_laws_on_g6() {
    let o = reslat(&["check-laws", path_str(&data("g6.json"))]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("residuated-identities: 13/13 laws pass"));
    let o = reslat(&["check-laws", "--json", path_str(&data("g6.json"))]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn enumerate_writes_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let o = reslat(&["enumerate", "--order", "4", "--json", "--out", path_str(dir.path())]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["counts"]["total"], 7);
    let index: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("index.json")).unwrap()).unwrap();
    let entries = index["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 7);
    for e in entries {
        let file = dir.path().join(e["file"].as_str().unwrap());
        let text = fs::read_to_string(&file).unwrap();
        assert_eq!(AlgebraFile::parse(&text).unwrap().to_json_string(), text);
    }
}

#[test]
fn enumerate_order_above_cap_is_usage_error() {
    let o = reslat(&["enumerate", "--order", "6"]);
    assert_eq!(o.status.code(), Some(2));
    let o = reslat(&["enumerate", "--order", "7", "--cap", "7"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn parse_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{\n  \"name\": \"x\",\n  \"elements\": [\"0\"\n}").unwrap();
    let o = reslat(&["verify", path_str(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line"), "{}", stderr(&o));

    let unknown = dir.path().join("unknown.json");
    let text = fs::read_to_string(data("chain2.json"))
        .unwrap()
        .replace("[\"0\", \"0\"], [\"0\", \"1\"]", "[\"0\", \"0\"], [\"0\", \"x\"]");
    fs::write(&unknown, text).unwrap();
    let o = reslat(&["verify", path_str(&unknown)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("\"x\""), "{}", stderr(&o));

    assert_eq!(reslat(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(reslat(&["verify", "/nonexistent/file.json"]).status.code(), Some(2));
}
