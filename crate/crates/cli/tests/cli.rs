use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn linemap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linemap")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn report(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("report is JSON")
}

fn write_example(dir: &Path, name: &str, extra: &[&str]) -> String {
    let path = dir.join(format!("{name}.json"));
    let p = path.to_str().unwrap().to_string();
    let mut args = vec!["example", "--name", name, "--out", &p];
    args.extend_from_slice(extra);
    assert_eq!(code(&linemap(&args)), 0);
    p
}

#[test]
fn verify_family_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let map = write_example(dir.path(), "r3", &[]);
    let ok = linemap(&["verify-family", "--map", &map, "--dirs", "e1,e2,e3,1,1,-1", "--field", "p:5", "--mode", "onto"]);
    assert_eq!(code(&ok), 0);
    assert_eq!(report(&ok)["ok"], true);

    let bent = linemap(&["verify-family", "--map", &map, "--dirs", "1,0,1", "--field", "p:5"]);
    assert_eq!(code(&bent), 1);
    let r = report(&bent);
    assert_eq!(r["ok"], false);
    assert_eq!(r["violations"][0]["reason"], "not-a-line");

    let symbolic = linemap(&["verify-family", "--map", &map, "--dirs", "e1;e2;1,0,1"]);
    assert_eq!(code(&symbolic), 1);
    assert_eq!(report(&symbolic)["failures"][0]["degree"], 2);
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let map = write_example(dir.path(), "r3", &[]);
    assert_eq!(code(&linemap(&["verify-family", "--map", &map, "--dirs", "1,1"])), 2);
    assert_eq!(code(&linemap(&["verify-family", "--map", &map, "--dirs", "e1", "--field", "p:4"])), 2);
    assert_eq!(code(&linemap(&["verify-family", "--map", &map, "--dirs", "e1", "--mode", "sideways"])), 2);
    assert_eq!(code(&linemap(&["verify-family", "--map", "/nonexistent.json", "--dirs", "e1"])), 2);
    let junk = dir.path().join("junk.json");
    std::fs::write(&junk, "{\"n\": 3}").unwrap();
    assert_eq!(code(&linemap(&["verify-family", "--map", junk.to_str().unwrap(), "--dirs", "e1"])), 2);
    assert_eq!(code(&linemap(&["no-such-command"])), 2);
}

#[test]
fn resource_guard_exit_3() {
    let o = linemap(&["exhaust", "--p", "3", "--n", "2", "--dirs", "e1,e2", "--budget", "1000"]);
    assert_eq!(code(&o), 3);
    let dir = tempfile::tempdir().unwrap();
    let map = write_example(dir.path(), "sharp-r4", &[]);
    let o = linemap(&["verify-family", "--map", &map, "--dirs", "e1", "--field", "p:5", "--budget", "100"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn constraints_emit_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c3.json");
    let o = linemap(&["constraints", "--n", "3", "--emit", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let rows = r["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    let ones = |row: &Value| -> Vec<usize> {
        row.as_array().unwrap().iter().enumerate().filter(|(_, v)| *v == "1").map(|(i, _)| i).collect()
    };
    assert_eq!(ones(&rows[0]), vec![7]);
    assert_eq!(ones(&rows[1]), vec![3, 5, 6]);
    assert_eq!(r["unknowns"][3], serde_json::json!([1, 1, 0]));
}

#[test]
fn reports_are_deterministic() {
    let a = linemap(&["constraints", "--n", "4"]);
    let b = linemap(&["constraints", "--n", "4"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(report(&a)["solution_dimension"], 10);
}

#[test]
fn sharp_construction_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sharp.json");
    let p = path.to_str().unwrap();
    assert_eq!(code(&linemap(&["construct-sharp", "--dim", "4", "--out", p])), 0);
    let o = linemap(&["verify-family", "--map", p, "--dirs", "e1,e2,e3,e4,v", "--field", "p:5"]);
    assert_eq!(code(&o), 0);
    assert_eq!(code(&linemap(&["construct-sharp", "--dim", "5"])), 2);
}

#[test]
fn fifth_direction() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["canonical1", "canonical2"] {
        let map = write_example(dir.path(), name, &[]);
        let o = linemap(&["refute-fifth", "--map", &map, "--u", "2,3,1"]);
        assert_eq!(code(&o), 1, "{name}");
        assert_eq!(report(&o)["refuted"], true);
        let o = linemap(&["refute-fifth", "--map", &map, "--u", "2,3,1", "--field", "p:5"]);
        assert_eq!(code(&o), 1, "{name} mod 5");
    }
    let map = write_example(dir.path(), "canonical1", &[]);
    assert_eq!(code(&linemap(&["refute-fifth", "--map", &map, "--u", "1,3,1"])), 2);
}

#[test]
fn exhaust_plane() {
    let o = linemap(&["exhaust", "--p", "3", "--n", "2", "--dirs", "e1,e2"]);
    assert_eq!(code(&o), 0);
    let r = report(&o);
    assert!(r["count"].as_u64().unwrap() > 0);
    assert_eq!(r["separable"], r["count"]);
}

#[test]
fn decide_projective() {
    let dir = tempfile::tempdir().unwrap();
    let values = pg2_points(3);
    let table = serde_json::json!({"p": 3, "n": 2, "values": values});
    let path = dir.path().join("id.json");
    std::fs::write(&path, table.to_string()).unwrap();
    let o = linemap(&["decide-proj", "--table", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(report(&o)["decision"], "linear");

    let mut swapped = pg2_points(3);
    swapped.swap(0, 5);
    let path = dir.path().join("swap.json");
    std::fs::write(&path, serde_json::json!({"p": 3, "n": 2, "values": swapped}).to_string()).unwrap();
    let o = linemap(&["decide-proj", "--table", path.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert_eq!(report(&o)["decision"], "not-linear");
}

/// Canonical representatives of PG(2, p) in the library's point order.
fn pg2_points(p: i64) -> Vec<Vec<i64>> {
    linemap_core::projective::ProjectiveSpace::new(p as u32, 2)
        .map(|s| (0..s.size()).map(|i| s.point(i).into_iter().map(i64::from).collect()).collect())
        .unwrap()
}

#[test]
fn scalar_lemma_reports() {
    for (lemma, p) in [("ratio", "5"), ("mult-id", "7"), ("f2-id", "13"), ("diag2str", "5"), ("add1str", "3")] {
        let o = linemap(&["scalar-lemmas", "--p", p, "--lemma", lemma]);
        assert_eq!(code(&o), 0, "{lemma}");
    }
    let o = linemap(&["scalar-lemmas", "--p", "3", "--lemma", "add1str", "--x0", "1,0"]);
    assert_eq!(report(&o)["bijections"], 48);
    assert_eq!(code(&linemap(&["scalar-lemmas", "--p", "11", "--lemma", "ratio"])), 3);
    assert_eq!(code(&linemap(&["scalar-lemmas", "--p", "4", "--lemma", "ratio"])), 2);
}

#[test]
fn recover_forms() {
    let dir = tempfile::tempdir().unwrap();
    let table = serde_json::json!({
        "p": 3, "n": 2, "m": 2,
        "values": [[0,0],[0,1],[0,2],[1,0],[1,1],[1,2],[2,0],[2,1],[2,2]],
    });
    let path = dir.path().join("id.json");
    std::fs::write(&path, table.to_string()).unwrap();
    let t = path.to_str().unwrap();
    let o = linemap(&["recover-form", "--table", t, "--form", "diagonal"]);
    assert_eq!(code(&o), 0);
    assert_eq!(report(&o)["f"], serde_json::json!([[0, 1, 2], [0, 1, 2]]));
    let o = linemap(&["recover-form", "--table", t, "--form", "plane"]);
    assert_eq!(report(&o)["separable"], true);
}
