use std::fs;

use nbwalk::cli::run;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("nbwalk").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn audit_petersen_is_tight() {
    let v = json(&["audit", "--gen", "petersen", "--format", "json"]);
    assert_eq!(v["n"], 10);
    assert_eq!(v["girth"], 5);
    assert_eq!(v["verdicts"]["moore"]["status"], "TIGHT");
    assert_eq!(v["verdicts"]["ahl"]["status"], "TIGHT");
    assert_eq!(v["verdicts"]["hoory_l"]["status"], "PRECONDITION_UNMET");
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    for k in ["n", "girth", "delta", "d_bar", "moore_lb", "ahl_lb", "hoory_lb_l", "hoory_lb_r", "verdicts"] {
        assert!(keys.contains(&k), "missing {k}");
    }
}

#[test]
fn entropy_heawood_chain_table() {
    let (code, out, _) = call(&["entropy", "--gen", "heawood", "--horizon", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.trim_end().ends_with("ok")).count(), 4);
    let v = json(&["entropy", "--gen", "heawood", "--horizon", "4", "--format", "json"]);
    for record in v["chain"].as_array().unwrap() {
        for gap in record["gaps"].as_array().unwrap() {
            assert!(gap.as_f64().unwrap() >= -1e-9);
        }
    }
    assert_eq!(v["stationarity"]["holds"], true);
    assert!(v.get("marginals").is_none());
    let full = json(&["entropy", "--gen", "heawood", "--horizon", "2", "--format", "json", "--full"]);
    assert_eq!(full["marginals"]["arcs"][0]["probs"][0]["den"], 42);
}

#[test]
fn missing_file_is_an_error() {
    let (code, out, err) = call(&["audit", "nonexistent.g6"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("nonexistent.g6"));
}

#[test]
fn usage_errors() {
    assert_eq!(call(&["audit", "x.g6", "--gen", "petersen"]).0, 2);
    assert_eq!(call(&["walks", "--gen", "petersen", "--from-vertex", "0", "--from-arc", "0"]).0, 2);
    assert_eq!(call(&["bounds", "--girth", "5"]).0, 2);
    assert_eq!(call(&["bounds", "--dl", "3", "--girth", "4"]).0, 2);
    assert_eq!(call(&["entropy", "--gen", "petersen", "--mode", "sideways"]).0, 2);
    // bipartite start on a graph with odd cycles
    assert_eq!(call(&["entropy", "--gen", "petersen", "--mode", "lr"]).0, 2);
}

#[test]
fn bounds_spot_values() {
    let v = json(&["bounds", "--delta", "3", "--girth", "6", "--format", "json"]);
    assert_eq!(v["moore_lb"]["num"], 14);
    let v = json(&["bounds", "--dl", "3", "--dr", "2", "--girth", "4", "--format", "json"]);
    assert_eq!((v["hoory_lb_l"]["num"].clone(), v["hoory_lb_r"]["num"].clone()), (2.into(), 3.into()));
    let v = json(&["bounds", "--dbar", "2.8", "--girth", "5", "--format", "json"]);
    assert_eq!((v["ahl_lb"]["num"].clone(), v["ahl_lb"]["den"].clone()), (221.into(), 25.into()));
}

#[test]
fn walks_from_a_vertex() {
    let v = json(&["walks", "--gen", "petersen", "--horizon", "3", "--from-vertex", "0", "--format", "json"]);
    let counts: Vec<u64> = v["vertices"][0]["counts"].as_array().unwrap().iter().map(|c| c.as_u64().unwrap()).collect();
    assert_eq!(counts, [1, 3, 6, 12]);
    // default horizon is floor(girth / 2)
    let v = json(&["walks", "--gen", "heawood", "--format", "json"]);
    assert_eq!(v["horizon"], 3);
    assert_eq!(call(&["walks", "--gen", "cycle:5", "--from-arc", "10"]).0, 2);
}

#[test]
fn files_and_directories() {
    let dir = tempfile::tempdir().unwrap();
    let (code, g6, _) = call(&["gen", "heawood"]);
    assert_eq!(code, 0);
    fs::write(dir.path().join("b.g6"), &g6).unwrap();
    let (_, edges, _) = call(&["gen", "complete_bipartite:2,3", "--out-format", "edges"]);
    fs::write(dir.path().join("a.txt"), &edges).unwrap();
    fs::write(dir.path().join("c.graph"), &g6).unwrap();

    let path = |name: &str| dir.path().join(name).to_str().unwrap().to_string();
    let v = json(&["audit", &path("b.g6"), "--format", "json"]);
    assert_eq!(v["verdicts"]["hoory_l"]["status"], "TIGHT");

    // no .g6 suffix: parsed as an edge list unless overridden
    assert_eq!(call(&["audit", &path("c.graph")]).0, 2);
    let v = json(&["audit", &path("c.graph"), "--format-in", "g6", "--format", "json"]);
    assert_eq!(v["n"], 14);

    fs::remove_file(dir.path().join("c.graph")).unwrap();
    let v = json(&["audit", dir.path().to_str().unwrap(), "--format", "json"]);
    let ids: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["graph_id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["a.txt", "b.g6"]);
}

#[test]
fn infinite_girth_needs_a_horizon() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("path.txt");
    fs::write(&file, "0 1\n1 2\n").unwrap();
    let file = file.to_str().unwrap();
    assert_eq!(call(&["walks", file]).0, 2);
    assert_eq!(call(&["walks", file, "--horizon", "2"]).0, 0);
    let v = json(&["audit", file, "--format", "json"]);
    assert_eq!(v["girth"], "infinite");
    assert_eq!(v["verdicts"]["moore"]["status"], "PRECONDITION_UNMET");
}

#[test]
fn seeded_monte_carlo() {
    let args = ["entropy", "--gen", "complete_bipartite:2,3", "--horizon", "3", "--mc", "--seed", "9", "--samples", "20000", "--format", "json"];
    let a = call(&args);
    let b = call(&args);
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a.1).unwrap();
    assert_eq!(v["monte_carlo"]["seed"], 9);
    assert!(v["monte_carlo"]["max_arc_z"].as_f64().unwrap() < 5.0);
}
