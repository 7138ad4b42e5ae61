use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn addspan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_addspan")).args(args).output().expect("spawn addspan")
}

fn ok(args: &[&str]) -> Output {
    let out = addspan(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    out
}

fn path(dir: &TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(p: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(p).unwrap()).unwrap()
}

#[test]
fn gen_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let (a, b) = (path(&dir, "a.edges"), path(&dir, "b.edges"));
    for p in [&a, &b] {
        ok(&["gen", "--family", "gnm", "--n", "100", "--m", "1500", "--seed", "7", "--out", s(p)]);
    }
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    assert!(text.starts_with("100 1500\n"));
}

#[test]
fn spanner8_on_a_tree_keeps_everything() {
    let dir = TempDir::new().unwrap();
    let (g, h, stats) = (path(&dir, "g.edges"), path(&dir, "h.edges"), path(&dir, "stats.json"));
    ok(&["gen", "--family", "path", "--n", "40", "--out", s(&g)]);
    ok(&["spanner8", "--in", s(&g), "--out", s(&h), "--stats", s(&stats), "--verify"]);
    assert_eq!(fs::read_to_string(&g).unwrap(), fs::read_to_string(&h).unwrap());
    let st = json(&stats);
    assert_eq!(st["max_stretch"], 0.0);
    assert_eq!(st["verified"], true);
    assert_eq!(st["ell"], 0);
}

#[test]
fn repeated_runs_match_outside_timing() {
    let dir = TempDir::new().unwrap();
    let g = path(&dir, "g.edges");
    ok(&["gen", "--family", "gnm", "--n", "90", "--m", "1200", "--out", s(&g)]);
    let mut runs = Vec::new();
    for r in 0..2 {
        let (h, st, tr) = (path(&dir, &format!("h{r}")), path(&dir, &format!("s{r}")), path(&dir, &format!("t{r}")));
        ok(&["spanner8", "--in", s(&g), "--out", s(&h), "--stats", s(&st), "--trace", s(&tr), "--verify"]);
        let mut stats = json(&st);
        stats.as_object_mut().unwrap().remove("timing");
        runs.push((fs::read(&h).unwrap(), stats, fs::read(&tr).unwrap()));
    }
    assert_eq!(runs[0], runs[1]);
    let trace = String::from_utf8(runs[0].2.clone()).unwrap();
    let first: Value = serde_json::from_str(trace.lines().next().unwrap()).unwrap();
    assert!(first["event"] == "edge" || first["event"] == "update");
}

#[test]
fn spanner2_stats_and_verify() {
    let dir = TempDir::new().unwrap();
    let (g, h, st) = (path(&dir, "g.edges"), path(&dir, "h.edges"), path(&dir, "s.json"));
    ok(&["gen", "--family", "gnm", "--n", "100", "--m", "2000", "--seed", "3", "--out", s(&g)]);
    ok(&["spanner2", "--in", s(&g), "--out", s(&h), "--stats", s(&st), "--verify"]);
    let stats = json(&st);
    for key in ["n", "m", "t", "ell", "edges", "bound"] {
        assert!(stats.get(key).is_some(), "missing {key}");
    }
    assert!(stats["timing"]["build_ms"].is_number());
    assert!(stats["max_stretch"].as_f64().unwrap() <= 2.0);

    let report = path(&dir, "r.json");
    ok(&["verify", "--graph", s(&g), "--spanner", s(&h), "--k", "2", "--report", s(&report)]);
    assert_eq!(json(&report)["passed"], true);
}

#[test]
fn verify_reports_a_violation_with_exit_1() {
    let dir = TempDir::new().unwrap();
    let (g, h, report) = (path(&dir, "g.edges"), path(&dir, "h.edges"), path(&dir, "r.json"));
    ok(&["gen", "--family", "cycle", "--n", "6", "--out", s(&g)]);
    fs::write(&h, "6 5\n0 1\n1 2\n2 3\n3 4\n4 5\n").unwrap();
    let out = addspan(&["verify", "--graph", s(&g), "--spanner", s(&h), "--k", "2", "--report", s(&report)]);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&report);
    assert_eq!(r["passed"], false);
    assert_eq!(r["max_stretch"], 4.0);
}

#[test]
fn bad_input_exits_2() {
    let dir = TempDir::new().unwrap();
    let g = path(&dir, "g.edges");
    fs::write(&g, "2 1\n0 0\n").unwrap();
    let out = addspan(&["spanner2", "--in", s(&g), "--out", s(&path(&dir, "h"))]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let out = addspan(&["spanner2", "--in", s(&path(&dir, "missing")), "--out", s(&path(&dir, "h"))]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(addspan(&["spanner8", "--bogus"]).status.code(), Some(2));
    assert_eq!(addspan(&["spanner2", "--in", s(&g), "--out", "x", "--t", "0"]).status.code(), Some(2));
}

#[test]
fn oracle_round_trip() {
    let dir = TempDir::new().unwrap();
    let (g, o) = (path(&dir, "g.edges"), path(&dir, "o.bin"));
    ok(&["gen", "--family", "complete", "--n", "9", "--out", s(&g)]);
    ok(&["oracle", "build", "--in", s(&g), "--out", s(&o)]);
    assert_eq!(&fs::read(&o).unwrap()[..8], b"ADSPORCL");

    let pairs = path(&dir, "pairs.txt");
    fs::write(&pairs, "# u v\n3 3\n1 2\n").unwrap();
    let out = ok(&["oracle", "query", "--oracle", s(&o), "--pairs", s(&pairs)]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "3 3 0\n1 2 2\n");

    let m = path(&dir, "m.txt");
    ok(&["oracle", "apasp", "--oracle", s(&o), "--out", s(&m)]);
    let text = fs::read_to_string(&m).unwrap();
    assert_eq!(text.lines().count(), 9);
    assert!(text.lines().next().unwrap().starts_with("0 1 1"));

    fs::write(&pairs, "0 9\n").unwrap();
    assert_eq!(addspan(&["oracle", "query", "--oracle", s(&o), "--pairs", s(&pairs)]).status.code(), Some(2));
}

#[test]
fn oracle_prints_inf_across_components() {
    let dir = TempDir::new().unwrap();
    let (g, o, pairs) = (path(&dir, "g.edges"), path(&dir, "o.bin"), path(&dir, "p.txt"));
    fs::write(&g, "4 2\n0 1\n2 3\n").unwrap();
    fs::write(&pairs, "0 3\n0 1\n").unwrap();
    ok(&["oracle", "build", "--in", s(&g), "--out", s(&o)]);
    let out = ok(&["oracle", "query", "--oracle", s(&o), "--pairs", s(&pairs)]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "0 3 inf\n0 1 1\n");
}

#[test]
fn bench_records_ratios() {
    let dir = TempDir::new().unwrap();
    let b = path(&dir, "bench.json");
    ok(&["bench", "--family", "gnm", "--sizes", "100,200,400", "--repeats", "1", "--out", s(&b)]);
    let doc = json(&b);
    assert_eq!(doc["runs"].as_array().unwrap().len(), 3);
    assert_eq!(doc["timing"]["spanner8_ratios"].as_array().unwrap().len(), 2);
    assert_eq!(doc["runs"][2]["spanner8"]["work_within_bound"], true);
}
