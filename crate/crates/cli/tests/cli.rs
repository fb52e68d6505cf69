use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn nestkit(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nestkit"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn ok(dir: &Path, args: &[&str]) -> String {
    let o = nestkit(dir, args);
    assert_eq!(code(&o), 0, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

fn json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn catalog_by_id_and_kind() {
    let t = TempDir::new().unwrap();
    let out = ok(t.path(), &["catalog", "verify", "--id", "table1-v61"]);
    assert!(out.starts_with("PASS table1-v61"), "{out}");
    assert!(out.contains("1 passed, 0 failed"));
    let out = ok(t.path(), &["catalog", "verify", "--kind", "16-tuple"]);
    assert!(out.contains("12 passed, 0 failed"), "{out}");
    let o = nestkit(t.path(), &["catalog", "verify", "--id", "nope"]);
    assert_eq!(code(&o), 3);
    let o = nestkit(t.path(), &["catalog", "verify", "--kind", "widget"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn catalog_verify_json_lists_every_entry() {
    let t = TempDir::new().unwrap();
    let v: Value = serde_json::from_str(&ok(t.path(), &["catalog", "verify", "--format", "json"])).unwrap();
    assert_eq!(v["failed"], 0);
    assert!(v["entries"].as_array().unwrap().len() >= 60);
}

#[test]
fn built_nesting_round_trips() {
    let t = TempDir::new().unwrap();
    ok(t.path(), &["catalog", "build", "ex4.1-v16", "--output", "v16.json"]);
    let f = json(&t.path().join("v16.json"));
    assert_eq!(f["blocks"].as_array().unwrap().len(), 20);
    assert_eq!(f["nested"], true);
    let out = ok(t.path(), &["verify-nesting", "--file", "v16.json"]);
    assert!(out.starts_with("PASS nesting of (16,4,1)-BIBD"), "{out}");
    assert!(out.contains("not perfect"));
    // the base design alone
    let out = ok(t.path(), &["verify", "--file", "v16.json", "--format", "json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn broken_design_exits_1() {
    let t = TempDir::new().unwrap();
    let d = r#"{"group":"labels","points":[1,2,3,4,5,6,7],
        "blocks":[[1,2,3],[1,4,5],[1,6,7],[2,4,6],[2,5,7],[3,4,7],[3,5,7]],
        "params":{"v":7,"k":3,"lambda":1}}"#;
    fs::write(t.path().join("bad.json"), d).unwrap();
    let o = nestkit(t.path(), &["verify", "--file", "bad.json"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("FAIL (7,3,1)-BIBD"), "{}", stdout(&o));
    let o = nestkit(t.path(), &["verify", "--file", "missing.json"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn nested_sts7_is_perfect() {
    let t = TempDir::new().unwrap();
    let blocks: Vec<String> = (0..7).map(|i| format!("[{},{},{},{}]", i, (i + 1) % 7, (i + 3) % 7, (i + 6) % 7)).collect();
    let n = format!(r#"{{"group":"Z7","points":[0,1,2,3,4,5,6],"blocks":[{}],"nested":true}}"#, blocks.join(","));
    fs::write(t.path().join("sts.json"), n).unwrap();
    let out = ok(t.path(), &["verify-nesting", "--file", "sts.json", "--format", "json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["perfect"], true);
    assert_eq!(v["pair_bound"]["used"], v["pair_bound"]["capacity"]);
}

#[test]
fn spectrum_and_plan() {
    let t = TempDir::new().unwrap();
    assert!(ok(t.path(), &["spectrum", "--v", "10"]).starts_with("IMPOSSIBLE v=10"));
    let out = ok(t.path(), &["spectrum", "--v", "16"]);
    assert!(out.starts_with("EXISTS v=16: catalog ex4.1-v16"), "{out}");
    let out = ok(t.path(), &["spectrum", "--v", "1924"]);
    assert!(out.contains("1924 = 3(8·72+65)+1"), "{out}");
    let v: Value = serde_json::from_str(&ok(t.path(), &["spectrum", "--v", "1", "--to", "200", "--format", "json"])).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 200);
    assert_eq!(v[12]["status"], "EXISTS");
    assert_eq!(v[9]["status"], "IMPOSSIBLE");

    let out = ok(t.path(), &["plan", "--v", "208"]);
    assert!(out.contains("AG(2,8) inflated by t=5"), "{out}");
    assert_eq!(code(&nestkit(t.path(), &["plan", "--v", "10"])), 2);
    let o = nestkit(t.path(), &["plan", "--v", "568"]);
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).contains("(176,8,1)"));
}

#[test]
fn plan_execute_emits_a_verified_nesting() {
    let t = TempDir::new().unwrap();
    ok(t.path(), &["plan", "--v", "205", "--execute", "--output", "v205.json"]);
    let out = ok(t.path(), &["verify-nesting", "--file", "v205.json"]);
    assert!(out.starts_with("PASS nesting of (205,4,1)-BIBD"), "{out}");
}

#[test]
fn registry_wilson_61() {
    let t = TempDir::new().unwrap();
    let p = t.path();
    assert_eq!(code(&nestkit(p, &["compose", "wilson", "--td", "5,4"])), 3);
    ok(p, &["catalog", "build", "table1-v13", "--output", "v13.json"]);
    ok(p, &["registry", "add", "v13.json", "--role", "nested-bibd"]);
    ok(p, &["construct", "theorem3", "--v", "5", "--output", "g5.json"]);
    ok(p, &["registry", "add", "g5.json", "--role", "nested-gdd-3"]);
    let keys = ok(p, &["registry", "list"]);
    assert_eq!(keys.lines().collect::<Vec<_>>(), ["nested-bibd 13", "nested-gdd-3 5"]);
    ok(p, &["compose", "wilson", "--td", "5,4", "--output", "v61.json"]);
    let f = json(&p.join("v61.json"));
    assert_eq!(f["blocks"].as_array().unwrap().len(), 305);
    ok(p, &["verify-nesting", "--file", "v61.json"]);
    // wrong role is rejected
    assert_eq!(code(&nestkit(p, &["registry", "add", "v13.json", "--role", "nested-gdd-3"])), 2);
    assert_eq!(code(&nestkit(p, &["registry", "add", "v13.json", "--role", "widget"])), 2);
}

#[test]
fn pbd_closure_needs_block_ingredient() {
    let t = TempDir::new().unwrap();
    let p = t.path();
    assert_eq!(code(&nestkit(p, &["compose", "pbd", "--affine", "4"])), 3);
    ok(p, &["registry", "add-catalog", "ex4.1-v16"]);
    ok(p, &["compose", "pbd", "--affine", "16", "--output", "v256.json"]);
    let f = json(&p.join("v256.json"));
    assert_eq!(f["blocks"].as_array().unwrap().len(), 256 * 255 / 12);
}

#[test]
fn hdm_fill_280() {
    let t = TempDir::new().unwrap();
    let p = t.path();
    ok(p, &["compose", "hdm", "--catalog", "ex4.3-brdf-v40", "--q", "7", "--output", "b280.json"]);
    assert!(ok(p, &["brdf", "verify", "--file", "b280.json"]).starts_with("PASS"));
    ok(p, &["brdf", "to-design", "--file", "b280.json", "--output", "g280.json"]);
    ok(p, &["verify-nesting", "--file", "g280.json", "--gdd"]);
    assert_eq!(code(&nestkit(p, &["compose", "fill", "--gdd", "g280.json"])), 3);
    ok(p, &["construct", "v28", "--output", "v28.json"]);
    ok(p, &["registry", "add", "v28.json", "--role", "nested-bibd"]);
    ok(p, &["compose", "fill", "--gdd", "g280.json", "--output", "v280.json"]);
    let out = ok(p, &["verify-nesting", "--file", "v280.json"]);
    assert!(out.starts_with("PASS nesting of (280,4,1)-BIBD"), "{out}");
}

#[test]
fn weak_family_to_design() {
    let t = TempDir::new().unwrap();
    let p = t.path();
    let entry: Value = serde_json::from_str(&ok(p, &["catalog", "show", "ex4.3-v40"])).unwrap();
    fs::write(p.join("f40.json"), entry["payload"]["family"].to_string()).unwrap();
    let xs = ok(p, &["brdf", "suitable-x", "--file", "f40.json"]);
    assert!(xs.split_whitespace().any(|x| x == "3"), "{xs}");
    ok(p, &["brdf", "to-design", "--file", "f40.json", "--x", "3", "--output", "n40.json"]);
    let out = ok(p, &["verify-nesting", "--file", "n40.json"]);
    assert!(out.starts_with("PASS nesting of (40,4,1)-BIBD"), "{out}");
    let o = nestkit(p, &["brdf", "to-design", "--file", "f40.json", "--x", "10"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn rbibd_and_tdtrunc_give_gdds() {
    let t = TempDir::new().unwrap();
    let p = t.path();
    ok(p, &["compose", "rbibd", "--q", "8", "--t", "5", "--output", "m.json"]);
    let out = ok(p, &["verify", "--file", "m.json", "--gdd"]);
    assert!(out.starts_with("PASS ([8, 9],1)-GDD"), "{out}");
    ok(p, &["compose", "tdtrunc", "--m", "8", "--t", "3", "--output", "tt.json"]);
    assert!(ok(p, &["verify", "--file", "tt.json", "--gdd"]).starts_with("PASS"));
    assert_eq!(code(&nestkit(p, &["compose", "tdtrunc", "--m", "10", "--t", "3"])), 3);
}

#[test]
fn searches() {
    let t = TempDir::new().unwrap();
    let p = t.path();
    ok(p, &["search", "nesting", "--v", "13", "--blocks", "1,2,4,10", "--output", "n13.json"]);
    ok(p, &["verify-nesting", "--file", "n13.json"]);
    let o = nestkit(p, &["search", "brdf", "--group", "Z16", "--subgroup", "0,4,8,12"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("exhausted"));
    let o = nestkit(p, &["search", "brdf", "--group", "Z17"]);
    assert_eq!(code(&o), 2);
    for name in ["a.json", "b.json"] {
        ok(p, &["search", "tuple16", "--q", "37", "--seed", "5", "--output", name]);
    }
    assert_eq!(fs::read(p.join("a.json")).unwrap(), fs::read(p.join("b.json")).unwrap());
    ok(p, &["verify-nesting", "--file", "a.json"]);
}

#[test]
fn constructions() {
    let t = TempDir::new().unwrap();
    let p = t.path();
    ok(p, &["construct", "tuple16", "--q", "13", "--output", "t13.json"]);
    assert!(ok(p, &["verify-nesting", "--file", "t13.json"]).starts_with("PASS nesting of (52,4,1)-BIBD"));
    ok(p, &["construct", "gdd38", "--output", "g.json"]);
    ok(p, &["verify-nesting", "--file", "g.json", "--gdd"]);
    ok(p, &["construct", "theorem3", "--v", "13", "--family", "--output", "f.json"]);
    assert_eq!(json(&p.join("f.json"))["blocks"].as_array().unwrap().len(), 3);
    assert_eq!(code(&nestkit(p, &["construct", "theorem3", "--v", "21"])), 2);
    let bad = "1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1";
    assert_ne!(code(&nestkit(p, &["construct", "tuple16", "--q", "13", "--tuple", bad])), 0);
}
