use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use hopfgal::hopf::{GroupJson, HopfJson};
use hopfgal::json::ScalarRepr;
use serde_json::{json, Value};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_hopfgal"));
    c.env_remove("HOPFGAL_SEED");
    c
}

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn tmp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hopfgal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

fn sl2(p: u32) -> String {
    let o = run(&["builtin", "sl2", "--p", &p.to_string()], "");
    assert!(o.status.success());
    String::from_utf8(o.stdout).unwrap()
}

fn z2_hopf() -> HopfJson {
    let g = GroupJson { order: 2, table: vec![vec![0, 1], vec![1, 0]], field: None };
    HopfJson::from_hopf(&g.build().unwrap())
}

#[test]
fn builtin_pipes_into_fiber() {
    // (λ_e, λ_h, λ_f) = (0, 1, 0) is regular: three blocks of M_3 over a splitting field
    let o = run(&["fiber", "--lambda", "0,1,0"], &sl2(3));
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let r = stdout_json(&o);
    assert_eq!(r["stratum"], "regular");
    assert_eq!(r["blocks"], 3);
    assert_eq!(r["simple_dims"], json!([3, 3, 3]));
    assert_eq!(r["center_dim"], 3);
    assert_eq!(r["frobenius_rank"], 27);
}

#[test]
fn output_is_deterministic() {
    let lie = tmp("sl2.json", &sl2(3));
    let args = ["scan", "--lie", lie.to_str().unwrap(), "--sample", "4", "--format", "csv"];
    let a = run(&args, "");
    let b = run(&args, "");
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(String::from_utf8_lossy(&a.stdout).lines().count(), 5);
    let seeded = bin().args(args).env("HOPFGAL_SEED", "7").output().unwrap();
    assert!(seeded.status.success());
}

#[test]
fn malformed_input_exits_2() {
    let o = run(&["verify-hopf", "-"], "{not json");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("verify-hopf"));
    let o = run(&["fiber", "--lambda", "0,1"], &sl2(3));
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["builtin", "sl2", "--p", "4"], "");
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["no-such-command"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn broken_antipode_exits_1() {
    let good = z2_hopf();
    let o = run(&["verify-hopf"], &serde_json::to_string(&good).unwrap());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json(&o)["ok"], true);

    let mut bad = good;
    bad.antipode[1] = vec![ScalarRepr::Int(0), ScalarRepr::Int(2)];
    let o = run(&["verify-hopf"], &serde_json::to_string(&bad).unwrap());
    assert_eq!(o.status.code(), Some(1));
    let v = stdout_json(&o);
    assert_eq!(v["ok"], false);
    assert!(!v["violations"].as_array().unwrap().is_empty());
}

#[test]
fn group_table_is_accepted() {
    let o = run(&["verify-hopf"], r#"{"order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]]}"#);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json(&o)["dim"], 3);
}

#[test]
fn lie_round_trip() {
    let text = sl2(5);
    let o = run(&["verify-lie"], &text);
    assert_eq!(o.status.code(), Some(0));
    let parsed: Value = serde_json::from_str(&text).unwrap();
    let again: hopfgal::RestrictedLie = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_value(&again).unwrap(), parsed);

    let mut broken = parsed;
    broken["pmap"]["h"] = json!({});
    let o = run(&["verify-lie"], &broken.to_string());
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn twisted_product_of_sign_cocycle() {
    let cocycle = json!({
        "hopf": {"order": 2, "table": [[0,1],[1,0]]},
        "target": {"field": {"p": 3, "k": 1}, "dim": 1, "unit": [1], "mul": [[[1]]]},
        "values": [[[1],[1]],[[1],[2]]]
    });
    let path = tmp("sigma.json", &cocycle.to_string());
    let o = run(&["cocycle-check", path.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["twist", "--cocycle", path.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let alg = stdout_json(&o);
    assert_eq!(alg["dim"], 2);
    let rebuilt: hopfgal::json::AlgebraJson = serde_json::from_value(alg).unwrap();
    let a = rebuilt.build().unwrap();
    // (1⊗g)² = σ(g,g) = 2 = −1
    let two = a.field().from_i64(2);
    let expected: Vec<_> = a.unit().iter().map(|&u| a.field().mul(u, two)).collect();
    assert_eq!(a.product(1, 1), &expected[..]);

    let mut bad = cocycle;
    bad["values"][0][0] = json!([2]);
    let path = tmp("bad_sigma.json", &bad.to_string());
    let o = run(&["cocycle-check", path.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn equivariance_and_winding() {
    let split = json!({"order": 4, "table": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]], "subgroup": [0,2]});
    let path = tmp("split.json", &split.to_string());
    let o = run(&["equivariant-check", "--splitting", path.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout_json(&o)["equivariant"], true);

    let o = run(&["builtin", "borel", "--p", "3"], "");
    let borel = String::from_utf8(o.stdout).unwrap();
    let o = run(&["winding", "--lambda", "0,0"], &borel);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["winding", "--lambda", "0,1,0"], &sl2(3));
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("winding"));

    let o = run(&["frobenius", "--lambda", "1,0,0", "--chi"], &sl2(3));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json(&o)["rank"], 27);
}
