use num_bigint::BigInt;
use serde_json::Value;
use std::process::{Command, Output};
use wpsing::bpfamily::bp_analyze;
use wpsing::cli::{run, CommandResult};
use wpsing::leyomdin::{cyclic_germ_det, si_det, CyclicGerm};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wpsing")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = bin(&all);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn keys_sorted(v: &Value) -> bool {
    match v {
        Value::Object(m) => {
            let keys: Vec<&String> = m.keys().collect();
            keys.windows(2).all(|w| w[0] <= w[1]) && m.values().all(keys_sorted)
        }
        Value::Array(a) => a.iter().all(keys_sorted),
        _ => true,
    }
}

#[test]
fn bp_json_matches_library() {
    let v = json(&["bp", "--n", "2,3,5"]);
    let a = bp_analyze(2, 3, 5).unwrap();
    assert_eq!(v["det"], serde_json::json!(1));
    assert_eq!(v["zhs"], Value::Bool(a.is_zhs));
    assert_eq!(v["qhs"], Value::Bool(true));
    assert_eq!(v["omega"], serde_json::json!([15, 10, 6]));
}

#[test]
fn cyclic_det_rows_match_library() {
    let v = json(&["cyclic-det", "--a", "2", "--b", "3", "--k", "1..12"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 12);
    for row in rows {
        let k = row["k"].as_u64().unwrap();
        let g = cyclic_germ_det(&CyclicGerm { a: 2, b: 3, k }).unwrap();
        assert_eq!(row["det"].to_string(), g.det.to_string());
        assert_eq!(row["genus"].as_u64().unwrap(), g.exceptional_genus);
    }
}

#[test]
fn triangle_group_order_text() {
    let out = bin(&["group", "triangle", "--p", "2", "--q", "3", "--r", "5", "order"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l == "order: 60"), "{text}");
}

#[test]
fn library_entry_point_matches_binary() {
    let args = ["wpsing", "--json", "si-det", "--d", "4", "--deltas", "1,3"];
    let CommandResult { payload, exit_code, .. } = run(&args.map(String::from));
    assert_eq!(exit_code, 0);
    assert_eq!(payload["det"].to_string(), si_det(4, &[1, 3]).unwrap().to_string());
    assert_eq!(payload, json(&args[2..]));
}

#[test]
fn s3_count_and_rs() {
    let v = json(&["group", "pres_odd", "--a", "4", "s3-count"]);
    assert!(v["s3_epimorphisms"].as_u64().unwrap() > 0);
    let v = json(&["group", "cyclic", "--n", "12", "s3-count"]);
    assert_eq!(v["s3_epimorphisms"].as_u64(), Some(0));
    let f = json(&["group", "conic_quotient", "rs", "--index-2", "--transversal", "forward"]);
    let r = json(&["group", "conic_quotient", "rs", "--index-2", "--transversal", "reversed"]);
    assert_eq!(f["abelianization"], r["abelianization"]);
}

#[test]
fn json_keys_are_sorted() {
    for args in [
        &["bp", "--n", "2,3,7"][..],
        &["family4", "--n", "2,3,5,7", "--b2", "1,3", "--b3", "2,0,0"],
        &["weight", "--w", "2,3,5"],
        &["conjecture-scan", "--a", "2", "--b", "3", "--kmax", "24"],
        &["flexes", "--lambda", "1"],
    ] {
        assert!(keys_sorted(&json(args)), "{args:?}");
    }
}

#[test]
fn flexes_dichotomy() {
    assert_eq!(json(&["flexes", "--lambda", "1"])["collinear"], Value::Bool(true));
    assert_eq!(json(&["flexes", "--lambda", "zeta"])["collinear"], Value::Bool(false));
}

#[test]
fn cremona_push_of_conic() {
    let v = json(&["cremona", "--alpha", "1,1,1", "--beta", "1,1", "--poly", "x^2+y^2+z^2-2*(y*z+x*z+x*y)"]);
    let shown = wpsing::poly::parse_poly("y^2*z^2+x^2*z^2+x^2*y^2-2*z*(x*y*z+x^2*y+x*y^2)").unwrap();
    let got = wpsing::poly::parse_poly(v["push"]["poly"].as_str().unwrap()).unwrap();
    assert_eq!(got, shown);
}

#[test]
fn exit_codes() {
    // usage
    assert_eq!(bin(&["no-such-command"]).status.code(), Some(2));
    // invalid argument
    assert_eq!(bin(&["hj", "--d", "5", "--a", "0"]).status.code(), Some(2));
    // non-integral closed form
    assert_eq!(bin(&["ly-det", "--d", "2", "--k", "3", "--deltas", "1,1"]).status.code(), Some(3));
    // coset budget
    let out = bin(&["--json", "group", "--pres", "<a, b | >", "order", "--max-cosets", "50"]);
    assert_eq!(out.status.code(), Some(4));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["exit_code"], serde_json::json!(4));
}

#[test]
fn det_graph_reads_json_file() {
    let dir = std::env::temp_dir().join(format!("wpsing-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a2.json");
    std::fs::write(
        &path,
        r#"{"vertices":[{"genus":0,"self":-2},{"genus":0,"self":-2}],"edges":[{"u":0,"v":1,"i":1}]}"#,
    )
    .unwrap();
    let v = json(&["det-graph", path.to_str().unwrap()]);
    assert_eq!(v["det"].to_string(), BigInt::from(3).to_string());
    std::fs::remove_dir_all(&dir).ok();
}
