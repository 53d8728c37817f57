use std::process::{Command, Output};

fn sigtree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sigtree"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn verify_six_three_json() {
    let out = sigtree(&["verify", "--n", "6", "--k", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["matches_broom"], true);
    assert_eq!(v["mode"], "theorem");
    assert!(v["runner_up_gap"].as_f64().unwrap() > 0.0);
    assert_eq!(v["classes"].as_array().unwrap().len(), 2);
    assert_eq!(v["audit"]["passes"], true);
    assert!(out.stderr.is_empty());
}

#[test]
fn verify_csv_columns() {
    let out = sigtree(&["verify", "--n", "7", "--k", "4", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,k,canonical_code,prufer,leaf_count,lambda1,is_argmax"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows.iter().filter(|r| r.ends_with(",true")).count(), 1);
}

#[test]
fn spectrum_of_star() {
    let out = sigtree(&["spectrum", "--prufer", "0,0,0,0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["n"], 6);
    assert!((v["lambda1"].as_f64().unwrap() - 5.0).abs() < 1e-9);
    assert!((v["lambdan"].as_f64().unwrap() + 1.0).abs() < 1e-9);
    assert!((v["radius"].as_f64().unwrap() - 5.0).abs() < 1e-9);
}

#[test]
fn spectrum_from_edge_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p4.txt");
    std::fs::write(&path, "4\n0 1\n1 2\n2 3\n").unwrap();
    let out = sigtree(&["spectrum", "--edges", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert!((v["lambda1"].as_f64().unwrap() - 5f64.sqrt()).abs() < 1e-12);
}

#[test]
fn balance_reports_witnesses() {
    let out = sigtree(&["balance", "--prufer", "0,0,0"]);
    let v = stdout_json(&out);
    assert_eq!(v["balanced"], true);
    // the side containing vertex 0; the hub is alone opposite its leaves
    assert_eq!(v["side"], serde_json::json!([0]));
    let out = sigtree(&["balance", "--prufer", "1,2"]);
    let v = stdout_json(&out);
    assert_eq!(v["balanced"], false);
    assert_eq!(v["negative_triangle"].as_array().unwrap().len(), 3);
}

#[test]
fn chain_seven() {
    let out = sigtree(&["chain", "--n", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = stdout_json(&out);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!((rows[0]["s"].as_u64(), rows[0]["t"].as_u64()), (Some(2), Some(3)));
    assert!(rows[1]["lambda1"].as_f64() > rows[0]["lambda1"].as_f64());
}

#[test]
fn climb_emits_json_lines_deterministically() {
    let args = ["climb", "--n", "9", "--k", "4", "--seed", "3"];
    let a = sigtree(&args);
    let b = sigtree(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    let mut prev = f64::NEG_INFINITY;
    for (i, line) in text.lines().enumerate() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["step"].as_u64(), Some(i as u64 + 1));
        let kind = v["kind"].as_str().unwrap();
        let arity = v["vertices"].as_array().unwrap().len();
        assert!((kind == "type_i" && arity == 3) || (kind == "type_ii" && arity == 4));
        let l = v["lambda1"].as_f64().unwrap();
        assert!(l > prev);
        prev = l;
    }
}

#[test]
fn sweep_text_and_determinism() {
    let a = sigtree(&["sweep", "--n-min", "6", "--n-max", "8", "--format", "csv"]);
    let b = sigtree(&["sweep", "--n-min", "6", "--n-max", "8", "--format", "csv"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert_eq!(text.lines().count(), 1 + 4 + 5 + 6);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("enum.json");
    let out = sigtree(&["enumerate", "--n", "6", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 6);
}

#[test]
fn errors_exit_one_with_one_line() {
    for args in [
        vec!["verify", "--n", "20", "--k", "3"],
        vec!["verify", "--n", "6", "--k", "6"],
        vec!["chain", "--n", "5"],
        vec!["spectrum", "--prufer", "1,x"],
        vec!["spectrum", "--edges", "/nonexistent/file"],
        vec!["enumerate", "--n", "0"],
        vec!["frobnicate"],
        vec!["verify", "--n", "6"],
    ] {
        let out = sigtree(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    let out = sigtree(&["spectrum", "--prufer", "4,4"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(String::from_utf8(out.stderr).unwrap().lines().count(), 1);
}

#[test]
fn edge_case_modes() {
    let out = sigtree(&["verify", "--n", "8", "--k", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["mode"], "edge_case");
    assert_eq!(v["double_star_endpoint"], true);
    let out = sigtree(&["verify", "--n", "8", "--k", "7"]);
    let v = stdout_json(&out);
    assert_eq!(v["argmax_balanced"], true);
    assert!(v["runner_up_gap"].is_null());
}
