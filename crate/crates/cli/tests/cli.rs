use std::process::{Command, Output};

use serde_json::Value;

fn nsg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nsg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = nsg(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn analyze_record_schema() {
    let v = json(&["analyze", "--gens", "12,15,20,23", "--json"]);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    assert_eq!(
        keys,
        [
            "generators",
            "minimal_generators",
            "multiplicity",
            "frobenius",
            "conductor",
            "genus",
            "pf",
            "type",
            "reduced_type",
            "symmetric",
            "extremality"
        ]
    );
    assert_eq!(v["pf"], serde_json::json!([28, 31, 33, 41, 49]));
    assert_eq!(v["type"], 5);
    assert_eq!(v["reduced_type"], 2);
    assert_eq!(v["extremality"], "neither");
}

#[test]
fn analyze_naturals_and_errors() {
    let v = json(&["analyze", "--gens", "1", "--json"]);
    assert_eq!(v["frobenius"], -1);
    assert_eq!(v["extremality"], "both");

    let text = stdout(&nsg(&["analyze", "--gens", "1"]));
    assert!(text.contains("frobenius: -1"));

    let out = nsg(&["analyze", "--gens", "4,6"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("gcd is not 1"));

    let out = nsg(&["analyze", "--gens", "0,3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(nsg(&["analyze", "--gens", "3,4", "--bogus"]).status.code(), Some(1));
    assert_eq!(nsg(&["nonsense"]).status.code(), Some(1));
    assert_eq!(nsg(&["analyze"]).status.code(), Some(1));
    assert_eq!(nsg(&["--help"]).status.code(), Some(0));
}

#[test]
fn family_commands() {
    let v = json(&["family", "bresinsky", "--h", "2", "--json"]);
    assert_eq!(v["pf_closed_form"], serde_json::json!([28, 31, 33, 41, 49]));
    assert_eq!(v["closed_form_matches"], true);

    let v = json(&["family", "backelin", "--n", "2", "--r", "8", "--json"]);
    assert_eq!(v["type"], 8);

    let v = json(&["family", "gas", "--n0", "7", "--s", "5", "--d", "11", "--p", "4", "--json"]);
    assert_eq!(v["b"], 3);
    assert!(v["pf_closed_form"].is_array());
    assert!(v["minimal_predicate"]["AsStated"].is_boolean());
    assert!(v["minimal_predicate"]["AsProof"].is_boolean());

    let v = json(&["family", "staircase", "--r", "3", "--json"]);
    assert_eq!(v["pf"], serde_json::json!([5, 10, 15]));
    assert_eq!(v["extremality"], "minimal");

    let out = nsg(&["family", "bresinsky", "--h", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("InvalidParam"));
}

#[test]
fn glue_and_dup_commands() {
    let v = json(&["glue", "--s1", "5,6,7", "--s2", "1", "--lambda", "7", "--mu", "26", "--json"]);
    assert_eq!(v["pf"], serde_json::json!([212, 219]));
    assert_eq!(v["pf_closed_form"], serde_json::json!([212, 219]));
    assert_eq!(v["maximal_sufficient"], "no-conclusion");
    assert_eq!(v["extremality"], "maximal");

    let out = nsg(&["glue", "--s1", "5,6,7", "--s2", "1", "--lambda", "7", "--mu", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("MuIsMinimalGenerator"));

    let v = json(&["dup", "--gens", "3,4,5", "--ideal", "5,6,7", "--d", "11", "--json"]);
    assert_eq!(v["pf"], serde_json::json!([2, 4, 15, 17, 19]));
    assert_eq!(v["ideal_kind"], "proper");

    let v = json(&["dup", "--gens", "5,6,7", "--ideal", "S", "--d", "7", "--json"]);
    assert_eq!(v["generators"], serde_json::json!([7, 10, 12, 14]));
    assert_eq!(v["pf"], serde_json::json!([23, 25]));
    assert_eq!(v["min_clause"], "i");

    let v = json(&["dup", "--gens", "3,4,5", "--ideal", "S*", "--d", "11", "--json"]);
    assert_eq!(v["pf_closed_form"], serde_json::json!([2, 4, 11, 13, 15]));
    assert_eq!(v["max_predicate"], false);

    let out = nsg(&["dup", "--gens", "3,4,5", "--ideal", "S", "--d", "8"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("DNotOdd"));
    let out = nsg(&["dup", "--gens", "3,4,5", "--ideal", "2", "--d", "5"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("GeneratorNotInAmbient"));
}

#[test]
fn verify_exit_codes() {
    let out = nsg(&["verify", "thm-3.8", "--h-max", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<Value> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 5);
    for l in &lines {
        let keys: Vec<&str> = l.as_object().unwrap().keys().map(|k| k.as_str()).collect();
        assert_eq!(keys, ["claim", "instance", "match", "closed_form", "oracle"]);
        assert_eq!(l["match"], true);
    }

    let stated = nsg(&["verify", "prop-3.3", "--mode", "AsStated", "--grid", "small"]);
    assert_eq!(stated.status.code(), Some(2));
    let proof = nsg(&["verify", "prop-3.3", "--mode", "AsProof", "--grid", "small"]);
    assert_eq!(proof.status.code(), Some(2));

    assert_eq!(nsg(&["verify", "thm-0.0"]).status.code(), Some(1));
    assert_eq!(nsg(&["verify", "thm-3.8", "--h-max", "500"]).status.code(), Some(1));
    assert_eq!(nsg(&["verify", "all", "--grid", "smoke"]).status.code(), Some(0));
}

#[test]
fn verify_writes_to_file_deterministically() {
    let dir = std::env::temp_dir().join(format!("nsg-verify-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a = dir.join("a.jsonl");
    let b = dir.join("b.jsonl");
    for path in [&a, &b] {
        let out = nsg(&["verify", "thm-5.2", "--grid", "smoke", "--out", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
    }
    let (a, b) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert!(!a.is_empty());
    assert_eq!(a, b);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn sweep_outputs() {
    let out = nsg(&["sweep", "dup-self", "--gens", "5,6,7", "--d-range", "7:31:2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut rows = text.lines();
    assert_eq!(rows.next(), Some("d,frobenius,type,reduced_type,extremality"));
    let rows: Vec<Vec<&str>> = rows.map(|r| r.split(',').collect()).collect();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r[2] == "2"));
    // 9 is odd but not in <5,6,7>.
    assert!(rows.iter().all(|r| r[0] != "9"));

    let text = stdout(&nsg(&["sweep", "uniform-type", "--r-range", "1:8"]));
    let ext: Vec<&str> = text.lines().skip(1).map(|l| l.rsplit(',').next().unwrap()).collect();
    assert_eq!(ext[0], "both");
    assert!(ext[1..].iter().all(|&e| e == "maximal"));

    let text = stdout(&nsg(&["sweep", "staircase", "--r-range", "2:8"]));
    assert!(text.lines().skip(1).all(|l| l.ends_with(",minimal")));

    let a = nsg(&["sweep", "gas", "--n0-range", "3:8", "--s-range", "1:2", "--d-range", "1:5", "--p-range", "2:6"]);
    let b = nsg(&["sweep", "gas", "--n0-range", "3:8", "--s-range", "1:2", "--d-range", "1:5", "--p-range", "2:6"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("n0,s,d,p,frobenius,type,reduced_type,extremality\n"));

    assert_eq!(nsg(&["sweep", "staircase", "--r-range", "2-8"]).status.code(), Some(1));
}

#[test]
fn thread_cap_is_respected() {
    let out = Command::new(env!("CARGO_BIN_EXE_nsg"))
        .args(["verify", "cor-4.2", "--grid", "smoke"])
        .env("NSG_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let single = out.stdout;
    let multi = nsg(&["verify", "cor-4.2", "--grid", "smoke"]).stdout;
    assert_eq!(single, multi);
}
