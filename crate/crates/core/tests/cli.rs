use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_parafermion"));
    c.env_remove("PARAFERMION_DEGREE");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn parafermion_report() {
    let o = run(&["verify", "--identity", "parafermion", "--n", "2", "--p", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let r = &json_lines(&o)[0];
    for key in ["identity", "n", "m", "p", "degree", "status", "first_discrepancy", "millis"] {
        assert!(r.get(key).is_some(), "missing {key}");
    }
    assert_eq!(r["identity"], "parafermion");
    assert_eq!(r["status"], "pass");
    assert_eq!(r["first_discrepancy"], Value::Null);
}

#[test]
fn cohomology_table() {
    let o = run(&["cohomology", "--n", "2", "--p", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let entries = v["entries"].as_array().unwrap();
    let rows: Vec<(u64, Value)> = entries.iter().map(|e| (e["degree"].as_u64().unwrap(), e["diagram"].clone())).collect();
    assert_eq!(
        rows,
        vec![
            (0, serde_json::json!([])),
            (1, serde_json::json!([2])),
            (2, serde_json::json!([3, 1])),
            (3, serde_json::json!([3, 3])),
        ]
    );

    let tsv = run(&["cohomology", "--n", "2", "--p", "1", "--format", "tsv", "--route", "partitions"]);
    let lines: Vec<String> = stdout(&tsv).lines().map(String::from).collect();
    assert_eq!(lines.len(), 5);
    assert!(lines[0].starts_with("k\tdiagram"));
    assert!(lines[3].starts_with("2\t3,1\t"));
}

#[test]
fn limits_and_usage_errors() {
    let o = run(&["verify", "--identity", "parastat", "--n", "9999", "--m", "1", "--p", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());

    let o = run(&["verify", "--identity", "weyl-character", "--n", "7", "--p", "1"]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(&["schur", "--lambda", "2,1", "--n", "2", "--frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"));

    let o = run(&["schur", "--lambda", "1,2", "--n", "2"]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(&["cohomology", "--n", "0"]);
    assert_eq!(o.status.code(), Some(2));

    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn strict_mode() {
    let base = ["verify", "--identity", "paraboson", "--n", "2", "--p", "1", "--degree", "6", "--alt-denominator"];
    let o = run(&base);
    assert_eq!(o.status.code(), Some(0));
    let r = &json_lines(&o)[0];
    assert_eq!(r["status"], "fail");
    assert_eq!(r["denominator"], "symmetric-square");
    assert_eq!(r["first_discrepancy"]["degree"], 2);
    assert!(r["first_discrepancy"]["monomial"].is_array());

    let mut strict = base.to_vec();
    strict.push("--strict");
    assert_eq!(run(&strict).status.code(), Some(1));

    let ok = run(&["verify", "--identity", "paraboson", "--n", "2", "--p", "1", "--degree", "6", "--strict"]);
    assert_eq!(ok.status.code(), Some(0));
}

#[test]
fn sweep_order_and_determinism() {
    let args = ["verify", "--identity", "parafermion", "--n", "1..3", "--p", "0..2", "--sweep"];
    let a = bin().args(args).env("RAYON_NUM_THREADS", "1").output().unwrap();
    let b = bin().args(args).env("RAYON_NUM_THREADS", "4").output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let cells: Vec<(u64, u64)> = json_lines(&a).iter().map(|r| (r["n"].as_u64().unwrap(), r["p"].as_u64().unwrap())).collect();
    let expected: Vec<(u64, u64)> = (1..=3).flat_map(|n| (0..=2).map(move |p| (n, p))).collect();
    assert_eq!(cells, expected);

    let range_without_sweep = run(&["verify", "--identity", "parafermion", "--n", "1..3"]);
    assert_eq!(range_without_sweep.status.code(), Some(2));
}

#[test]
fn tsv_carries_json_data() {
    let args = ["verify", "--identity", "parastat", "--n", "1", "--m", "1", "--p", "1", "--degree", "5"];
    let json = &json_lines(&run(&args))[0];
    let mut tsv_args = args.to_vec();
    tsv_args.extend(["--format", "tsv"]);
    let tsv = stdout(&run(&tsv_args));
    let mut lines = tsv.lines();
    let header: Vec<&str> = lines.next().unwrap().split('\t').collect();
    let row: Vec<&str> = lines.next().unwrap().split('\t').collect();
    assert_eq!(header.len(), row.len());
    let col = |name: &str| row[header.iter().position(|h| *h == name).unwrap()];
    assert_eq!(col("identity"), "parastat");
    assert_eq!(col("status"), json["status"].as_str().unwrap());
    assert_eq!(col("degree"), "5");
    assert_eq!(col("conjecture"), "true");
}

#[test]
fn degree_from_environment() {
    let o = bin()
        .args(["verify", "--identity", "paraboson", "--n", "1", "--p", "1"])
        .env("PARAFERMION_DEGREE", "7")
        .output()
        .unwrap();
    assert_eq!(json_lines(&o)[0]["degree"], 7);
    let o = run(&["verify", "--identity", "paraboson", "--n", "1", "--p", "1"]);
    assert_eq!(json_lines(&o)[0]["degree"], 10);
}

#[test]
fn timing_is_opt_in() {
    let o = run(&["verify", "--identity", "parafermion", "--n", "1", "--p", "1", "--timing"]);
    assert!(json_lines(&o)[0]["millis"].is_u64());
}

#[test]
fn schur_outputs() {
    let o = run(&["schur", "--lambda", "1", "--n", "2"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["nvars"], 2);
    assert_eq!(
        v["terms"],
        serde_json::json!([{"exp": [0, 2], "coef": "1"}, {"exp": [2, 0], "coef": "1"}])
    );
    let jt = run(&["schur", "--lambda", "2,1", "--n", "3", "--algorithm", "jt"]);
    for alg in ["alt", "tab"] {
        assert_eq!(run(&["schur", "--lambda", "2,1", "--n", "3", "--algorithm", alg]).stdout, jt.stdout);
    }
    let hook = run(&["hook-schur", "--lambda", "1", "--n", "1", "--m", "1"]);
    assert_eq!(run(&["schur", "--lambda", "1", "--n", "1", "--m", "1"]).stdout, hook.stdout);
    let tsv = stdout(&run(&["hook-schur", "--lambda", "1", "--n", "1", "--m", "1", "--format", "tsv"]));
    assert_eq!(tsv, "exp\tcoef\n0,2\t1\n2,0\t1\n");
}

#[test]
fn w1_listing() {
    let o = run(&["w1", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(run(&["weyl", "w1", "--n", "3"]).stdout, o.stdout);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let elements = v["elements"].as_array().unwrap();
    assert_eq!(elements.len(), 8);
    let e = elements.iter().find(|e| e["subset"] == serde_json::json!([1, 3])).unwrap();
    assert_eq!(e["word"], serde_json::json!([2, 3, 1]));
    assert_eq!(e["phi"], 4);
    assert_eq!(e["mu"], serde_json::json!([3, 2, 1]));
}

#[test]
fn branch_and_dims() {
    let o = run(&["branch", "--n", "2", "--p", "1"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 4);
    let o = run(&["dims", "--n", "2", "--p", "2"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["so"], "10");
    assert_eq!(v["equal"], true);
}
