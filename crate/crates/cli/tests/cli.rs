use std::process::{Command, Output};

use serde_json::Value;

fn umbral(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_umbral")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = umbral(&full);
    (serde_json::from_str(&stdout(&out)).expect("valid json"), out.status.code().unwrap())
}

fn strings(value: &Value) -> Vec<String> {
    value.as_array().unwrap().iter().map(|v| v.as_str().unwrap().to_string()).collect()
}

#[test]
fn expands_euler_in_laguerre() {
    let (doc, code) = json(&["expand", "--family", "euler", "--n", "1", "--basis", "laguerre"]);
    assert_eq!(code, 0);
    assert_eq!(strings(&doc["coefficients"]), ["1/2", "-1"]);
}

#[test]
fn plain_expansions() {
    let out = umbral(&["expand", "--family", "monomial", "--n", "2", "--basis", "laguerre"]);
    assert_eq!(stdout(&out), "2 -4 2\n");
    let out = umbral(&["expand", "--family", "laguerre", "--n", "3", "--basis", "monomial"]);
    assert_eq!(stdout(&out), "1 -3 3/2 -1/6\n");
    let out = umbral(&["expand", "--family", "monomial", "--n", "3", "--basis", "falling-factorial"]);
    assert_eq!(stdout(&out), "0 1 3 1\n");
}

#[test]
fn frobenius_expansion_needs_lambda() {
    let out = umbral(&["expand", "--family", "frobenius-euler", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = umbral(&["expand", "--family", "frobenius-euler", "--n", "1", "--lambda", "-1", "--basis", "monomial"]);
    assert_eq!(stdout(&out), "-1/2 1\n");
}

#[test]
fn tables() {
    let (doc, _) = json(&["table", "--what", "stirling2", "--rows", "4"]);
    assert_eq!(strings(&doc["rows"][4]), ["0", "1", "7", "6", "1"]);
    let (doc, _) = json(&["table", "--what", "bernoulli-numbers", "--rows", "4"]);
    assert_eq!(strings(&doc["values"]), ["1", "-1/2", "1/6", "0", "-1/30"]);
    let (doc, _) = json(&["table", "--what", "euler-numbers", "--rows", "3"]);
    assert_eq!(strings(&doc["values"]), ["1", "-1/2", "0", "1/4"]);
    let (doc, _) = json(&["table", "--what", "frobenius-numbers", "--rows", "3", "--lambda", "-1"]);
    assert_eq!(strings(&doc["values"]), ["1", "-1/2", "0", "1/4"]);
}

#[test]
fn matching_audit_exits_zero() {
    let (doc, code) = json(&["audit", "--identity", "eq26", "--n-max", "12"]);
    assert_eq!(code, 0);
    let reports = doc["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 13);
    assert!(reports.iter().all(|r| r["status"] == "match"));
}

#[test]
fn mismatching_audit_exits_one_with_first_diff() {
    let (doc, code) = json(&["audit", "--identity", "thm1", "--n-max", "4"]);
    assert_eq!(code, 1);
    let bad = doc["reports"].as_array().unwrap().iter().find(|r| r["n"] == 1 && r["k"] == 1).unwrap();
    assert_eq!(bad["status"], "mismatch");
    assert_eq!(bad["first_diff"]["index"], 0);
    assert_eq!(bad["first_diff"]["lhs"], "1");
    assert_eq!(bad["first_diff"]["rhs"], "0");
}

#[test]
fn expected_mismatches_do_not_fail() {
    let out = umbral(&["audit", "--identity", "thm1,eq26", "--n-max", "3", "--expect-mismatch", "thm1"]);
    assert_eq!(out.status.code(), Some(0));
    let out = umbral(&["audit", "--identity", "thm1,eq26", "--n-max", "3", "--expect-mismatch", "eq26"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn lambda_audit_is_certified() {
    let lambdas = "-1,2,1/2,5/3,3,7/2,9";
    let (doc, code) = json(&["audit", "--identity", "thm5", "--n-max", "6", "--lambda", lambdas]);
    assert_eq!(code, 0);
    assert_eq!(doc["reports"].as_array().unwrap().len(), 49);
    let certs = doc["lambda_certified"].as_array().unwrap();
    assert_eq!(certs.len(), 7);
    assert!(certs.iter().all(|c| c["certified"] == true && c["lambdas"] == 7));
    assert_eq!(strings(&doc["run"]["lambda"]).len(), 7);

    let plain = stdout(&umbral(&["audit", "--identity", "thm5", "--n-max", "6", "--lambda", lambdas]));
    assert_eq!(plain.matches("certified in lambda").count(), 7);
}

#[test]
fn too_few_lambdas_do_not_certify() {
    let (doc, _) = json(&["audit", "--identity", "thm5", "--n-max", "3", "--lambda", "2,3"]);
    let certs = doc["lambda_certified"].as_array().unwrap();
    let certified: Vec<_> = certs.iter().map(|c| c["certified"] == true).collect();
    assert_eq!(certified, [true, true, false, false]);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["audit", "--identity", "thm5", "--lambda", "1"][..],
        &["audit", "--identity", "thm5", "--lambda", "2,2/2"],
        &["audit", "--identity", "nope"],
        &["audit", "--binomial", "sometimes"],
        &["audit", "--no-such-flag"],
        &["expand", "--family", "euler", "--n", "x"],
        &["table", "--what", "stirling2", "--rows", "3", "--lambda", "2"],
        &["audit", "--identity", "eq57", "--lambda", "0.5"],
    ] {
        let out = umbral(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn json_and_csv_carry_the_same_numbers() {
    let args = ["audit", "--identity", "thm6-printed,thm1", "--n-max", "3", "--binomial", "generalized,zero-neg"];
    let (doc, _) = json(&args);
    let mut csv_args = vec!["--format", "csv"];
    csv_args.extend_from_slice(&args);
    let csv = stdout(&umbral(&csv_args));
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "identity,n,lambda,convention,status,first_diff_index,first_diff_lhs,first_diff_rhs"
    );
    let rows: Vec<Vec<String>> = lines.map(|l| l.split(',').map(String::from).collect()).collect();
    let reports = doc["reports"].as_array().unwrap();
    assert_eq!(rows.len(), reports.len());
    for (row, r) in rows.iter().zip(reports) {
        let text = |v: &Value| match v {
            Value::Null => String::new(),
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        let id = match r.get("k") {
            Some(k) => format!("{}@k={k}", text(&r["identity"])),
            None => text(&r["identity"]),
        };
        let fd = &r["first_diff"];
        let expected = [
            id,
            text(&r["n"]),
            text(&r["lambda"]),
            text(&r["convention"]),
            text(&r["status"]),
            text(&fd["index"]),
            text(&fd["lhs"]),
            text(&fd["rhs"]),
        ];
        assert_eq!(row, &expected);
    }
}

#[test]
fn markdown_output_is_a_table() {
    let out = stdout(&umbral(&["--format", "md", "audit", "--identity", "eq28", "--n-max", "2"]));
    assert!(out.starts_with("| identity | n |"));
    assert!(out.contains("| eq28 | 2 |"));
    assert!(out.trim_end().ends_with("3/3 reports match"));
}

#[test]
fn diff_of_printed_and_corrected_forms() {
    let (doc, code) = json(&["diff", "--a", "thm3-printed", "--b", "thm3-eq35", "--n-max", "4"]);
    assert_eq!(code, 1);
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[0]["diverges"], false);
    assert!(rows[1..].iter().all(|r| r["diverges"] == true && r["status_b"] == "match"));
}

#[test]
fn diff_reads_saved_documents() {
    let (doc, _) = json(&["audit", "--identity", "thm6-printed,thm6-eq35", "--n-max", "3"]);
    let path = std::env::temp_dir().join(format!("umbral-diff-{}.json", std::process::id()));
    std::fs::write(&path, doc.to_string()).unwrap();
    let from = path.to_str().unwrap();
    let (saved, code) = json(&["diff", "--a", "thm6-printed", "--b", "thm6-eq35", "--from", from]);
    let (fresh, _) = json(&["diff", "--a", "thm6-printed", "--b", "thm6-eq35", "--n-max", "3"]);
    assert_eq!(code, 1);
    assert_eq!(saved, fresh);

    let out = umbral(&["diff", "--a", "thm6-printed", "--b", "thm5", "--from", from]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::write(&path, "{\"run\": 3}").unwrap();
    let out = umbral(&["diff", "--a", "thm6-printed", "--b", "thm6-eq35", "--from", from]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn diff_rejects_uneven_coverage() {
    let out = umbral(&["diff", "--a", "thm5", "--b", "thm3-eq35", "--n-max", "2", "--lambda", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_output_is_deterministic() {
    let args = ["--format", "json", "audit", "--identity", "hfinal-printed,thm5", "--n-max", "5"];
    assert_eq!(umbral(&args).stdout, umbral(&args).stdout);
}
