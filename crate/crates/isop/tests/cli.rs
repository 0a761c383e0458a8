//! End-to-end tests of the binary: exit codes, output shapes, and schema
//! validation of every JSON-emitting subcommand.

use serde_json::Value;
use std::io::Write;
use std::process::{Command, Output};

fn isop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

/// Minimal validator for the schema subset the shipped schemas use:
/// type, required, properties, additionalProperties: false, items, minimum.
fn validates(schema: &Value, value: &Value) -> Result<(), String> {
    fn type_matches(ty: &str, value: &Value) -> Result<bool, String> {
        Ok(match ty {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "integer" => value.as_i64().is_some() || value.as_u64().is_some(),
            "string" => value.is_string(),
            "boolean" => value.is_boolean(),
            "null" => value.is_null(),
            other => return Err(format!("unsupported schema type {other}")),
        })
    }
    match schema.get("type") {
        Some(Value::String(ty)) => {
            if !type_matches(ty, value)? {
                return Err(format!("expected {ty}, got {value}"));
            }
        }
        Some(Value::Array(types)) => {
            let mut ok = false;
            for ty in types {
                ok |= type_matches(ty.as_str().expect("type name"), value)?;
            }
            if !ok {
                return Err(format!("expected one of {types:?}, got {value}"));
            }
        }
        _ => {}
    }
    if let Some(min) = schema.get("minimum").and_then(Value::as_i64) {
        let v = value.as_i64().unwrap_or(i64::MAX);
        if v < min {
            return Err(format!("{v} below minimum {min}"));
        }
    }
    if let Some(obj) = value.as_object() {
        if let Some(required) = schema.get("required").and_then(Value::as_array) {
            for key in required {
                let key = key.as_str().expect("string key");
                if !obj.contains_key(key) {
                    return Err(format!("missing required key {key}"));
                }
            }
        }
        let props = schema.get("properties").and_then(Value::as_object);
        if let Some(props) = props {
            for (key, sub) in obj {
                match props.get(key) {
                    Some(sub_schema) => {
                        validates(sub_schema, sub).map_err(|e| format!("{key}: {e}"))?
                    }
                    None => {
                        if schema.get("additionalProperties") == Some(&Value::Bool(false)) {
                            return Err(format!("unexpected key {key}"));
                        }
                    }
                }
            }
        }
    }
    if let (Some(items), Some(arr)) = (schema.get("items"), value.as_array()) {
        for (i, item) in arr.iter().enumerate() {
            validates(items, item).map_err(|e| format!("[{i}]: {e}"))?;
        }
    }
    Ok(())
}

fn load_schema(name: &str) -> Value {
    let path = format!("{}/schemas/{name}", env!("CARGO_MANIFEST_DIR"));
    serde_json::from_str(&std::fs::read_to_string(path).expect("schema file"))
        .expect("schema parses")
}

fn assert_schema(name: &str, value: &Value) {
    let schema = load_schema(name);
    if let Err(e) = validates(&schema, value) {
        panic!("{name} violation: {e}\nvalue: {value}");
    }
}

#[test]
fn table_csv_matches_published_rows() {
    let out = isop(&["table", "--n-max", "55"]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,e,delta");
    assert_eq!(lines.len(), 54); // header + 53 rows
    assert_eq!(lines[1], "3,3,");
    assert_eq!(lines[2], "4,6,3");
    assert_eq!(lines[5], "7,18,5");
    assert_eq!(lines[53], "55,258,6");
}

#[test]
fn table_json_validates() {
    let out = isop(&["table", "--n-max", "10", "--format", "json"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_schema("table.schema.json", &v);
    assert_eq!(v[0]["n"], 3);
    assert_eq!(v[0]["delta"], Value::Null);
    assert_eq!(v[7]["e"], 30);
}

#[test]
fn solve_tri_n7() {
    let out = isop(&["solve", "--n", "7"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_schema("solve.schema.json", &v);
    assert_eq!(v["best_edges"], 18);
    assert_eq!(v["best_boundary"], 48);
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 1);
    assert_eq!(v["witnesses"][0].as_array().unwrap().len(), 7);
}

#[test]
fn solve_counterexample_pair() {
    let out = isop(&["solve", "--n", "2", "--d", "2"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_schema("solve.schema.json", &v);
    assert_eq!(v["best_edges"], 1);
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 3);
}

#[test]
fn solve_budget_exhaustion_reports_error() {
    let out = isop(&["solve", "--n", "9", "--budget-sets", "50"]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value =
        serde_json::from_str(String::from_utf8_lossy(&out.stderr).trim()).expect("json stderr");
    assert_eq!(err["error"]["kind"], "budget");
}

#[test]
fn order_jsonl_and_csv() {
    let out = isop(&["order", "--n", "56"]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 56);
    for line in &lines {
        let v: Value = serde_json::from_str(line).unwrap();
        assert_schema("order-record.schema.json", &v);
    }
    let last: Value = serde_json::from_str(lines[55]).unwrap();
    assert_eq!(last["cumulative_edges"], 263);

    let out = isop(&["order", "--n", "7", "--format", "csv"]);
    let text = stdout_str(&out);
    assert!(text.starts_with("index,a,b,edges_added,cumulative_edges\n"));
    assert_eq!(text.lines().count(), 8);
    assert!(text.lines().last().unwrap().ends_with(",18"));
}

#[test]
fn verify_base_cases_passes() {
    let out = isop(&["verify", "base-cases"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_schema("verify-base.schema.json", &v);
    assert_eq!(v["pass"], true);
    assert_eq!(v["entries"].as_array().unwrap().len(), 6);
}

#[test]
fn verify_inductive_passes() {
    let out = isop(&["verify", "inductive"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_schema("verify-inductive.schema.json", &v);
    assert_eq!(v["pass"], true);
    assert_eq!(v["exceptional_formula"]["a"], -96);
    assert_eq!(v["exceptional_formula"]["c"], 0);
}

#[test]
fn verify_nested_small() {
    let out = isop(&["verify", "nested", "--n-max", "60"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_schema("verify-nested.schema.json", &v);
    assert_eq!(v["prefixes_checked"], 60);
}

#[test]
fn sequence_reports_graph_and_moves() {
    let out = isop(&["sequence"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_schema("sequence.schema.json", &v);
    assert_eq!(v["nodes"], 1152);
    assert_eq!(v["edges"], 2550);
    assert_eq!(v["path_length"], 48);
    assert_eq!(v["a_values"].as_array().unwrap().len(), 49);
    assert_eq!(v["a_values"][0], -96);
    assert_eq!(v["a_values"][48], -96);
    assert_eq!(v["reference_path_validated"], true);
}

#[test]
fn hull_json_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("points.json");
    let mut f = std::fs::File::create(&input).unwrap();
    write!(f, "[[0,0],[1,0]]").unwrap();

    let out = isop(&["hull", "--in", input.to_str().unwrap()]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_schema("hull.schema.json", &v);
    assert_eq!(v["points"], serde_json::json!([[0, 0], [1, 0]]));

    let out = isop(&["hull", "--in", input.to_str().unwrap(), "--format", "svg"]);
    assert!(out.status.success());
    assert!(stdout_str(&out).starts_with("<svg"));
}

#[test]
fn counterexample_report() {
    let out = isop(&["counterexample", "--n-max", "4"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_schema("counterexample.schema.json", &v);
    assert_eq!(v["truncated"], false);
    assert_eq!(v["levels"].as_array().unwrap().len(), 4);
}

#[test]
fn render_ordering_prefix() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig.svg");
    let out = isop(&["render", "--order-n", "20", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<circle").count(), 20);
    assert_eq!(svg.matches("<text").count(), 20);
}

#[test]
fn render_singleton_is_one_circle() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("one.json");
    std::fs::write(&input, "[[0,0]]").unwrap();
    let out = isop(&["render", "--in", input.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout_str(&out).matches("<circle").count(), 1);
}

#[test]
fn solve_three_dimensional() {
    let out = isop(&["solve", "--n", "4", "--d", "3"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_schema("solve.schema.json", &v);
    // four collinear points along e1 carry 2 unit + 2 double steps + ... the
    // exact optimum is pinned by the exhaustive search itself; sanity-check
    // the handshake instead: degree 8, so boundary = 8*4 - 2*edges.
    let edges = v["best_edges"].as_u64().unwrap();
    assert_eq!(v["best_boundary"].as_u64().unwrap(), 32 - 2 * edges);
}

#[test]
fn usage_errors_exit_2() {
    let out = isop(&["table", "--n-max", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value =
        serde_json::from_str(String::from_utf8_lossy(&out.stderr).trim()).expect("json stderr");
    assert_eq!(err["error"]["kind"], "usage");

    // unknown flags rejected by the parser
    let out = isop(&["table", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn asset_dir_override_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("first55.jsonl"), "not json\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_isop"))
        .args(["order", "--n", "10"])
        .env("ISOP_ASSET_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err: Value =
        serde_json::from_str(String::from_utf8_lossy(&out.stderr).trim()).expect("json stderr");
    assert_eq!(err["error"]["kind"], "asset");
}

#[test]
fn deterministic_output_across_runs_and_threads() {
    let a = isop(&["solve", "--n", "6"]);
    let b = isop(&["solve", "--n", "6", "--threads", "1"]);
    let c = isop(&["solve", "--n", "6", "--threads", "4"]);
    assert_eq!(stdout_str(&a), stdout_str(&b));
    assert_eq!(stdout_str(&a), stdout_str(&c));
}
