#![allow(dead_code)]

use serde_json::Value;
use torsal::cli;
use torsal::polyring::{Polynomial, VarContext};

pub fn poly(text: &str, vars: &str) -> Polynomial {
    cli::expr::parse(text, &VarContext::parse_list(vars).unwrap()).unwrap()
}

pub fn z(text: &str) -> Polynomial {
    poly(text, "z0,z1,z2,z3,z4")
}

/// Runs the CLI and parses its output as JSON.
pub fn run_json(args: &[&str]) -> (i32, Value) {
    let (code, out) = cli::run(std::iter::once("torsal").chain(args.iter().copied()));
    let v =
        serde_json::from_str(&out).unwrap_or_else(|e| panic!("output is not JSON ({e}): {out}"));
    (code, v)
}

pub fn load_schema(name: &str) -> Value {
    let path = format!("{}/schemas/{name}.schema.json", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    serde_json::from_str(&text).unwrap()
}

/// Validates `instance` against the named schema; returns the error messages.
pub fn schema_errors(name: &str, instance: &Value) -> Vec<String> {
    let schema = load_schema(name);
    let validator = jsonschema::validator_for(&schema).unwrap_or_else(|e| panic!("{name}: {e}"));
    validator
        .iter_errors(instance)
        .map(|e| format!("{} at {}", e, e.instance_path()))
        .collect()
}

/// Schema for a CLI document: the command's own, or the error schema.
pub fn schema_for(v: &Value) -> String {
    match v.get("command").and_then(Value::as_str) {
        Some(cmd) => cmd.to_string(),
        None => "error".to_string(),
    }
}
