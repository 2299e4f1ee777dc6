//! Output conventions shared by every subcommand.
//!
//! Exact values serialize as strings ("13/2", "40320") so nothing is
//! rounded on the way out; floating-point values are wrapped in an
//! explicit {"float": ...} object. Every run starts with its fully
//! resolved parameter set, as a `# key=value` header line in text and
//! CSV modes and as the "params" field in JSON mode. JSON maps are
//! ordered, so identical invocations are byte-identical.

use eulerfirst::arith::Ratio;
use eulerfirst::poly::Poly;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Exact rational as a string field.
pub fn rat(r: &Ratio) -> Value {
    Value::String(r.to_string())
}

/// Explicitly tagged float field.
pub fn flo(x: f64) -> Value {
    json!({ "float": x })
}

/// Polynomial as a dense array of exact coefficient strings.
pub fn poly_coeffs(p: &Poly) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| Value::String(c.to_string()))
            .collect(),
    )
}

/// Decimal rendering of an exact rational for text output: 12
/// significant digits, clearly marked as approximate.
pub fn approx(r: &Ratio) -> String {
    match r.to_f64() {
        Some(x) => format!("{:.11e}", x),
        None => "overflow".into(),
    }
}

/// The `# key=value ...` header line for text and CSV modes.
pub fn echo_line(command: &str, params: &Map<String, Value>) -> String {
    let mut parts = vec![format!("command={command}")];
    for (k, v) in params {
        let rendered = match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        parts.push(format!("{k}={rendered}"));
    }
    format!("# {}", parts.join(" "))
}

/// Full JSON envelope: command, resolved params, result payload.
pub fn envelope(command: &str, params: Map<String, Value>, result: Value) -> Value {
    json!({
        "command": command,
        "params": Value::Object(params),
        "result": result,
    })
}

pub fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}
