//! Plain-text rendering of a JSON result: one `key: value` line per field,
//! with arrays listed one item per line.

use std::fmt::Write;

use serde_json::Value;

pub fn render(v: &Value) -> String {
    let mut s = String::new();
    write_value(&mut s, "", v, 0);
    s
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => {
            let parts: Vec<String> = a.iter().map(|x| scalar(x).unwrap_or_default()).collect();
            Some(format!("({})", parts.join(",")))
        }
        Value::Array(_) | Value::Object(_) => None,
        Value::String(t) => Some(t.clone()),
        other => Some(other.to_string()),
    }
}

fn write_value(s: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    let label = if key.is_empty() { String::new() } else { format!("{key}: ") };
    if let Some(text) = scalar(v) {
        let _ = writeln!(s, "{pad}{label}{text}");
        return;
    }
    match v {
        Value::Object(map) => {
            let inner = if key.is_empty() {
                depth
            } else {
                let _ = writeln!(s, "{pad}{key}:");
                depth + 1
            };
            for (k, x) in map {
                write_value(s, k, x, inner);
            }
        }
        Value::Array(items) => {
            let _ = writeln!(s, "{pad}{label}[{} items]", items.len());
            for x in items {
                write_value(s, "-", x, depth + 1);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}
