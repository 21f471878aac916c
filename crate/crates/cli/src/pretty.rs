//! Indented text rendering of a JSON report.

use serde_json::Value;

/// Arrays of strings print as `{a b c}`, arrays of those as a comma list,
/// objects as `key: value` lines.
pub fn render(v: &Value) -> String {
    let mut out = String::new();
    block(v, 0, &mut out);
    out
}

fn inline(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(if *b { "yes".into() } else { "no".into() }),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| i.is_string()) => {
            let parts: Vec<&str> = items.iter().filter_map(Value::as_str).collect();
            Some(format!("{{{}}}", parts.join(" ")))
        }
        Value::Array(items) if items.iter().all(|i| i.is_number()) => {
            let parts: Vec<String> = items.iter().map(|i| i.to_string()).collect();
            Some(format!("[{}]", parts.join(" ")))
        }
        Value::Array(items) if items.iter().all(|i| i.is_array() && inline(i).is_some()) => {
            let parts: Vec<String> = items.iter().filter_map(inline).collect();
            Some(parts.join(", "))
        }
        _ => None,
    }
}

fn block(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match inline(val) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        block(val, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match inline(item) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        block(item, depth + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", inline(other).unwrap_or_default())),
    }
}
