//! Plain-text rendering of the JSON reports.

use serde_json::Value;

/// `{"fw": [...]}` prints as `(a,b,...)`.
fn as_weight(v: &Value) -> Option<String> {
    let obj = v.as_object()?;
    if obj.len() != 1 {
        return None;
    }
    let coords = obj.get("fw")?.as_array()?;
    let parts: Option<Vec<&str>> = coords.iter().map(Value::as_str).collect();
    Some(format!("({})", parts?.join(",")))
}

/// Renders scalars, weights and flat lists on one line; `None` otherwise.
fn inline(v: &Value) -> Option<String> {
    if let Some(w) = as_weight(v) {
        return Some(w);
    }
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) => {
            let parts: Option<Vec<String>> = items.iter().map(inline).collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
        Value::Object(obj) => {
            let parts: Option<Vec<String>> = obj
                .iter()
                .map(|(k, v)| inline(v).filter(|s| !s.contains('\n')).map(|s| format!("{k}={s}")))
                .collect();
            parts.map(|p| p.join(" "))
        }
    }
}

fn block(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Array(items) => {
            for item in items {
                match inline(item) {
                    Some(s) => out.push_str(&format!("{pad}{s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        block(item, indent + 2, out);
                    }
                }
            }
        }
        Value::Object(obj) => {
            for (k, item) in obj {
                match item {
                    Value::Array(a) if a.iter().any(|x| x.is_object() || x.is_array()) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        block(item, indent + 2, out);
                    }
                    _ => match inline(item) {
                        Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                        None => {
                            out.push_str(&format!("{pad}{k}:\n"));
                            block(item, indent + 2, out);
                        }
                    },
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", inline(v).unwrap_or_default())),
    }
}

pub fn text(v: &Value) -> String {
    let mut out = String::new();
    match v {
        Value::Array(_) | Value::Object(_) => block(v, 0, &mut out),
        _ => out.push_str(&format!("{}\n", inline(v).unwrap_or_default())),
    }
    out
}
