use std::fmt::Write;

use serde_json::Value;

/// Plain-text layout of a JSON report: one `key: value` line per scalar,
/// nested objects indented, arrays of scalars joined on one line.
pub fn text(report: &Value) -> String {
    let mut out = String::new();
    block(&mut out, report, 0);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            Some(items.iter().filter_map(scalar).collect::<Vec<_>>().join(", "))
        }
        _ => None,
    }
}

fn block(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                match scalar(v) {
                    Some(s) => writeln!(out, "{pad}{k}: {s}").unwrap(),
                    None => {
                        writeln!(out, "{pad}{k}:").unwrap();
                        block(out, v, indent + 1);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match scalar(item) {
                    Some(s) => writeln!(out, "{pad}- {s}").unwrap(),
                    None => {
                        writeln!(out, "{pad}-").unwrap();
                        block(out, item, indent + 1);
                    }
                }
            }
        }
        other => writeln!(out, "{pad}{}", scalar(other).unwrap_or_default()).unwrap(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn nested_layout() {
        let v = json!({"status": "fails", "witness": {"x": "1", "y": "-1"}, "list": [1, 2]});
        assert_eq!(text(&v), "status: fails\nwitness:\n  x: 1\n  y: -1\nlist: 1, 2\n");
    }

    #[test]
    fn arrays_of_objects() {
        let v = json!({"rows": [{"n": 1}, {"n": 2}]});
        assert_eq!(text(&v), "rows:\n  -\n    n: 1\n  -\n    n: 2\n");
    }
}
