use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Violation,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Violation => 1,
            Status::Error => 2,
        }
    }
}

/// The machine-readable outcome of one command. Key order inside `results`
/// is sorted, so identical inputs serialize to identical bytes.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<String>,
    pub status: Status,
    pub results: Value,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("reports are plain data");
        text.push('\n');
        text
    }

    /// Human-readable rendering of [`Report::to_json`].
    pub fn to_text(&self) -> String {
        let value = serde_json::to_value(self).expect("reports are plain data");
        let mut out = String::new();
        if let Value::Object(map) = &value {
            render_map(map, 0, &mut out);
        }
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_array() && !i.is_object()) => {
            let parts: Vec<String> = items.iter().map(|i| scalar(i).unwrap_or_default()).collect();
            Some(format!("[{}]", parts.join(", ")))
        }
        _ => None,
    }
}

fn render_map(map: &Map<String, Value>, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    for (key, v) in map {
        match scalar(v) {
            Some(s) => out.push_str(&format!("{pad}{key}: {s}\n")),
            None => {
                out.push_str(&format!("{pad}{key}:\n"));
                render_nested(v, depth + 1, out);
            }
        }
    }
}

fn render_nested(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => render_map(map, depth, out),
        Value::Array(items) => {
            for item in items {
                match (scalar(item), item) {
                    (Some(s), _) => out.push_str(&format!("{pad}- {s}\n")),
                    (None, Value::Object(map)) if map.values().all(|x| scalar(x).is_some()) => {
                        let fields: Vec<String> =
                            map.iter().map(|(k, x)| format!("{k}: {}", scalar(x).unwrap_or_default())).collect();
                        out.push_str(&format!("{pad}- {}\n", fields.join(", ")));
                    }
                    (None, other) => {
                        out.push_str(&format!("{pad}-\n"));
                        render_nested(other, depth + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Report {
        Report {
            command: "kernel".into(),
            inputs: vec!["t2.cayley".into()],
            status: Status::Ok,
            results: json!({"kernel": [0, 3], "sizes": {"S": 2}, "rows": [[0, 1], [1, 0]]}),
        }
    }

    #[test]
    fn text_follows_json() {
        let text = sample().to_text();
        assert!(text.contains("command: kernel\n"));
        assert!(text.contains("status: ok\n"));
        assert!(text.contains("  kernel: [0, 3]\n"));
        assert!(text.contains("    S: 2\n"));
        assert!(text.contains("    - [0, 1]\n"));
    }

    #[test]
    fn json_keys_are_sorted() {
        let json = sample().to_json();
        assert!(json.find("\"kernel\"").unwrap() < json.find("\"rows\"").unwrap());
        assert!(json.find("\"rows\"").unwrap() < json.find("\"sizes\"").unwrap());
        assert_eq!(Status::Violation.exit_code(), 1);
    }
}
